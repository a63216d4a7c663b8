"""Stable homotopy groups of matrix Grassmannians Gr_{k,l} and frame spaces Fr_{k,l}.

Closed forms are valid in degrees r <= 2*min(k, l); anything above that
raises :class:`UnstableRangeError`.  :func:`exact_sequence_oracle` recomputes
the groups independently from the integer maps of the fibration
PU(k) x PU(l) -> PU(kl) -> Gr_{k,l} with Smith normal forms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DimensionError, FabError, UnstableRangeError
from .exact import Matrix, invert, smith_normal_form

__all__ = [
    "AbelianGroup",
    "InducedMapReport",
    "StablePair",
    "stable_range",
    "pi_grassmannian",
    "pi_frame_space",
    "induced_map",
    "fab_inverse_map_order",
    "frame_space_induced_order",
    "exact_sequence_oracle",
    "cokernel",
    "kernel_of_homomorphism",
]


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank + Z/d_1 + ... with d_1 | d_2 | ... and every d_i >= 2."""

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(self.torsion)
        object.__setattr__(self, "torsion", t)
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if any(d < 2 for d in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not an invariant-factor chain")

    @classmethod
    def from_cyclic_orders(cls, orders: Sequence[int]) -> AbelianGroup:
        """Direct sum of Z/d for d in ``orders`` (d = 0 means Z), normalized."""
        rank = sum(1 for d in orders if d == 0)
        finite = [abs(d) for d in orders if d not in (0, 1, -1)]
        if not finite:
            return cls(rank)
        diag = smith_normal_form([[d if i == j else 0 for j in range(len(finite))] for i, d in enumerate(finite)])
        return cls(rank, tuple(d for d in diag.invariant_factors if d > 1))

    @classmethod
    def cyclic(cls, d: int) -> AbelianGroup:
        return cls.from_cyclic_orders([d])

    @property
    def order(self) -> int | None:
        """Cardinality, or None when infinite."""
        return None if self.rank else math.prod(self.torsion)

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, obj: dict) -> AbelianGroup:
        return cls(int(obj["rank"]), tuple(int(d) for d in obj["torsion"]))


TRIVIAL = AbelianGroup()
Z = AbelianGroup(1)


@dataclass(frozen=True)
class StablePair:
    k: int
    l: int

    def __post_init__(self):
        _check_gt_one(self.k, self.l)

    @property
    def bound(self) -> int:
        return stable_range(self.k, self.l)


@dataclass(frozen=True)
class InducedMapReport:
    """Map pi_r(Gr_{k,l}) -> pi_r(Gr_{m,n}) induced by M_{kl} -> M_{mn}.

    kind is ``"multiplication"`` (Z -> Z by ``factor``), ``"cyclic-image"``
    (finite groups; image generated by ``image_generator`` of order
    ``image_order``) or ``"zero"``.  For the degree-2 monomorphism the
    multiplier is not determined, so ``image_generator`` is None there.
    """

    source: AbelianGroup
    target: AbelianGroup
    kind: str
    factor: int | None = None
    image_generator: int | None = None
    image_order: int | None = None
    injective: bool = False
    degree: int = field(default=0, compare=False)

    @property
    def is_isomorphism(self) -> bool:
        if self.kind == "multiplication":
            return abs(self.factor) == 1
        return self.injective and self.image_order == self.target.order

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "kind": self.kind,
            "factor": self.factor,
            "image_generator": self.image_generator,
            "image_order": self.image_order,
            "injective": self.injective,
            "isomorphism": self.is_isomorphism,
        }


def _check_gt_one(*values: int) -> None:
    if any(v <= 1 for v in values):
        raise DimensionError(f"parameters must be integers > 1, got {values}")


def stable_range(k: int, l: int) -> int:
    _check_gt_one(k, l)
    return 2 * min(k, l)


def _check_degree(r: int, bound: int) -> None:
    # the boundary degree 2*min(k, l) is included
    if not 1 <= r <= bound:
        raise UnstableRangeError(f"degree {r} is outside the stable range 1..{bound}")


def pi_grassmannian(r: int, k: int, l: int) -> AbelianGroup:
    """pi_r(Gr_{k,l}) for 1 <= r <= 2*min(k, l)."""
    _check_degree(r, stable_range(k, l))
    if r % 2 == 0 and r >= 4:
        return Z
    return AbelianGroup.cyclic(math.gcd(k, l))


def pi_frame_space(r: int, k: int, l: int) -> AbelianGroup:
    """pi_r(Fr_{k,l}) for 1 <= r <= 2l: zero in even degrees, Z/k in odd ones."""
    _check_gt_one(k, l)
    _check_degree(r, 2 * l)
    return TRIVIAL if r % 2 == 0 else AbelianGroup.cyclic(k)


def _additive_order(x: int, d: int) -> int:
    """Order of x in Z/d."""
    return d // math.gcd(x % d, d)


def induced_map(r: int, k: int, l: int, m: int, n: int) -> InducedMapReport:
    _check_gt_one(k, l, m, n)
    if m % k or n % l:
        raise DimensionError(f"need k | m and l | n, got k={k}, l={l}, m={m}, n={n}")
    _check_degree(r, stable_range(k, l))
    source = pi_grassmannian(r, k, l)
    target = pi_grassmannian(r, m, n)
    d_src, d_tgt = math.gcd(k, l), math.gcd(m, n)
    if r % 2 == 0 and r >= 4:
        factor = d_tgt // d_src
        return InducedMapReport(source, target, "multiplication", factor=factor, injective=factor != 0, degree=r)
    if r == 2:
        kind = "zero" if d_src == 1 else "cyclic-image"
        return InducedMapReport(source, target, kind, image_order=d_src, injective=True, degree=r)
    residue = (m * n // (k * l)) % d_tgt
    order = _additive_order(residue, d_tgt)
    kind = "zero" if order == 1 else "cyclic-image"
    return InducedMapReport(
        source, target, kind, image_generator=residue, image_order=order, injective=order == d_src, degree=r
    )


def fab_inverse_map_order(k: int, l: int, m: int, n: int, r: int) -> int:
    """Order of the image of pi_r(Gr_{k,l}) in pi_r(Gr_{m,n}) for odd r."""
    if r % 2 == 0:
        raise ValueError("degree must be odd")
    return induced_map(r, k, l, m, n).image_order


def frame_space_induced_order(k: int, l: int, m: int, n: int) -> int:
    """Order of mn/kl in Z/m: the image size of Z/k -> Z/m on odd frame-space groups."""
    _check_gt_one(k, l, m, n)
    if m % k or n % l:
        raise DimensionError(f"need k | m and l | n, got k={k}, l={l}, m={m}, n={n}")
    return _additive_order(m * n // (k * l), m)


# ---------------------------------------------------------------------------
# exact-sequence oracle
# ---------------------------------------------------------------------------

def cokernel(a: Sequence[Sequence[int]], rows: int | None = None) -> AbelianGroup:
    """Z^rows / (column span of a)."""
    if not a or not a[0]:
        return AbelianGroup(rows if rows is not None else len(a))
    d = smith_normal_form(a).invariant_factors
    m = len(a)
    return AbelianGroup.from_cyclic_orders(list(d) + [0] * (m - len(d)))


def _kernel_lattice(a: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Z-basis (as columns, returned as a list of vectors) of {x in Z^ncols : a x = 0}."""
    if not a:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    snf = smith_normal_form(a)
    d = snf.invariant_factors
    V = snf.V.to_int_rows()
    nonzero = sum(1 for x in d if x)
    return [[V[i][j] for i in range(ncols)] for j in range(nonzero, ncols)]


def _lattice_basis(vectors: list[list[int]], dim: int) -> list[list[int]]:
    """Basis of the lattice spanned by ``vectors`` in Z^dim."""
    if not vectors:
        return []
    cols = [[v[i] for v in vectors] for i in range(dim)]  # dim x q
    snf = smith_normal_form(cols)
    d = snf.invariant_factors
    u_inv = invert(snf.U).to_int_rows()
    return [[u_inv[i][j] * d[j] for i in range(dim)] for j in range(len(d)) if d[j]]


def kernel_of_homomorphism(
    f: Sequence[Sequence[int]],
    src_relations: Sequence[Sequence[int]],
    tgt_relations: Sequence[Sequence[int]],
) -> AbelianGroup:
    """Kernel of Z^s/R_s -> Z^t/R_t induced by the integer matrix f (t x s).

    Relations are given as lists of relation vectors.  The kernel is
    {x : f x in span R_t} / span R_s.
    """
    t = len(f)
    s = len(f[0])
    # [f | -R_t] (x, y) = 0, then project to x
    augmented = [list(f[i]) + [-rel[i] for rel in tgt_relations] for i in range(t)]
    kernel = _kernel_lattice(augmented, s + len(tgt_relations))
    lattice = _lattice_basis([v[:s] for v in kernel], s)
    if not lattice:
        return TRIVIAL
    # express R_s in the lattice basis B: R_s = B X
    basis = Matrix(s, len(lattice), [lattice[j][i] for i in range(s) for j in range(len(lattice))])
    if len(lattice) != s:
        # the lattice has lower rank; solve via the normal equations of a full-column-rank basis
        bt = basis.T
        left = invert(bt @ basis) @ bt
    else:
        left = invert(basis)
    if not src_relations:
        return AbelianGroup(len(lattice))
    rel = Matrix(s, len(src_relations), [r[i] for i in range(s) for r in src_relations])
    x = left @ rel
    if not x.is_integer() or basis @ x != rel:
        raise FabError("source relations do not lie in the kernel lattice")
    x_rows = x.to_int_rows()
    d = smith_normal_form(x_rows).invariant_factors
    return AbelianGroup.from_cyclic_orders(list(d) + [0] * (len(lattice) - len(d)))


def exact_sequence_oracle(k: int, l: int, r: int) -> tuple[AbelianGroup, AbelianGroup]:
    """(pi_{2r}, pi_{2r-1}) of Gr_{k,l} as kernel and cokernel of (a, b) -> l*a + k*b.

    For r >= 2 the map is Z + Z -> Z; for r = 1 it is Z/k + Z/l -> Z/kl.
    """
    _check_gt_one(k, l)
    if not 1 <= r <= min(k, l):
        raise UnstableRangeError(f"r = {r} outside 1..{min(k, l)}")
    f = [[l, k]]
    if r >= 2:
        return kernel_of_homomorphism(f, [], []), cokernel(f)
    src_rel = [[k, 0], [0, l]]
    tgt_rel = [[k * l]]
    ker = kernel_of_homomorphism(f, src_rel, tgt_rel)
    coker = cokernel([[l, k, k * l]])
    return ker, coker
