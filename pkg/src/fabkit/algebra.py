"""Frames, unital embeddings M_k -> M_n, centralizers and FAB fibers.

Everything here lives over a single point: an embedded matrix algebra is
described by a *frame*, the ordered images alpha[i, j] of the matrix units of
M_k (row-major in (i, j), 0-based).  Over a point every frame is conjugate to
the standard one ``E_ij (x) 1_l``, and :func:`noether_skolem_conjugator`
produces the conjugating matrix explicitly.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import DimensionError, InvalidFrameError, NotFloatingError, ZeroVectorError
from .exact import (
    GaussianRational,
    Matrix,
    as_gaussian,
    format_entry,
    invert,
    kronecker,
    nullspace,
    rank,
    row_space_basis,
    same_span,
)

__all__ = [
    "Frame",
    "FrameCheck",
    "AlgebraEmbedding",
    "FabFiber",
    "ProjectivePoint",
    "standard_frame",
    "verify_frame",
    "frame_conjugate",
    "noether_skolem_conjugator",
    "embedding_from_frame",
    "apply_embedding",
    "commutant_basis",
    "centralizer",
    "make_fab_fiber",
    "verify_fab_fiber",
    "trivial_fiber",
    "fab_product",
    "segre",
]


@dataclass(frozen=True)
class Frame:
    """k*k matrices of size n x n, ``generators[i*k + j]`` is alpha_ij."""

    k: int
    n: int
    generators: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.k < 1 or self.n < 1:
            raise DimensionError("frame order and ambient size must be positive")
        if len(self.generators) != self.k * self.k:
            raise DimensionError(f"a {self.k}-frame has {self.k ** 2} generators, got {len(self.generators)}")
        if any(g.shape != (self.n, self.n) for g in self.generators):
            raise DimensionError(f"frame generators must be {self.n}x{self.n}")

    def __getitem__(self, idx: tuple[int, int]) -> Matrix:
        i, j = idx
        return self.generators[i * self.k + j]

    @property
    def l(self) -> int:
        """Complementary order n/k (only meaningful when k divides n)."""
        return self.n // self.k

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "generators": [g.to_json() for g in self.generators]}

    @classmethod
    def from_json(cls, obj: dict | str) -> Frame:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["k"], obj["n"], tuple(Matrix.from_json(g) for g in obj["generators"]))


class FrameCheck(NamedTuple):
    valid: bool
    diagnostic: str = "valid"

    def __bool__(self):
        return self.valid


def _unit(k: int, i: int, j: int) -> Matrix:
    return Matrix.unit(k, i, j)


def standard_frame(k: int, l: int) -> Frame:
    """Frame ``E_ij (x) 1_l`` of order k in M_{kl}."""
    if k < 1 or l < 1:
        raise DimensionError("k and l must be positive")
    eye = Matrix.identity(l)
    gens = tuple(kronecker(_unit(k, i, j), eye) for i in range(k) for j in range(k))
    return Frame(k, k * l, gens)


def _complementary_standard_frame(k: int, l: int) -> Frame:
    """Frame ``1_k (x) E_rs`` of order l in M_{kl}."""
    eye = Matrix.identity(k)
    gens = tuple(kronecker(eye, _unit(l, r, s)) for r in range(l) for s in range(l))
    return Frame(l, k * l, gens)


def _coordinates(mats: Sequence[Matrix]) -> Matrix:
    return Matrix.vstack([m.flatten() for m in mats])


def _relation_failure(gens: Sequence[Matrix], k: int) -> tuple[int, int, int, int] | None:
    def g(i, j):
        return gens[i * k + j]

    # These 2k^2 relations imply the full set a_ij a_rs = delta_jr a_is.
    quick_ok = all(g(i, 0) @ g(0, j) == g(i, j) for i in range(k) for j in range(k)) and all(
        (g(0, i) @ g(j, 0)) == (g(0, 0) if i == j else Matrix.zeros(g(0, 0).rows)) for i in range(k) for j in range(k)
    )
    if quick_ok:
        return None
    zero = Matrix.zeros(gens[0].rows)
    for i in range(k):
        for j in range(k):
            for r in range(k):
                for s in range(k):
                    expected = g(i, s) if j == r else zero
                    if g(i, j) @ g(r, s) != expected:
                        return i, j, r, s
    return None  # unreachable when the quick check failed


def verify_frame(candidate: Sequence[Matrix] | Frame, k: int | None = None, n: int | None = None) -> FrameCheck:
    """Check matrix-unit relations, unitality and linear independence.

    The diagnostic names the first failing condition (0-based indices).
    Raises :class:`DimensionError` on size mismatch.
    """
    if isinstance(candidate, Frame):
        k, n, gens = candidate.k, candidate.n, candidate.generators
    else:
        gens = tuple(candidate)
        if k is None or n is None:
            raise DimensionError("k and n are required for a bare generator list")
        Frame(k, n, gens)
    bad = _relation_failure(gens, k)
    if bad is not None:
        i, j, r, s = bad
        return FrameCheck(False, f"relation failed: alpha[{i},{j}] * alpha[{r},{s}]")
    total = Matrix.zeros(n)
    for i in range(k):
        total = total + gens[i * k + i]
    if total != Matrix.identity(n):
        return FrameCheck(False, "unitality failed: sum of alpha[i,i] is not the identity")
    if rank(_coordinates(gens)) != k * k:
        return FrameCheck(False, "generators are linearly dependent")
    return FrameCheck(True)


def _require_frame(frame: Frame) -> None:
    check = verify_frame(frame)
    if not check:
        raise InvalidFrameError(check.diagnostic)


def frame_conjugate(frame: Frame, g: Matrix) -> Frame:
    """Frame with generators ``g @ alpha_ij @ g^-1``."""
    if g.shape != (frame.n, frame.n):
        raise DimensionError(f"conjugator must be {frame.n}x{frame.n}")
    g_inv = invert(g)
    return Frame(frame.k, frame.n, tuple(g @ a @ g_inv for a in frame.generators))


def noether_skolem_conjugator(frame: Frame) -> Matrix:
    """Invertible g with ``frame_conjugate(standard_frame(k, l), g) == frame``.

    Column ``i*l + j`` of g is ``alpha[i, 0] @ w_j`` where ``w_0..w_{l-1}`` is
    the reduced column-echelon basis of the image of alpha[0, 0].  The
    standard frame gives the identity.
    """
    _require_frame(frame)
    k, n = frame.k, frame.n
    if n % k:
        raise InvalidFrameError(f"frame order {k} does not divide {n}")
    l = n // k
    echelon = row_space_basis(frame[0, 0].T)
    if echelon.rows != l:
        raise InvalidFrameError(f"alpha[0,0] has rank {echelon.rows}, expected {l}")
    w = echelon.T
    return Matrix.hstack([frame[i, 0] @ w for i in range(k)])


@dataclass(frozen=True)
class AlgebraEmbedding:
    """Unital embedding M_k -> M_n given by the frame of matrix-unit images."""

    k: int
    n: int
    frame: Frame

    def __post_init__(self):
        if (self.frame.k, self.frame.n) != (self.k, self.n):
            raise DimensionError("embedding sizes disagree with its frame")

    def __call__(self, t: Matrix) -> Matrix:
        return apply_embedding(self, t)

    @property
    def image(self) -> tuple[Matrix, ...]:
        """A basis of the image subalgebra."""
        return self.frame.generators


def embedding_from_frame(frame: Frame) -> AlgebraEmbedding:
    _require_frame(frame)
    return AlgebraEmbedding(frame.k, frame.n, frame)


def apply_embedding(e: AlgebraEmbedding, t: Matrix) -> Matrix:
    """``sum_ij t[i, j] * alpha_ij``."""
    if t.shape != (e.k, e.k):
        raise DimensionError(f"expected a {e.k}x{e.k} matrix, got {t.rows}x{t.cols}")
    out = Matrix.zeros(e.n)
    for i in range(e.k):
        for j in range(e.k):
            c = t[i, j]
            if c:
                out = out + e.frame[i, j] * c
    return out


def _algebra_generators(frame: Frame) -> list[Matrix]:
    """Two elements generating the image of M_k: a cyclic shift and a diagonal with distinct eigenvalues."""
    k, n = frame.k, frame.n
    if k == 1:
        return [frame[0, 0]]
    shift = Matrix.zeros(n)
    diag = Matrix.zeros(n)
    for i in range(k):
        shift = shift + frame[i, (i + 1) % k]
        diag = diag + frame[i, i] * (i + 1)
    return [shift, diag]


def commutant_basis(e: AlgebraEmbedding | Frame | Sequence[Matrix]) -> list[Matrix]:
    """Basis of {X : X a = a X for every a}, via the kernel of the stacked maps X -> Xa - aX.

    For a frame only two algebra generators are used (same commutant, far
    fewer equations).  Basis matrices are in canonical RREF order.
    """
    if isinstance(e, AlgebraEmbedding):
        e = e.frame
    gens = _algebra_generators(e) if isinstance(e, Frame) else list(e)
    n = gens[0].rows
    eye = Matrix.identity(n)
    # row-major vec: vec(X a) = (1 (x) a^T) vec X, vec(a X) = (a (x) 1) vec X
    system = Matrix.vstack([kronecker(eye, a.T) - kronecker(a, eye) for a in gens])
    return [v.reshape(n, n) for v in nullspace(system)]


def centralizer(e: AlgebraEmbedding) -> AlgebraEmbedding:
    """Complementary embedding M_l -> M_{kl} whose image is the commutant of ``e``.

    The commutant is framed as ``g (1_k (x) E_rs) g^-1`` with g the
    Noether-Skolem conjugator of ``e``.
    """
    if e.n % e.k:
        raise DimensionError(f"n = {e.n} is not divisible by k = {e.k}")
    l = e.n // e.k
    g = noether_skolem_conjugator(e.frame)
    comp = frame_conjugate(_complementary_standard_frame(e.k, l), g)
    return AlgebraEmbedding(l, e.n, comp)


@dataclass(frozen=True)
class FabFiber:
    """A FAB over a point: commuting complementary embeddings of M_k and M_l in M_{kl}."""

    k: int
    l: int
    a_embedding: AlgebraEmbedding
    b_embedding: AlgebraEmbedding

    @property
    def n(self) -> int:
        return self.k * self.l

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "a": self.a_embedding.frame.to_json(),
            "b": self.b_embedding.frame.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict | str) -> FabFiber:
        if isinstance(obj, str):
            obj = json.loads(obj)
        a = Frame.from_json(obj["a"])
        b = Frame.from_json(obj["b"])
        fiber = cls(obj["k"], obj["l"], AlgebraEmbedding(a.k, a.n, a), AlgebraEmbedding(b.k, b.n, b))
        check = verify_fab_fiber(fiber)
        if not check:
            raise InvalidFrameError(check.diagnostic)
        return fiber


def verify_fab_fiber(f: FabFiber, require_coprime: bool = True) -> FrameCheck:
    a, b = f.a_embedding, f.b_embedding
    if (a.k, b.k, a.n, b.n) != (f.k, f.l, f.n, f.n):
        return FrameCheck(False, "embedding sizes do not match (k, l)")
    if require_coprime and math.gcd(f.k, f.l) != 1:
        return FrameCheck(False, f"not floating: gcd({f.k}, {f.l}) != 1")
    for part, name in ((a, "a"), (b, "b")):
        check = verify_frame(part.frame)
        if not check:
            return FrameCheck(False, f"{name}-frame invalid: {check.diagnostic}")
    # commuting generating sets suffice for elementwise commutation of the images
    for x in _algebra_generators(a.frame):
        for y in _algebra_generators(b.frame):
            if x @ y != y @ x:
                return FrameCheck(False, "images do not commute")
    products = [x @ y for x in a.image for y in b.image]
    if rank(_coordinates(products)) != f.n * f.n:
        return FrameCheck(False, "products of the two images do not span M_kl")
    return FrameCheck(True)


def make_fab_fiber(e: AlgebraEmbedding) -> FabFiber:
    """Pair ``e`` with its centralizer; requires gcd(k, l) = 1."""
    if e.n % e.k:
        raise DimensionError(f"n = {e.n} is not divisible by k = {e.k}")
    l = e.n // e.k
    if math.gcd(e.k, l) != 1:
        raise NotFloatingError(f"not floating: gcd({e.k}, {l}) = {math.gcd(e.k, l)}")
    fiber = FabFiber(e.k, l, e, centralizer(e))
    check = verify_fab_fiber(fiber)
    if not check:
        raise InvalidFrameError(check.diagnostic)
    return fiber


def trivial_fiber(k: int, l: int) -> FabFiber:
    """The fiber of the trivial FAB T -> T (x) 1_l."""
    return make_fab_fiber(embedding_from_frame(standard_frame(k, l)))


def _kron_frame(f1: Frame, f2: Frame) -> Frame:
    k1, k2 = f1.k, f2.k
    gens = []
    for i1 in range(k1):
        for i2 in range(k2):
            for j1 in range(k1):
                for j2 in range(k2):
                    gens.append(kronecker(f1[i1, j1], f2[i2, j2]))
    return Frame(k1 * k2, f1.n * f2.n, tuple(gens))


def fab_product(f1: FabFiber, f2: FabFiber) -> FabFiber:
    """Kronecker product of two fibers; generator (I, J) with I = i1*k2 + i2, J = j1*k2 + j2."""
    k, l = f1.k * f2.k, f1.l * f2.l
    if math.gcd(k, l) != 1:
        raise NotFloatingError(f"not floating: gcd({k}, {l}) = {math.gcd(k, l)}")
    a = _kron_frame(f1.a_embedding.frame, f2.a_embedding.frame)
    b = _kron_frame(f1.b_embedding.frame, f2.b_embedding.frame)
    return FabFiber(k, l, AlgebraEmbedding(k, a.n, a), AlgebraEmbedding(l, b.n, b))


def same_image(e1: AlgebraEmbedding | Frame, e2: AlgebraEmbedding | Frame) -> bool:
    """Do two embeddings (or frames) have the same image subspace?"""
    g1 = e1.image if isinstance(e1, AlgebraEmbedding) else e1.generators
    g2 = e2.image if isinstance(e2, AlgebraEmbedding) else e2.generators
    return same_span(g1, g2)


# ---------------------------------------------------------------------------
# projective points and the Segre map
# ---------------------------------------------------------------------------

class ProjectivePoint:
    """Point ``[x_0 : ... : x_{dim-1}]``; equality is up to a nonzero scalar."""

    __slots__ = ("dim", "coords")

    def __init__(self, coords: Sequence):
        coords = tuple(as_gaussian(x) for x in coords)
        if not coords:
            raise DimensionError("projective point needs at least one coordinate")
        if not any(coords):
            raise ZeroVectorError("the zero vector has no projective point")
        self.dim = len(coords)
        self.coords = coords

    def normalized(self) -> tuple[GaussianRational, ...]:
        """Coordinates scaled so the first nonzero one equals 1."""
        lead = next(x for x in self.coords if x)
        return tuple(x / lead for x in self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.dim == other.dim and self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    def __repr__(self):
        return "[" + ":".join(format_entry(x) for x in self.coords) + "]"

    def to_json(self) -> dict:
        return {"dim": self.dim, "coords": [format_entry(x) for x in self.coords]}

    @classmethod
    def from_json(cls, obj: dict | str) -> ProjectivePoint:
        if isinstance(obj, str):
            obj = json.loads(obj)
        pt = cls(obj["coords"])
        if pt.dim != obj.get("dim", pt.dim):
            raise DimensionError("declared dim does not match coordinates")
        return pt


def segre(p: ProjectivePoint, q: ProjectivePoint) -> ProjectivePoint:
    """Segre map: z[i*l + j] = x_i * y_j."""
    return ProjectivePoint([x * y for x in p.coords for y in q.coords])
