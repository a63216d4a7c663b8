"""Newton and Chern class calculus for FABs and virtual SU-bundles.

Class vectors hold degrees 1..N; the degree-0 value ``dim0`` is the bundle
dimension for ordinary bundles and 1 for FAB classes.  Values are either
Fractions (numeric mode) or :class:`GradedPolynomial` (symbolic mode); every
routine below works for both because it only uses ring operations and
division by integers.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import ClassVectorError, CompatibilityError, NotFloatingError, NotSUClassError
from .polynomial import GradedPolynomial, GradedVariable

__all__ = [
    "ClassVector",
    "VirtualBundleClass",
    "DEFAULT_TRUNCATION",
    "newton_from_chern",
    "chern_from_newton",
    "tensor_newton",
    "fab_newton_product",
    "fab_chern_product",
    "fab_inverse",
    "fab_from_su_bundle",
    "psi_bezout",
    "bezout_pair",
    "extended_gcd",
    "symbolic_class_vector",
    "symbolic_fab_vector",
    "trivial_fab_vector",
    "is_integral",
]

DEFAULT_TRUNCATION = 10

Value = Union[Fraction, GradedPolynomial]


def _value(x) -> Value:
    if isinstance(x, GradedPolynomial):
        return x
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError:
            return GradedPolynomial.parse(x)
    return Fraction(x)


def _is_zero(x: Value) -> bool:
    return x.is_zero() if isinstance(x, GradedPolynomial) else x == 0


@dataclass(frozen=True)
class ClassVector:
    """``values[i-1]`` is the class in degree i (cohomological degree 2i)."""

    kind: str
    dim0: Fraction
    values: tuple[Value, ...]

    def __post_init__(self):
        if self.kind not in ("chern", "newton"):
            raise ClassVectorError(f"kind must be 'chern' or 'newton', got {self.kind!r}")
        object.__setattr__(self, "dim0", Fraction(self.dim0))
        object.__setattr__(self, "values", tuple(_value(v) for v in self.values))
        if not self.values:
            raise ClassVectorError("truncation N must be at least 1")

    @property
    def N(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Value:
        """Degree-i class; degree 0 returns dim0 for Newton vectors and 1 for Chern vectors."""
        if i == 0:
            return self.dim0 if self.kind == "newton" else Fraction(1)
        if not 1 <= i <= self.N:
            raise IndexError(f"degree {i} outside 0..{self.N}")
        return self.values[i - 1]

    @property
    def is_symbolic(self) -> bool:
        return any(isinstance(v, GradedPolynomial) for v in self.values)

    @property
    def is_fab(self) -> bool:
        return self.dim0 == 1 and _is_zero(self.values[0])

    def truncate(self, n: int) -> ClassVector:
        if n > self.N:
            raise ClassVectorError(f"cannot extend a vector of truncation {self.N} to {n}")
        return ClassVector(self.kind, self.dim0, self.values[:n])

    def to_json(self) -> dict:
        return {"kind": self.kind, "dim0": str(self.dim0), "values": [str(v) for v in self.values]}

    @classmethod
    def from_json(cls, obj: dict | str) -> ClassVector:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["kind"], Fraction(obj["dim0"]), tuple(obj["values"]))

    def __str__(self):
        name = "c" if self.kind == "chern" else "s"
        lines = [f"{name}0 = {self[0]}"]
        lines += [f"{name}{i} = {self[i]}" for i in range(1, self.N + 1)]
        return "\n".join(lines)


@dataclass(frozen=True)
class VirtualBundleClass:
    """Virtual bundle seen through its dimension and Newton classes.

    Newton classes are additive under direct sum, so ``+``, ``-`` and integer
    multiples act coordinatewise, dimension included.
    """

    dim: int
    newton: ClassVector

    def __post_init__(self):
        if self.newton.kind != "newton":
            raise ClassVectorError("a virtual bundle class carries a Newton vector")
        if self.newton.dim0 != self.dim:
            raise ClassVectorError(f"Newton s0 = {self.newton.dim0} differs from dim = {self.dim}")

    @classmethod
    def from_newton(cls, dim: int, values: Sequence) -> VirtualBundleClass:
        return cls(dim, ClassVector("newton", Fraction(dim), tuple(values)))

    @classmethod
    def trivial(cls, dim: int, n: int = DEFAULT_TRUNCATION) -> VirtualBundleClass:
        return cls.from_newton(dim, [0] * n)

    @property
    def N(self) -> int:
        return self.newton.N

    def s(self, i: int) -> Value:
        return self.newton[i]

    def _combine(self, other: VirtualBundleClass, sign: int) -> VirtualBundleClass:
        _same_truncation(self.newton, other.newton)
        vals = [a + sign * b for a, b in zip(self.newton.values, other.newton.values)]
        return VirtualBundleClass.from_newton(self.dim + sign * other.dim, vals)

    def __add__(self, other: VirtualBundleClass) -> VirtualBundleClass:
        return self._combine(other, 1)

    def __sub__(self, other: VirtualBundleClass) -> VirtualBundleClass:
        return self._combine(other, -1)

    def __neg__(self) -> VirtualBundleClass:
        return (-1) * self

    def __rmul__(self, t: int) -> VirtualBundleClass:
        if not isinstance(t, int):
            return NotImplemented
        return VirtualBundleClass.from_newton(t * self.dim, [t * v for v in self.newton.values])

    def to_json(self) -> dict:
        return self.newton.to_json()

    @classmethod
    def from_json(cls, obj: dict | str) -> VirtualBundleClass:
        vec = ClassVector.from_json(obj)
        if vec.kind != "newton" or vec.dim0.denominator != 1:
            raise ClassVectorError("virtual bundle files hold a Newton vector with integer dim0")
        return cls(int(vec.dim0), vec)


def _same_truncation(a: ClassVector, b: ClassVector) -> None:
    if a.N != b.N:
        raise ClassVectorError(f"truncation mismatch: {a.N} vs {b.N}")


def _require_kind(v: ClassVector, kind: str) -> None:
    if v.kind != kind:
        raise ClassVectorError(f"expected a {kind} vector, got {v.kind}")


def _require_fab(v: ClassVector) -> None:
    if not v.is_fab:
        raise ClassVectorError("not a FAB class vector (need dim0 = 1 and degree-1 class = 0)")


# ---------------------------------------------------------------------------
# Newton identities
# ---------------------------------------------------------------------------

def newton_from_chern(c: ClassVector) -> ClassVector:
    """Solve s_k - s_{k-1} c_1 + ... + (-1)^k k c_k = 0 for s_1..s_N."""
    _require_kind(c, "chern")
    s: list[Value] = []
    for k in range(1, c.N + 1):
        acc = (-1) ** (k - 1) * k * c[k]
        for i in range(1, k):
            acc = acc + (-1) ** (i - 1) * c[i] * s[k - i - 1]
        s.append(acc)
    return ClassVector("newton", c.dim0, tuple(s))


def chern_from_newton(s: ClassVector) -> ClassVector:
    """Inverse of :func:`newton_from_chern`; step k divides by k over Q."""
    _require_kind(s, "newton")
    c: list[Value] = []
    for k in range(1, s.N + 1):
        acc = s[k]
        for i in range(1, k):
            acc = acc - (-1) ** (i - 1) * c[i - 1] * s[k - i]
        c.append(acc * Fraction((-1) ** (k - 1), k))
    return ClassVector("chern", s.dim0, tuple(c))


def _binomial_convolution(a: Sequence[Value], b: Sequence[Value], n: int) -> list[Value]:
    """r-th entry: sum over i + j = r of r!/(i! j!) a_i b_j, for r = 1..n (a[0], b[0] are degree 0)."""
    out = []
    for r in range(1, n + 1):
        acc = Fraction(0)
        for i in range(r + 1):
            acc = acc + math.comb(r, i) * a[i] * b[r - i]
        out.append(acc)
    return out


def tensor_newton(x: VirtualBundleClass, y: VirtualBundleClass) -> VirtualBundleClass:
    """Newton classes of a tensor product; s_0 is the dimension."""
    _same_truncation(x.newton, y.newton)
    a = [x.newton[i] for i in range(x.N + 1)]
    b = [y.newton[i] for i in range(y.N + 1)]
    return VirtualBundleClass.from_newton(x.dim * y.dim, _binomial_convolution(a, b, x.N))


# ---------------------------------------------------------------------------
# FAB classes
# ---------------------------------------------------------------------------

def trivial_fab_vector(n: int = DEFAULT_TRUNCATION, kind: str = "newton") -> ClassVector:
    return ClassVector(kind, Fraction(1), tuple([0] * n))


def symbolic_class_vector(
    label: str, n: int = DEFAULT_TRUNCATION, kind: str = "chern", dim0=1, fab: bool = False
) -> ClassVector:
    """Generic vector (x1(label), ..., xN(label)) with x = c or s; ``fab`` forces x1 = 0."""
    family = "c" if kind == "chern" else "s"
    vals = [GradedPolynomial.variable(GradedVariable(label, family, i)) for i in range(1, n + 1)]
    if fab:
        vals[0] = GradedPolynomial()
    return ClassVector(kind, Fraction(dim0), tuple(vals))


def symbolic_fab_vector(label: str, n: int = DEFAULT_TRUNCATION, kind: str = "chern") -> ClassVector:
    """Generic FAB vector (0, x2(label), ..., xN(label))."""
    return symbolic_class_vector(label, n, kind, 1, fab=True)


def fab_newton_product(a: ClassVector, b: ClassVector) -> ClassVector:
    """Newton classes of the product of two FABs (binomial convolution with s~_0 = 1)."""
    for v in (a, b):
        _require_kind(v, "newton")
        _require_fab(v)
    _same_truncation(a, b)
    av = [a[i] for i in range(a.N + 1)]
    bv = [b[i] for i in range(b.N + 1)]
    return ClassVector("newton", Fraction(1), tuple(_binomial_convolution(av, bv, a.N)))


def fab_chern_product(a: ClassVector, b: ClassVector, n: int | None = None) -> ClassVector:
    """Chern classes of the product, via Newton classes."""
    for v in (a, b):
        _require_kind(v, "chern")
        _require_fab(v)
    n = min(a.N, b.N) if n is None else n
    sa = newton_from_chern(a.truncate(n))
    sb = newton_from_chern(b.truncate(n))
    return chern_from_newton(fab_newton_product(sa, sb))


def fab_inverse(a: ClassVector) -> ClassVector:
    """Unique b with ``fab_newton_product(a, b)`` trivial; Chern input gives Chern output."""
    _require_fab(a)
    if a.kind == "chern":
        return chern_from_newton(fab_inverse(newton_from_chern(a)))
    b: list[Value] = [Fraction(1)]
    for r in range(1, a.N + 1):
        acc = -a[r]
        for i in range(1, r):
            acc = acc - math.comb(r, i) * a[i] * b[r - i]
        b.append(acc)
    return ClassVector("newton", Fraction(1), tuple(b[1:]))


def is_integral(v: ClassVector) -> bool:
    """True when every class has integer coefficients."""
    for x in v.values:
        if isinstance(x, GradedPolynomial):
            if not x.is_integral():
                return False
        elif x.denominator != 1:
            return False
    return True


def fab_from_su_bundle(xi: VirtualBundleClass, k: int | None = None, strict: bool = False) -> ClassVector:
    """FAB Newton classes s~_i = s_i(xi) / k of End(xi) for an SU-bundle xi of dimension k.

    With ``strict`` a non-integral result raises; otherwise check
    :func:`is_integral` on the output.
    """
    k = xi.dim if k is None else k
    if k < 1 or xi.dim != k:
        raise ClassVectorError(f"expected a bundle of dimension {k} >= 1, got dim {xi.dim}")
    if not _is_zero(xi.s(1)):
        raise NotSUClassError("not an SU class: s1 != 0")
    vec = ClassVector("newton", Fraction(1), tuple(v / k for v in xi.newton.values))
    if strict and not is_integral(vec):
        raise ClassVectorError("division by the dimension left non-integral classes")
    return vec


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def bezout_pair(eta: VirtualBundleClass, k: int, m: int) -> tuple[VirtualBundleClass, VirtualBundleClass]:
    """(k*eta, m*eta): the compatible pair attached to a virtual class of dimension 1."""
    if eta.dim != 1:
        raise ClassVectorError("expected a virtual class of dimension 1")
    return k * eta, m * eta


def psi_bezout(xk: VirtualBundleClass, xm: VirtualBundleClass) -> VirtualBundleClass:
    """Recover eta = l*xk + n*xm (kl + mn = 1) from a compatible pair of dimensions k, m."""
    k, m = xk.dim, xm.dim
    g, l, n = extended_gcd(k, m)
    if g != 1:
        raise NotFloatingError(f"gcd({k}, {m}) = {g} != 1")
    _same_truncation(xk.newton, xm.newton)
    for i in range(1, xk.N + 1):
        if m * xk.s(i) != k * xm.s(i):
            raise CompatibilityError(f"m*s{i}(xk) != k*s{i}(xm)")
    eta = l * xk + n * xm
    for i in range(1, xk.N + 1):
        if k * eta.s(i) != xk.s(i) or m * eta.s(i) != xm.s(i):
            raise CompatibilityError("Bezout split failed its postcondition")
    return eta
