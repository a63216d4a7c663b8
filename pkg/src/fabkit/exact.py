"""Exact arithmetic over the Gaussian rationals Q(i) and dense exact matrices.

A :class:`Matrix` is stored as a positive common denominator together with two
arrays of Python integers (real and imaginary numerators), kept in lowest
terms.  All arithmetic is exact; integers are arbitrary precision.  Row
reduction is done fraction-free over the Gaussian integers with content
removal, which keeps intermediate numbers small enough for n <= ~50.
"""
from __future__ import annotations

import json
import math
import numbers
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, SingularMatrixError

__all__ = [
    "GaussianRational",
    "Matrix",
    "SmithDecomposition",
    "mat_mul",
    "kronecker",
    "nullspace",
    "rank",
    "row_space_basis",
    "same_span",
    "invert",
    "determinant",
    "smith_normal_form",
    "parse_entry",
    "format_entry",
]


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------

class GaussianRational:
    """An element ``re + im*i`` of Q(i) with :class:`~fractions.Fraction` parts."""

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            base_re, base_im = re._re, re._im
        elif isinstance(re, str):
            parsed = parse_entry(re)
            base_re, base_im = parsed._re, parsed._im
        else:
            base_re, base_im = _rational(re), Fraction(0)
        self._re = base_re
        self._im = base_im + _rational(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self._re, -self._im)

    def norm(self) -> Fraction:
        """Field norm ``re**2 + im**2``."""
        return self._re * self._re + self._im * self._im

    def is_zero(self) -> bool:
        return not self._re and not self._im

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self._re, self._im, other._re, other._im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = other.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        q = self * other.conjugate()
        return GaussianRational(q._re / n, q._im / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._re == other._re and self._im == other._im

    def __hash__(self):
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __repr__(self):
        return f"GaussianRational({format_entry(self)!r})"

    def __str__(self):
        return format_entry(self)


def _rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, numbers.Rational):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, np.integer):
        return Fraction(int(x))
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (numbers.Rational, np.integer)):
        return GaussianRational(x)
    return NotImplemented


def as_gaussian(x) -> GaussianRational:
    """Coerce ints, Fractions, strings or Gaussian rationals into Q(i)."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        return parse_entry(x)
    return GaussianRational(x)


_NUM = r"\d+(?:/\d+)?"
_PURE_IMAG = re.compile(rf"^(?P<im>[+-]?(?:{_NUM})?)\*?i$")
_MIXED = re.compile(rf"^(?P<re>[+-]?{_NUM})(?:(?P<im>[+-](?:{_NUM})?)\*?i)?$")


def _imag_coefficient(text: str) -> Fraction:
    if text in ("", "+"):
        return Fraction(1)
    if text == "-":
        return Fraction(-1)
    return Fraction(text)


def parse_entry(text: str) -> GaussianRational:
    """Parse ``"a/b+c/d*i"``; either part may be omitted, ``*`` is optional."""
    s = text.replace(" ", "")
    m = _PURE_IMAG.match(s)
    if m:
        return GaussianRational(0, _imag_coefficient(m.group("im")))
    m = _MIXED.match(s)
    if m is None:
        raise ValueError(f"cannot parse Gaussian rational {text!r}")
    im = m.group("im")
    return GaussianRational(Fraction(m.group("re")), 0 if im is None else _imag_coefficient(im))


def format_entry(z: GaussianRational) -> str:
    """Canonical text form; ``parse_entry(format_entry(z)) == z``."""
    z = as_gaussian(z)
    re_part, im_part = z.re, z.im
    if not im_part:
        return str(re_part)
    if im_part == 1:
        imag = "i"
    elif im_part == -1:
        imag = "-i"
    else:
        imag = f"{im_part}*i"
    if not re_part:
        return imag
    sign = "" if imag.startswith("-") else "+"
    return f"{re_part}{sign}{imag}"


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

def _int_array(values: Sequence[int], shape) -> np.ndarray:
    arr = np.empty(len(values), dtype=object)
    arr[:] = [int(v) for v in values]
    return arr.reshape(shape)


def _all_zero(arr: np.ndarray) -> bool:
    return not any(arr.flat)


class Matrix:
    """Immutable dense matrix over Q(i).

    ``Matrix(rows, cols, entries)`` takes a row-major flat sequence of anything
    :func:`as_gaussian` accepts.  Indices are 0-based: ``m[i, j]``.
    """

    __slots__ = ("rows", "cols", "_re", "_im", "_den")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        values = [as_gaussian(x) for x in entries]
        if rows < 0 or cols < 0 or len(values) != rows * cols:
            raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(values)}")
        den = 1
        for z in values:
            den = math.lcm(den, z.re.denominator, z.im.denominator)
        re_vals = [z.re.numerator * (den // z.re.denominator) for z in values]
        im_vals = [z.im.numerator * (den // z.im.denominator) for z in values]
        self._set(rows, cols, _int_array(re_vals, (rows, cols)), _int_array(im_vals, (rows, cols)), den)

    @classmethod
    def _from_parts(cls, re_arr: np.ndarray, im_arr: np.ndarray | None, den: int = 1) -> Matrix:
        obj = cls.__new__(cls)
        rows, cols = re_arr.shape
        obj._set(rows, cols, re_arr, im_arr, den)
        return obj

    def _set(self, rows, cols, re_arr, im_arr, den):
        if im_arr is not None and _all_zero(im_arr):
            im_arr = None
        if den < 0:
            den, re_arr = -den, -re_arr
            im_arr = None if im_arr is None else -im_arr
        g = math.gcd(den, *re_arr.flat)
        if im_arr is not None:
            g = math.gcd(g, *im_arr.flat)
        if g > 1:
            den //= g
            re_arr = re_arr // g
            im_arr = None if im_arr is None else im_arr // g
        re_arr.flags.writeable = False
        if im_arr is not None:
            im_arr.flags.writeable = False
        self.rows, self.cols, self._re, self._im, self._den = rows, cols, re_arr, im_arr, den

    # constructors -----------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> Matrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Matrix:
        cols = rows if cols is None else cols
        return cls._from_parts(np.zeros((rows, cols), dtype=object), None)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        re_arr = np.zeros((n, n), dtype=object)
        for i in range(n):
            re_arr[i, i] = 1
        return cls._from_parts(re_arr, None)

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> Matrix:
        """Matrix unit E_ij of size n (0-based indices)."""
        re_arr = np.zeros((n, n), dtype=object)
        re_arr[i, j] = 1
        return cls._from_parts(re_arr, None)

    @classmethod
    def diag(cls, *entries) -> Matrix:
        n = len(entries)
        flat = [0] * (n * n)
        for i, x in enumerate(entries):
            flat[i * n + i] = x
        return cls(n, n, flat)

    @classmethod
    def column(cls, entries: Sequence) -> Matrix:
        return cls(len(entries), 1, entries)

    # access -----------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def denominator(self) -> int:
        return self._den

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_real(self) -> bool:
        return self._im is None

    def is_integer(self) -> bool:
        return self._den == 1 and self._im is None

    def _im_or_zero(self) -> np.ndarray:
        if self._im is None:
            return np.zeros((self.rows, self.cols), dtype=object)
        return self._im

    def __getitem__(self, idx) -> GaussianRational:
        i, j = idx
        im = 0 if self._im is None else self._im[i, j]
        return GaussianRational(Fraction(self._re[i, j], self._den), Fraction(im, self._den))

    @property
    def entries(self) -> tuple[GaussianRational, ...]:
        return tuple(self[i, j] for i in range(self.rows) for j in range(self.cols))

    def tolist(self) -> list[list[GaussianRational]]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def to_int_rows(self) -> list[list[int]]:
        if not self.is_integer():
            raise ValueError("matrix has non-integer entries")
        return [[int(x) for x in row] for row in self._re.tolist()]

    def is_zero(self) -> bool:
        return self._im is None and _all_zero(self._re)

    # arithmetic -------------------------------------------------------------

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        if self.cols == 0:
            return Matrix.zeros(self.rows, other.cols)
        re_arr = self._re.dot(other._re)
        im_arr = None
        if self._im is not None and other._im is not None:
            re_arr = re_arr - self._im.dot(other._im)
        if self._im is not None:
            im_arr = self._im.dot(other._re)
        if other._im is not None:
            cross = self._re.dot(other._im)
            im_arr = cross if im_arr is None else im_arr + cross
        return Matrix._from_parts(re_arr, im_arr, self._den * other._den)

    def _combine(self, other: Matrix, sign: int) -> Matrix:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        da, db = self._den, other._den
        re_arr = self._re * db + sign * other._re * da
        if self._im is None and other._im is None:
            im_arr = None
        else:
            im_arr = self._im_or_zero() * db + sign * other._im_or_zero() * da
        return Matrix._from_parts(re_arr, im_arr, da * db)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self):
        return Matrix._from_parts(-self._re, None if self._im is None else -self._im, self._den)

    def __mul__(self, scalar):
        """Scalar multiplication; use ``@`` for the matrix product."""
        if isinstance(scalar, Matrix):
            raise TypeError("use @ for matrix products")
        z = as_gaussian(scalar)
        ds = math.lcm(z.re.denominator, z.im.denominator)
        sr, si = int(z.re * ds), int(z.im * ds)
        re_arr = sr * self._re
        im_arr = None if self._im is None else sr * self._im
        if si:
            re_arr = re_arr - si * self._im_or_zero()
            extra = si * self._re
            im_arr = extra if im_arr is None else im_arr + extra
        return Matrix._from_parts(re_arr, im_arr, self._den * ds)

    __rmul__ = __mul__

    @property
    def T(self) -> Matrix:
        return Matrix._from_parts(self._re.T.copy(), None if self._im is None else self._im.T.copy(), self._den)

    def conj(self) -> Matrix:
        return Matrix._from_parts(self._re.copy(), None if self._im is None else -self._im, self._den)

    def trace(self) -> GaussianRational:
        return sum((self[i, i] for i in range(min(self.rows, self.cols))), GaussianRational(0))

    def submatrix(self, rows: slice, cols: slice) -> Matrix:
        im = None if self._im is None else self._im[rows, cols].copy()
        return Matrix._from_parts(self._re[rows, cols].copy(), im, self._den)

    def flatten(self) -> Matrix:
        """Row-major coordinates as a 1 x (rows*cols) matrix."""
        im = None if self._im is None else self._im.reshape(1, -1).copy()
        return Matrix._from_parts(self._re.reshape(1, -1).copy(), im, self._den)

    def reshape(self, rows: int, cols: int) -> Matrix:
        im = None if self._im is None else self._im.reshape(rows, cols).copy()
        return Matrix._from_parts(self._re.reshape(rows, cols).copy(), im, self._den)

    @staticmethod
    def vstack(mats: Sequence[Matrix]) -> Matrix:
        if not mats:
            raise DimensionError("nothing to stack")
        cols = mats[0].cols
        if any(m.cols != cols for m in mats):
            raise DimensionError("column counts differ")
        den = math.lcm(*(m._den for m in mats))
        re_arr = np.vstack([m._re * (den // m._den) for m in mats])
        if all(m._im is None for m in mats):
            im_arr = None
        else:
            im_arr = np.vstack([m._im_or_zero() * (den // m._den) for m in mats])
        return Matrix._from_parts(re_arr, im_arr, den)

    @staticmethod
    def hstack(mats: Sequence[Matrix]) -> Matrix:
        return Matrix.vstack([m.T for m in mats]).T

    # comparison -------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape or self._den != other._den:
            return False
        if (self._im is None) != (other._im is None):
            return False
        if not np.array_equal(self._re, other._re):
            return False
        return self._im is None or np.array_equal(self._im, other._im)

    def __hash__(self):
        im = None if self._im is None else tuple(self._im.flat)
        return hash((self.rows, self.cols, self._den, tuple(self._re.flat), im))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_entry(x) for x in row) + "]" for row in self.tolist())
        return f"Matrix([{body}])"

    # serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_entry(x) for x in row] for row in self.tolist()],
        }

    @classmethod
    def from_json(cls, obj: dict | str) -> Matrix:
        if isinstance(obj, str):
            obj = json.loads(obj)
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise DimensionError(f"entries do not match declared shape {rows}x{cols}")
        return cls(rows, cols, [as_gaussian(x) for r in entries for x in r])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; block (i, j) of the result is ``a[i, j] * b``."""
    re_arr = np.kron(a._re, b._re)
    im_arr = None
    if a._im is not None and b._im is not None:
        re_arr = re_arr - np.kron(a._im, b._im)
    if a._im is not None:
        im_arr = np.kron(a._im, b._re)
    if b._im is not None:
        cross = np.kron(a._re, b._im)
        im_arr = cross if im_arr is None else im_arr + cross
    return Matrix._from_parts(re_arr, im_arr, a._den * b._den)


# ---------------------------------------------------------------------------
# row reduction
# ---------------------------------------------------------------------------

def _eliminate(re_arr: np.ndarray, im_arr: np.ndarray | None, limit: int | None = None):
    """Fraction-free Gauss-Jordan over Z[i].

    Returns ``(re, im, pivots)`` for the nonzero rows; row ``j`` has a nonzero
    entry at ``pivots[j]`` and zeros in every other pivot column.  Pivot
    search is restricted to the first ``limit`` columns.
    """
    re_arr = np.array(re_arr, dtype=object)
    im_arr = None if im_arr is None else np.array(im_arr, dtype=object)
    m, ncols = re_arr.shape
    limit = ncols if limit is None else limit
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        if r == m:
            break
        nz = re_arr[r:, c] != 0
        if im_arr is not None:
            nz |= im_arr[r:, c] != 0
        cand = np.flatnonzero(nz)
        if cand.size == 0:
            continue
        if im_arr is None:
            sizes = [abs(re_arr[r + i, c]) for i in cand]
        else:
            sizes = [abs(re_arr[r + i, c]) + abs(im_arr[r + i, c]) for i in cand]
        p = r + int(cand[sizes.index(min(sizes))])
        if p != r:
            re_arr[[r, p]] = re_arr[[p, r]]
            if im_arr is not None:
                im_arr[[r, p]] = im_arr[[p, r]]

        hit = re_arr[:, c] != 0
        if im_arr is not None:
            hit |= im_arr[:, c] != 0
        hit[r] = False
        others = np.flatnonzero(hit)
        if others.size:
            ar = re_arr[r, c]
            br = re_arr[others, c][:, None]
            pr = re_arr[r]
            rows_re = re_arr[others]
            if im_arr is None:
                new_re = ar * rows_re - br * pr
                new_im = None
            else:
                ai = im_arr[r, c]
                bi = im_arr[others, c][:, None]
                pi = im_arr[r]
                rows_im = im_arr[others]
                new_re = ar * rows_re - ai * rows_im - (br * pr - bi * pi)
                new_im = ar * rows_im + ai * rows_re - (br * pi + bi * pr)
            stacked = new_re if new_im is None else np.hstack([new_re, new_im])
            g = np.gcd.reduce(stacked, axis=1)
            g[g == 0] = 1
            re_arr[others] = new_re // g[:, None]
            if im_arr is not None:
                im_arr[others] = new_im // g[:, None]
        pivots.append(c)
        r += 1
    re_arr = re_arr[:r]
    im_arr = None if im_arr is None else im_arr[:r]
    return re_arr, im_arr, pivots


def _pivot_scalar(re_arr, im_arr, j, c) -> GaussianRational:
    return GaussianRational(re_arr[j, c], 0 if im_arr is None else im_arr[j, c])


def _rank_mod_p(a: Matrix, idx: int = 0) -> int:
    p, s = _prime(idx)
    a_mod = a._re % p
    if a._im is not None:
        a_mod = (a_mod + s * (a._im % p)) % p
    return len(_kernel_mod_p(a_mod.astype(np.int64), p)[0])


def rank(a: Matrix) -> int:
    """Exact rank.

    The rank modulo a prime never exceeds the true rank, so a full modular
    rank is a certificate; otherwise fall back to exact elimination.
    """
    if a.rows * a.cols >= 1024 and _rank_mod_p(a) == min(a.rows, a.cols):
        return min(a.rows, a.cols)
    return len(_eliminate(a._re, a._im)[2])


def row_space_basis(a: Matrix) -> Matrix:
    """Reduced row echelon basis of the row space (pivots equal to 1)."""
    re_arr, im_arr, pivots = _eliminate(a._re, a._im)
    if not pivots:
        return Matrix.zeros(0, a.cols)
    rows = []
    for j, c in enumerate(pivots):
        row = Matrix._from_parts(re_arr[j:j + 1].copy(), None if im_arr is None else im_arr[j:j + 1].copy())
        rows.append(row * (1 / _pivot_scalar(re_arr, im_arr, j, c)))
    return Matrix.vstack(rows)


def same_span(a: Sequence[Matrix], b: Sequence[Matrix]) -> bool:
    """True when the two families of equally-shaped matrices span the same subspace."""
    ca = Matrix.vstack([m.flatten() for m in a])
    cb = Matrix.vstack([m.flatten() for m in b])
    return row_space_basis(ca) == row_space_basis(cb)


# -- multi-modular kernel ----------------------------------------------------

def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2**32."""
    if n < 2 or n % 2 == 0:
        return n == 2
    d, s = n - 1, 0
    while d % 2 == 0:
        d, s = d // 2, s + 1
    for a in (2, 7, 61):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _modular_primes():
    """Primes p = 1 mod 4 below 2**31 (descending) with a square root of -1."""
    p = (1 << 31) - 1
    while True:
        p -= 1
        if p % 4 == 1 and _is_prime(p):
            for base in range(2, p):
                s = pow(base, (p - 1) // 4, p)
                if s * s % p == p - 1:
                    yield p, s
                    break


_PRIMES: list[tuple[int, int]] = []


def _prime(idx: int) -> tuple[int, int]:
    if not _PRIMES:
        gen = _modular_primes()
        _PRIMES.extend(next(gen) for _ in range(64))
    return _PRIMES[idx]


def _kernel_mod_p(a_mod: np.ndarray, p: int):
    """Kernel basis (rows) of a matrix over F_p via Gauss-Jordan in uint64.

    Entries stay below p < 2**31, so products and ``p*p`` offsets fit.
    """
    A = a_mod.astype(np.uint64)
    pu = np.uint64(p)
    offset = np.uint64(p * p)
    m, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        # row r vanishes left of column c
        A[r, c:] = A[r, c:] * np.uint64(pow(int(A[r, c]), -1, p)) % pu
        hit = np.flatnonzero(A[:, c])
        hit = hit[hit != r]
        if hit.size:
            A[hit, c:] = (A[hit, c:] + (offset - np.outer(A[hit, c], A[r, c:]))) % pu
        pivots.append(c)
        r += 1
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    K = np.zeros((len(free), ncols), dtype=object)
    for t, f in enumerate(free):
        K[t, f] = 1
        K[t, pivots] = [(p - int(x)) % p for x in A[:r, f]]
    return tuple(pivots), K


def _rational_reconstruct(u: int, m: int):
    """Return (num, den) with num/den = u mod m and |num|, den <= sqrt(m/2), or None."""
    u %= m
    if u == 0:
        return 0, 1
    bound = math.isqrt(m // 2)
    r0, r1, t0, t1 = m, u, 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or math.gcd(r1, abs(t1)) != 1:
        return None
    return (r1, t1) if t1 > 0 else (-r1, -t1)


def _reconstruct_matrix(res: np.ndarray, modulus: int):
    """Rational reconstruction of an object array of residues -> (ints, den)."""
    nums, dens = [], []
    for u in res.flat:
        rr = _rational_reconstruct(int(u), modulus)
        if rr is None:
            return None
        nums.append(rr[0])
        dens.append(rr[1])
    den = math.lcm(*dens) if dens else 1
    out = np.array([n * (den // d) for n, d in zip(nums, dens)], dtype=object).reshape(res.shape)
    return out, den


def _modular_nullspace(a: Matrix, max_primes: int = 48):
    """Kernel basis columns via CRT over primes p = 1 mod 4, or None.

    A candidate is accepted only after the exact check ``a @ K.T == 0``; the
    number of vectors can never undercount the true nullity, so a verified
    candidate spans the whole kernel.
    """
    m, ncols = a.shape
    best_pivots = None
    modulus = 1
    res_re = res_im = None
    for idx in range(max_primes):
        p, s = _prime(idx)
        re_mod = (a._re % p).astype(np.int64)
        if a._im is None:
            pv, K = _kernel_mod_p(re_mod, p)
            k_re, k_im = K, None
        else:
            im_mod = (a._im % p).astype(np.int64)
            pv_plus, k_plus = _kernel_mod_p((re_mod + s * im_mod) % p, p)
            pv_minus, k_minus = _kernel_mod_p((re_mod - s * im_mod) % p, p)
            if pv_plus != pv_minus:
                continue
            pv = pv_plus
            kp, km = k_plus, k_minus
            # entries of the canonical kernel map to x_re + s*x_im under i -> s and x_re - s*x_im under i -> -s
            inv2 = pow(2, -1, p)
            k_re = (kp + km) * inv2 % p
            k_im = (kp - km) * pow(2 * s, -1, p) % p
        if best_pivots is None or len(pv) > len(best_pivots):
            best_pivots, modulus, res_re, res_im = pv, p, k_re, k_im
        elif pv != best_pivots:
            continue
        else:
            res_re = _crt(res_re, modulus, k_re, p)
            if res_im is not None:
                res_im = _crt(res_im, modulus, k_im, p)
            modulus *= p
        if modulus.bit_length() < 60:
            continue
        got_re = _reconstruct_matrix(res_re, modulus)
        got_im = _reconstruct_matrix(res_im, modulus) if res_im is not None else (None, 1)
        if got_re is None or got_im is None:
            continue
        (kr, dr), (ki, di) = got_re, got_im
        den = math.lcm(dr, di)
        kr = kr * (den // dr)
        ki = None if ki is None else ki * (den // di)
        if kr.shape[0] == 0:
            return []
        cand = Matrix._from_parts(kr.T.copy(), None if ki is None else ki.T.copy(), den)
        if (a @ cand).is_zero():
            return [
                Matrix._from_parts(kr[t:t + 1].T.copy(), None if ki is None else ki[t:t + 1].T.copy(), den)
                for t in range(kr.shape[0])
            ]
    return None


def _crt(r1: np.ndarray, m1: int, r2: np.ndarray, m2: int) -> np.ndarray:
    inv = pow(m1, -1, m2)
    return r1 + m1 * (((r2 - r1) * inv) % m2)


def nullspace(a: Matrix) -> list[Matrix]:
    """Basis of the right kernel as column matrices, in RREF-canonical form.

    Large systems go through a multi-modular solver whose answer is verified
    exactly; small ones and modular failures use fraction-free elimination.
    """
    if a.rows * a.cols >= 1024:
        got = _modular_nullspace(a)
        if got is not None:
            return got
    return _exact_nullspace(a)


def _exact_nullspace(a: Matrix) -> list[Matrix]:
    re_arr, im_arr, pivots = _eliminate(a._re, a._im)
    pivot_set = set(pivots)
    free = [c for c in range(a.cols) if c not in pivot_set]
    pivot_vals = [_pivot_scalar(re_arr, im_arr, j, c) for j, c in enumerate(pivots)]
    basis = []
    for f in free:
        vec = [GaussianRational(0)] * a.cols
        vec[f] = GaussianRational(1)
        for j, c in enumerate(pivots):
            entry = _pivot_scalar(re_arr, im_arr, j, f)
            if entry:
                vec[c] = -entry / pivot_vals[j]
        basis.append(Matrix.column(vec))
    return basis


def invert(a: Matrix) -> Matrix:
    if not a.is_square():
        raise DimensionError(f"cannot invert a {a.rows}x{a.cols} matrix")
    n = a.rows
    eye = Matrix.identity(n)._re
    re_aug = np.hstack([a._re, eye])
    im_aug = None if a._im is None else np.hstack([a._im, np.zeros((n, n), dtype=object)])
    re_arr, im_arr, pivots = _eliminate(re_aug, im_aug, limit=n)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    entries = []
    for j in range(n):
        scale = GaussianRational(a._den) / _pivot_scalar(re_arr, im_arr, j, j)
        for c in range(n, 2 * n):
            entries.append(_pivot_scalar(re_arr, im_arr, j, c) * scale)
    return Matrix(n, n, entries)


def determinant(a: Matrix) -> GaussianRational:
    """Determinant by Gaussian elimination over Q(i)."""
    if not a.is_square():
        raise DimensionError("determinant of a non-square matrix")
    m = a.tolist()
    n = a.rows
    det = GaussianRational(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return GaussianRational(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        piv = m[c][c]
        det = det * piv
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / piv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with U, V unimodular and D in Smith normal form."""

    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def invariant_factors(self) -> list[int]:
        """Diagonal of D (including zeros), length min(rows, cols)."""
        d = self.D.to_int_rows()
        return [d[i][i] for i in range(min(self.D.rows, self.D.cols))]


def _min_abs_entry(a, start, m, n):
    best = None
    for i in range(start, m):
        for j in range(start, n):
            v = a[i][j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
    return best


def smith_normal_form(a) -> SmithDecomposition:
    """Smith normal form of an integer matrix (Matrix or nested int lists).

    Pivots are chosen by minimal absolute value, first in row-major order, so
    U and V are deterministic.
    """
    if isinstance(a, Matrix):
        rows = a.to_int_rows()
        m, n = a.rows, a.cols
    else:
        rows = [[int(x) for x in r] for r in a]
        m = len(rows)
        n = len(rows[0]) if rows else 0
    A = [list(r) for r in rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (A, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        for M in (A, U):
            M[dst] = [x + q * y for x, y in zip(M[dst], M[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for M in (A, V):
            for row in M:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = _min_abs_entry(A, t, m, n)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]

    def to_matrix(rows_, r, c):
        return Matrix(r, c, [x for row in rows_ for x in row])

    return SmithDecomposition(to_matrix(U, m, m), to_matrix(A, m, n), to_matrix(V, n, n))
