"""Sparse graded polynomials with rational coefficients.

Variables are characteristic classes ``c_i(label)`` or ``s_i(label)`` of
weight i.  A monomial is a sorted tuple of ``(variable, exponent)`` pairs.
"""
from __future__ import annotations

import numbers
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

__all__ = ["GradedVariable", "GradedPolynomial", "var"]


@dataclass(frozen=True, order=True)
class GradedVariable:
    label: str
    family: str
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("variable index must be >= 1")
        if self.family not in ("c", "s"):
            raise ValueError(f"unknown class family {self.family!r}")

    @property
    def weight(self) -> int:
        return self.index

    def __str__(self):
        return f"{self.family}{self.index}({self.label})"


Monomial = tuple[tuple[GradedVariable, int], ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    powers = dict(a)
    for v, e in b:
        powers[v] = powers.get(v, 0) + e
    return tuple(sorted(powers.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(v.index * e for v, e in m)


def _mono_str(m: Monomial) -> str:
    return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)


class GradedPolynomial:
    """Immutable polynomial; zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[tuple(sorted(mono))] = coeff
        self._terms = clean

    @classmethod
    def constant(cls, c) -> GradedPolynomial:
        return cls({(): Fraction(c)})

    @classmethod
    def variable(cls, v: GradedVariable) -> GradedPolynomial:
        return cls({((v, 1),): Fraction(1)})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def coefficient(self, *factors: GradedVariable) -> Fraction:
        """Coefficient of the product of ``factors`` (repeat a variable for powers)."""
        mono: Monomial = ()
        for v in factors:
            mono = _mono_mul(mono, ((v, 1),))
        return self._terms.get(mono, Fraction(0))

    def labels(self) -> list[str]:
        return sorted({v.label for mono in self._terms for v, _ in mono})

    def degrees(self) -> set[int]:
        return {_mono_degree(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        """Graded degree (max over terms); 0 for constants and zero."""
        return max(self.degrees(), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def evaluate(self, values: Mapping[GradedVariable, Fraction]) -> Fraction:
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            term = coeff
            for v, e in mono:
                term *= Fraction(values[v]) ** e
            total += term
        return total

    # arithmetic -------------------------------------------------------------

    @staticmethod
    def _lift(x) -> GradedPolynomial | None:
        if isinstance(x, GradedPolynomial):
            return x
        if isinstance(x, numbers.Rational):
            return GradedPolynomial.constant(x)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return GradedPolynomial(terms)

    __radd__ = __add__

    def __neg__(self):
        return GradedPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, numbers.Rational):
            return GradedPolynomial({m: c * other for m, c in self._terms.items()})
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _mono_mul(m1, m2)
                terms[mono] = terms.get(mono, Fraction(0)) + c1 * c2
        return GradedPolynomial(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, numbers.Rational):
            return NotImplemented
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, e: int):
        out = GradedPolynomial.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # printing ---------------------------------------------------------------

    def _sort_key(self, mono: Monomial, labels: list[str]):
        per_label = [-sum(v.index * e for v, e in mono if v.label == lab) for lab in labels]
        indices = sorted((v.index for v, e in mono for _ in range(e)), reverse=True)
        return (_mono_degree(mono), per_label, [-i for i in indices], [(v.label, v.family) for v, _ in mono])

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms by graded degree, then by weight in the first label (descending), and so on."""
        labels = self.labels()
        return sorted(self._terms.items(), key=lambda item: self._sort_key(item[0], labels))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for mono, coeff in self.sorted_terms():
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = _mono_str(mono)
            else:
                body = f"{mag}*{_mono_str(mono)}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"GradedPolynomial({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> GradedPolynomial:
        """Inverse of ``str``: ``"c4(A) - 5*c2(A)*c2(B) + c4(B)"``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        total = cls()
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            term = cls.constant(-1 if sign == "-" else 1)
            for factor in body.split("*"):
                m = _FACTOR.fullmatch(factor)
                if m is None:
                    term = term * Fraction(factor)
                    continue
                v = GradedVariable(m.group("label"), m.group("family"), int(m.group("index")))
                term = term * cls.variable(v) ** int(m.group("exp") or 1)
            total = total + term
        return total


_FACTOR = re.compile(r"(?P<family>[cs])(?P<index>\d+)\((?P<label>[^()]+)\)(?:\^(?P<exp>\d+))?")


def var(family: str, index: int, label: str = "A") -> GradedPolynomial:
    """Shorthand: ``var("c", 2, "A")`` is the polynomial c2(A)."""
    return GradedPolynomial.variable(GradedVariable(label, family, index))
