"""Numbers u + v*sqrt(d) with rational u, v and squarefree d > 1."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math
from typing import Union

from mpmath import mp, mpf, sqrt as mp_sqrt

from .arith import squarefree_decompose

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class QuadSurd:
    u: Fraction
    v: Fraction
    d: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("radicand must be positive")

    @classmethod
    def sqrt(cls, value: Scalar) -> "Number":
        """Exact square root of a non-negative rational."""
        value = Fraction(value)
        if value < 0:
            raise ValueError("square root of a negative number")
        num, den = value.numerator * value.denominator, value.denominator
        r, d = squarefree_decompose(num) if num else (0, 1)
        coeff = Fraction(r, den)
        if d == 1:
            return coeff
        return cls(Fraction(0), coeff, d)

    def _coerce(self, other: "Number") -> "QuadSurd":
        if isinstance(other, QuadSurd):
            if other.d != self.d and other.v and self.v:
                raise ValueError(f"mixed radicands {self.d} and {other.d}")
            return other
        return QuadSurd(Fraction(other), Fraction(0), self.d)

    @staticmethod
    def _make(u: Fraction, v: Fraction, d: int) -> "Number":
        return u if v == 0 else QuadSurd(u, v, d)

    def _pick_d(self, other: "QuadSurd") -> int:
        return self.d if self.v else other.d

    def __add__(self, other: "Number") -> "Number":
        o = self._coerce(other)
        return self._make(self.u + o.u, self.v + o.v, self._pick_d(o))

    __radd__ = __add__

    def __neg__(self) -> "QuadSurd":
        return QuadSurd(-self.u, -self.v, self.d)

    def __sub__(self, other: "Number") -> "Number":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "Number") -> "Number":
        return (-self) + other

    def __mul__(self, other: "Number") -> "Number":
        o = self._coerce(other)
        d = self._pick_d(o)
        return self._make(self.u * o.u + self.v * o.v * d, self.u * o.v + self.v * o.u, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadSurd":
        return QuadSurd(self.u, -self.v, self.d)

    def norm(self) -> Fraction:
        return self.u * self.u - self.v * self.v * self.d

    def __truediv__(self, other: "Number") -> "Number":
        o = self._coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero surd")
        return _scale(self * o.conjugate(), 1 / n)

    def __rtruediv__(self, other: "Number") -> "Number":
        return self._coerce(other) / self

    def sign(self) -> int:
        """Exact sign of u + v*sqrt(d)."""
        su = (self.u > 0) - (self.u < 0)
        sv = (self.v > 0) - (self.v < 0)
        if su == sv or sv == 0:
            return su
        if su == 0:
            return sv
        # opposite signs: compare u^2 with v^2 d
        diff = self.u * self.u - self.v * self.v * self.d
        return su if diff > 0 else (sv if diff < 0 else 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, QuadSurd)):
            return sign_of(self - other) == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.u, self.v, self.d))

    def __lt__(self, other: "Number") -> bool:
        return sign_of(self - other) < 0

    def __gt__(self, other: "Number") -> bool:
        return sign_of(self - other) > 0

    def __float__(self) -> float:
        return float(self.u) + float(self.v) * math.sqrt(self.d)

    def to_mpf(self, dps: int = 40) -> mpf:
        with mp.workdps(dps):
            return mpf(self.u.numerator) / self.u.denominator + (
                mpf(self.v.numerator) / self.v.denominator
            ) * mp_sqrt(self.d)

    def __str__(self) -> str:
        return f"{self.u} + {self.v}*sqrt({self.d})"


Number = Union[int, Fraction, QuadSurd]


def _scale(x: "Number", factor: Fraction) -> "Number":
    if isinstance(x, QuadSurd):
        return QuadSurd._make(x.u * factor, x.v * factor, x.d)
    return Fraction(x) * factor


def sign_of(x: Number) -> int:
    if isinstance(x, QuadSurd):
        return x.sign()
    return (x > 0) - (x < 0)


def to_float(x: Number) -> float:
    return float(x)
