"""Curvature relations for three mutually tangent circles and their two
Apollonius companions, plus the exhaustive enumeration used as an oracle."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterator, Union


@dataclass(frozen=True, order=True)
class CurvatureTriple:
    c1: int
    c2: int
    c3: int

    def __post_init__(self) -> None:
        if not 0 < self.c1 <= self.c2 <= self.c3:
            raise ValueError(f"need 0 < c1 <= c2 <= c3, got {self.as_tuple()}")

    @classmethod
    def of(cls, *values: int) -> "CurvatureTriple":
        """Build from any three positive curvatures, sorting them."""
        if len(values) == 1:
            values = tuple(values[0])
        a, b, c = sorted(int(v) for v in values)
        return cls(a, b, c)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.c1, self.c2, self.c3)

    def __str__(self) -> str:
        return f"[{self.c1},{self.c2},{self.c3}]"

    def scaled(self, g: int) -> "CurvatureTriple":
        return CurvatureTriple(g * self.c1, g * self.c2, g * self.c3)


@dataclass(frozen=True, order=True)
class DSQuintuple:
    triple: CurvatureTriple
    q: int
    c4_minus: int
    c4_plus: int

    def __post_init__(self) -> None:
        c1, c2, c3 = self.triple.as_tuple()
        if self.q * self.q != c1 * c2 + c1 * c3 + c2 * c3:
            raise ValueError(f"q={self.q} does not match {self.triple}")
        s = c1 + c2 + c3
        if (self.c4_minus, self.c4_plus) != (s - 2 * self.q, s + 2 * self.q):
            raise ValueError(f"wrong fourth curvatures for {self.triple}")

    @property
    def c1(self) -> int:
        return self.triple.c1

    @property
    def c2(self) -> int:
        return self.triple.c2

    @property
    def c3(self) -> int:
        return self.triple.c3

    @property
    def is_degenerate(self) -> bool:
        return self.c4_minus == 0

    def __str__(self) -> str:
        return f"{self.triple} q={self.q} [{self.c4_minus},{self.c4_plus}]"


@dataclass(frozen=True)
class NotDS:
    """Absent result: q*q is not a perfect square, so c4 is irrational."""

    triple: CurvatureTriple
    q_squared: int


class ParityClass(enum.Enum):
    EVEN_EVEN_ODD = "EvenEvenOdd"
    ODD_ODD_EVEN = "OddOddEven"


@dataclass(frozen=True)
class Degenerate:
    """The straight-line third curvature c1 + c2 + 2*sqrt(c1*c2).

    ``value`` is set when c1*c2 is a perfect square, otherwise ``None`` and
    the exact value is ``c1 + c2 + 2*sqrt(radicand)``.
    """

    c1: int
    c2: int
    value: int | None

    @property
    def radicand(self) -> int:
        return self.c1 * self.c2

    @property
    def is_integer(self) -> bool:
        return self.value is not None


def _triple(t: Union[CurvatureTriple, tuple[int, int, int]]) -> CurvatureTriple:
    return t if isinstance(t, CurvatureTriple) else CurvatureTriple.of(*t)


def q_squared(triple: CurvatureTriple | tuple[int, int, int]) -> int:
    c1, c2, c3 = _triple(triple).as_tuple()
    return c1 * c2 + c1 * c3 + c2 * c3


def quintuple(triple: CurvatureTriple | tuple[int, int, int]) -> DSQuintuple | NotDS:
    t = _triple(triple)
    qq = q_squared(t)
    q = isqrt(qq)
    if q * q != qq:
        return NotDS(t, qq)
    s = t.c1 + t.c2 + t.c3
    return DSQuintuple(t, q, s - 2 * q, s + 2 * q)


def descartes_residual(curvatures: tuple[int, int, int, int]) -> int:
    """(sum c)^2 - 2 * sum c^2; zero exactly when four circles can touch."""
    return sum(curvatures) ** 2 - 2 * sum(c * c for c in curvatures)


def is_primitive(triple: CurvatureTriple | tuple[int, int, int]) -> bool:
    c1, c2, c3 = _triple(triple).as_tuple()
    return gcd(c1, c2, c3) == 1


def parity_class(triple: CurvatureTriple | tuple[int, int, int]) -> ParityClass:
    """Which of the two admissible parity patterns a primitive DS triple has.

    Raises ``ValueError`` if neither pattern (with its mod 4 sum rule) holds.
    """
    cs = _triple(triple).as_tuple()
    evens = [c for c in cs if c % 2 == 0]
    odds = [c for c in cs if c % 2]
    if len(evens) == 2 and sum(evens) % 4 == 0:
        return ParityClass.EVEN_EVEN_ODD
    if len(odds) == 2 and sum(odds) % 4 == 2:
        return ParityClass.ODD_ODD_EVEN
    raise ValueError(f"{cs} fits neither parity pattern of primitive DS triples")


def degenerate_c3(c1: int, c2: int) -> Degenerate:
    if not 0 < c1 <= c2:
        raise ValueError("need 0 < c1 <= c2")
    h = isqrt(c1 * c2)
    if h * h == c1 * c2:
        return Degenerate(c1, c2, c1 + c2 + 2 * h)
    return Degenerate(c1, c2, None)


def _smallest_prime_factors(limit: int) -> list[int]:
    spf = list(range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            for multiple in range(p * p, limit + 1, p):
                if spf[multiple] == multiple:
                    spf[multiple] = p
    return spf


def _divisors(n: int, spf: list[int]) -> list[int]:
    divs = [1]
    while n > 1:
        p, e = spf[n], 0
        while n % p == 0:
            n //= p
            e += 1
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return divs


def iter_primitive_ds(c3_max: int) -> Iterator[DSQuintuple]:
    """Yield every primitive DS quintuple with c3 <= c3_max in (c3, c1, c2) order.

    With u = c1 + c3 and v = c2 + c3 the defining relation becomes
    q*q + c3*c3 = u*v, so for each (c3, q) the candidates are the divisor
    pairs of q*q + c3*c3 with c3 < u <= v <= 2*c3.  Every admissible triple
    is met exactly once.
    """
    if c3_max < 1:
        return
    spf = _smallest_prime_factors(4 * c3_max * c3_max)
    for c3 in range(1, c3_max + 1):
        found = []
        # q*q ranges over [1 + 2*c3, 3*c3*c3]
        for q in range(isqrt(2 * c3), isqrt(3 * c3 * c3) + 1):
            n = q * q + c3 * c3
            for u in _divisors(n, spf):
                v = n // u
                if c3 < u <= v <= 2 * c3:
                    c1, c2 = u - c3, v - c3
                    if gcd(c1, c2, c3) == 1:
                        found.append((c1, c2, q))
        for c1, c2, q in sorted(found):
            s = c1 + c2 + c3
            yield DSQuintuple(CurvatureTriple(c1, c2, c3), q, s - 2 * q, s + 2 * q)


def enumerate_primitive_ds(c3_max: int) -> list[DSQuintuple]:
    """All primitive DS quintuples with c3 <= c3_max, sorted by (c3, c1, c2)."""
    return list(iter_primitive_ds(c3_max))


def enumerate_primitive_ds_naive(c3_max: int) -> list[DSQuintuple]:
    """Direct triple loop; only for cross-checking at small bounds."""
    out = []
    for c3 in range(1, c3_max + 1):
        for c1 in range(1, c3 + 1):
            for c2 in range(c1, c3 + 1):
                if gcd(c1, c2, c3) != 1:
                    continue
                q5 = quintuple(CurvatureTriple(c1, c2, c3))
                if isinstance(q5, DSQuintuple):
                    out.append(q5)
    return out
