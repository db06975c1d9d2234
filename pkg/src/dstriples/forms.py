"""Binary quadratic forms of discriminant 8 and -8.

Solutions of X^2 - 2Y^2 = k are produced from representative parallel
primitive forms (rpapfs) [k, 2j, (j^2 - 2)/k], one per root j of
j^2 = 2 (mod |k|).  Each rpapf is carried to the principal form [1, 2, -1]
by half-reduced right-neighbour steps R(t); undoing that chain and mapping
through B = R(0)R(1) (which carries X^2 - 2Y^2 to the principal form) gives
one solution per family.  The rest of a family follows from the automorph
[[3, 4], [2, 3]] of X^2 - 2Y^2.

The positive definite side t^2 + 2k^2 = a works the same way, with rpapfs
[a, 2j, (j^2 + 2)/a] reduced to [1, 0, 2].

Sign convention: solutions are stored with Y > 0 (a common sign flip is
always allowed); X keeps its sign.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterator

from .arith import sqrt_mod, square_divisors

log = logging.getLogger(__name__)

# The first positive member of a family is normally within a few steps of
# the reduction output.  Walks longer than this are logged.
SCAN_WINDOW = 8
_MAX_CHAIN = 100_000


@dataclass(frozen=True)
class IntMatrix2:
    """2x2 integer matrix [[a, b], [c, d]]."""

    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "IntMatrix2") -> "IntMatrix2":
        return IntMatrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "IntMatrix2":
        return IntMatrix2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "IntMatrix2":
        det = self.det
        if det not in (1, -1):
            raise ValueError("only unimodular matrices are inverted")
        return IntMatrix2(det * self.d, -det * self.b, -det * self.c, det * self.a)

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]


IDENTITY = IntMatrix2(1, 0, 0, 1)


def R(t: int) -> IntMatrix2:
    return IntMatrix2(0, -1, 1, t)


B = R(0) @ R(1)
AUTO = R(-2) @ R(2)
AUTO_PRIME = IntMatrix2(3, 4, 2, 3)
AUTO_PRIME_INV = AUTO_PRIME.inverse()


@dataclass(frozen=True)
class QuadForm:
    """The form a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_primitive(self) -> bool:
        return gcd(self.a, self.b, self.c) == 1

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def transform(self, m: IntMatrix2) -> "QuadForm":
        """The form F'(x, y) = F(m (x, y))."""
        return QuadForm(
            self(m.a, m.c),
            2 * self.a * m.a * m.b + self.b * (m.a * m.d + m.b * m.c) + 2 * self.c * m.c * m.d,
            self(m.b, m.d),
        )

    def step(self, t: int) -> "QuadForm":
        """Apply R(t): [a, b, c] -> [c, -b + 2ct, a - bt + ct^2]."""
        a, b, c = self.a, self.b, self.c
        return QuadForm(c, -b + 2 * c * t, a - b * t + c * t * t)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"[{self.a},{self.b},{self.c}]"


PELL = QuadForm(1, 0, -2)
PRINCIPAL = QuadForm(1, 2, -1)
DEFINITE_REDUCED = QuadForm(1, 0, 2)


def f_disc(disc: int) -> int:
    """Ceiling of sqrt(disc) for a positive discriminant."""
    r = isqrt(disc)
    return r if r * r == disc else r + 1


def half_reduced_right_neighbor(form: QuadForm) -> tuple[QuadForm, int]:
    """One indefinite right-neighbour step; returns (F', t)."""
    a, b, c = form.as_tuple()
    if c == 0:
        raise ValueError(f"form {form} factorizes (c = 0)")
    disc = form.disc
    if disc <= 0:
        raise ValueError(f"form {form} is not indefinite")
    f = f_disc(disc)
    if c > 0:
        t = -((-(f + b)) // (2 * c)) - 1
    else:
        t = 1 + (-(f + b)) // (-2 * c)
    return form.step(t), t


def reduce_indefinite(
    form: QuadForm, target: QuadForm = PRINCIPAL
) -> tuple[tuple[int, ...], list[QuadForm]]:
    """Right-neighbour chain from ``form`` to ``target``: (t-tuple, chain)."""
    chain = [form]
    ts: list[int] = []
    current = form
    while current != target:
        if len(ts) >= _MAX_CHAIN:
            raise RuntimeError(f"{form} did not reach {target}")
        current, t = half_reduced_right_neighbor(current)
        ts.append(t)
        chain.append(current)
    return tuple(ts), chain


def chain_matrix(ts: tuple[int, ...] | list[int]) -> IntMatrix2:
    """Rpa(t1, ..., tL) = R(t1) R(t2) ... R(tL)."""
    m = IDENTITY
    for t in ts:
        m = m @ R(t)
    return m


def is_reduced_definite(form: QuadForm) -> bool:
    a, b, c = form.as_tuple()
    if not abs(b) <= a <= c:
        return False
    return b >= 0 if (abs(b) == a or a == c) else True


def reduce_definite(form: QuadForm) -> tuple[tuple[int, ...], list[QuadForm]]:
    """Definite right-neighbour chain ending at the reduced form."""
    if form.a <= 0 or form.disc >= 0:
        raise ValueError(f"{form} is not positive definite")
    chain = [form]
    ts: list[int] = []
    current = form
    while not is_reduced_definite(current):
        if len(ts) >= _MAX_CHAIN:
            raise RuntimeError(f"{form} did not reduce")
        c, b = current.c, current.b
        t = -((c - b) // (2 * c))
        current = current.step(t)
        ts.append(t)
        chain.append(current)
    return tuple(ts), chain


@dataclass(frozen=True, order=True)
class PellSolution:
    X: int
    Y: int
    k: int

    def __post_init__(self) -> None:
        if self.X * self.X - 2 * self.Y * self.Y != self.k:
            raise ValueError(f"({self.X},{self.Y}) does not give {self.k}")

    @property
    def is_proper(self) -> bool:
        return gcd(self.X, self.Y) == 1

    def as_tuple(self) -> tuple[int, int]:
        return (self.X, self.Y)


def normalize(x: int, y: int, k: int) -> PellSolution:
    if y < 0 or (y == 0 and x < 0):
        x, y = -x, -y
    return PellSolution(x, y, k)


@dataclass(frozen=True)
class SolutionFamily:
    k: int
    j: int
    rpapf: QuadForm
    t_tuple: tuple[int, ...]
    fundamental: PellSolution
    family_tag: str | None = field(default=None, compare=False)

    @property
    def conjugate_j(self) -> int:
        return (-self.j) % abs(self.k)


def rpapf_indefinite(k: int) -> list[tuple[int, QuadForm]]:
    """Primitive forms [k, 2j, (j^2 - 2)/k] for j^2 = 2 (mod |k|), 0 <= j < |k|."""
    if k == 0:
        raise ValueError("k must be nonzero")
    out = []
    for j in sqrt_mod(2, abs(k)):
        form = QuadForm(k, 2 * j, (j * j - 2) // k)
        if form.is_primitive:
            out.append((j, form))
    return out


def auto_power(n: int) -> IntMatrix2:
    """(Auto')^n from the Chebyshev values S(n, 6).

    Cayley-Hamilton gives M^n = S(n-1) M - S(n-2) I for trace 6, det 1.
    """
    s_n, s_prev = chebyshev_s(n), chebyshev_s(n - 1)
    diag = s_n - 3 * s_prev
    return IntMatrix2(diag, 4 * s_prev, 2 * s_prev, diag)


def neg_auto_power(n: int) -> IntMatrix2:
    """(-Auto)^n = [[S(n-1) - S(n-2), 2S(n-1)], [2S(n-1), S(n) - S(n-1)]]."""
    s_n, s1, s2 = chebyshev_s(n), chebyshev_s(n - 1), chebyshev_s(n - 2)
    return IntMatrix2(s1 - s2, 2 * s1, 2 * s1, s_n - s1)


def chebyshev_s(n: int) -> int:
    """S(n, 6) with S(-1) = 0, S(0) = 1, S(n) = 6 S(n-1) - S(n-2), any integer n."""
    if n < 0:
        return 0 if n == -1 else -chebyshev_s(-n - 2)
    prev, cur = 0, 1
    for _ in range(n):
        prev, cur = cur, 6 * cur - prev
    return cur


def _tag_families(families: list[SolutionFamily]) -> list[SolutionFamily]:
    tagged = []
    for fam in families:
        first = family_iterate(fam, first_positive_index(fam))
        tag = "I" if first.X < first.Y else "II"
        tagged.append(
            SolutionFamily(fam.k, fam.j, fam.rpapf, fam.t_tuple, fam.fundamental, tag)
        )
    return tagged


@lru_cache(maxsize=4096)
def solve_pell_families(k: int) -> tuple[SolutionFamily, ...]:
    """One family per rpapf of X^2 - 2Y^2 = k, ordered by j.

    For k < 0 each family is tagged I when its first member with X > 0 also
    has X < Y, and II otherwise.
    """
    families = []
    for j, form in rpapf_indefinite(k):
        ts, _ = reduce_indefinite(form)
        x, y = (B @ chain_matrix(ts).inverse()).apply(1, 0)
        families.append(SolutionFamily(k, j, form, ts, normalize(x, y, k)))
    return tuple(_tag_families(families) if k < 0 else families)


def family_iterate(fam: SolutionFamily, i: int) -> PellSolution:
    x, y = auto_power(i).apply(*fam.fundamental.as_tuple())
    return normalize(x, y, fam.k)


def first_positive_index(fam: SolutionFamily) -> int:
    """Smallest index whose member has X > 0 (needs k < 0, where X grows with i)."""
    if fam.k >= 0:
        raise ValueError("first positive member is defined for k < 0 only")
    i = 0
    x, y = fam.fundamental.as_tuple()
    if x > 0:
        while True:
            px, py = AUTO_PRIME_INV.apply(x, y)
            if px <= 0:
                break
            x, y, i = px, py, i - 1
    else:
        while x <= 0:
            x, y = AUTO_PRIME.apply(x, y)
            i += 1
    if abs(i) > SCAN_WINDOW:
        log.warning("family j=%d of k=%d needed %d steps", fam.j, fam.k, abs(i))
    return i


def iter_positive_members(fam: SolutionFamily) -> Iterator[PellSolution]:
    """Members with X > 0 in increasing X (and Y); infinite."""
    sol = family_iterate(fam, first_positive_index(fam))
    while True:
        yield sol
        sol = normalize(*AUTO_PRIME.apply(sol.X, sol.Y), fam.k)


def members_in_box(fam: SolutionFamily, x_max: int, y_max: int) -> list[PellSolution]:
    """Members with |X| <= x_max and 0 < Y <= y_max (k < 0)."""
    start = family_iterate(fam, first_positive_index(fam))
    out = []
    sol = start
    while abs(sol.X) <= x_max:
        if sol.Y <= y_max:
            out.append(sol)
        sol = normalize(*AUTO_PRIME.apply(sol.X, sol.Y), fam.k)
    sol = normalize(*AUTO_PRIME_INV.apply(start.X, start.Y), fam.k)
    while abs(sol.X) <= x_max:
        if sol.Y <= y_max:
            out.append(sol)
        sol = normalize(*AUTO_PRIME_INV.apply(sol.X, sol.Y), fam.k)
    return sorted(out)


def unique_xy_solution(s: int) -> list[PellSolution]:
    """Proper solutions of X^2 - 2Y^2 = -s^2 with 0 < X < Y, sorted by X."""
    if s < 3 or s % 2 == 0:
        raise ValueError(f"s must be odd and at least 3, got {s}")
    out = []
    for fam in solve_pell_families(-s * s):
        for sol in iter_positive_members(fam):
            if sol.X >= sol.Y:
                break
            out.append(sol)
    return sorted(out)


@dataclass(frozen=True)
class DefiniteRep:
    """A proper representation t^2 + 2k^2 = a with k >= 0."""

    t: int
    k: int
    j: int
    rpapf: QuadForm
    t_tuple: tuple[int, ...]

    @property
    def a(self) -> int:
        return self.t * self.t + 2 * self.k * self.k


def rpapf_definite(a: int) -> list[tuple[int, QuadForm]]:
    if a < 1:
        raise ValueError("a must be positive")
    out = []
    for j in sqrt_mod(-2, a):
        form = QuadForm(a, 2 * j, (j * j + 2) // a)
        if form.is_primitive:
            out.append((j, form))
    return out


def definite_reps(a: int) -> list[DefiniteRep]:
    out = []
    for j, form in rpapf_definite(a):
        ts, chain = reduce_definite(form)
        if chain[-1] != DEFINITE_REDUCED:
            raise AssertionError(f"{form} reduced to {chain[-1]}")
        t, k = chain_matrix(ts).inverse().apply(1, 0)
        if k < 0 or (k == 0 and t < 0):
            t, k = -t, -k
        out.append(DefiniteRep(t, k, j, form, ts))
        if k == 0:
            out.append(DefiniteRep(-t, k, j, form, ts))
    return sorted(out, key=lambda r: (r.t, r.k))


@lru_cache(maxsize=4096)
def solve_definite(a: int) -> tuple[tuple[int, int], ...]:
    """Proper solutions (t, k) of t^2 + 2k^2 = a with k >= 0, sorted by t."""
    return tuple((r.t, r.k) for r in definite_reps(a))


@dataclass(frozen=True)
class ScaledRep:
    """A representation A * (proper representation of a / A^2)."""

    u: int
    v: int
    scale: int

    @property
    def proper(self) -> bool:
        return self.scale == 1


def all_definite_reps(a: int) -> list[ScaledRep]:
    """All (t, k) with t, k > 0 and t^2 + 2k^2 = a, proper or not."""
    out = []
    for A in square_divisors(a):
        for t, k in solve_definite(a // (A * A)):
            if t > 0 and k > 0:
                out.append(ScaledRep(A * t, A * k, A))
    return sorted(out, key=lambda r: (r.u, r.v))


def all_pell_reps(a: int, x_max: int, y_max: int) -> list[ScaledRep]:
    """All (X, Y) with 0 < X <= x_max, 0 < Y <= y_max and X^2 - 2Y^2 = -a."""
    out = []
    for A in square_divisors(a):
        for fam in solve_pell_families(-(a // (A * A))):
            for sol in iter_positive_members(fam):
                if A * sol.X > x_max:
                    break
                if A * sol.Y <= y_max:
                    out.append(ScaledRep(A * sol.X, A * sol.Y, A))
    return sorted(out, key=lambda r: (r.u, r.v))


def brute_force_pell(k: int, x_max: int, y_max: int) -> list[tuple[int, int]]:
    """Proper (X, Y) with |X| <= x_max, 0 < Y <= y_max and X^2 - 2Y^2 = k."""
    out = []
    for y in range(1, y_max + 1):
        xx = k + 2 * y * y
        if xx < 0:
            continue
        x = isqrt(xx)
        if x * x == xx and x <= x_max and gcd(x, y) == 1:
            out.append((x, y))
            if x:
                out.append((-x, y))
    return sorted(out)
