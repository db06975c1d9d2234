"""Structured generators of primitive DS triples.

* equal pairs [c, c, d] and [c, d, d] from coprime pairs (n, m) of opposite
  parity;
* triples with c4- = 0, i.e. [M^2, N^2, (M + N)^2];
* distinct triples with q = c3 (case i), q = c3 - k (case ii) and
  q = c3 + k (case iii), each reached through X^2 - 2Y^2 = -s^2 or the pair
  X^2 - 2Yh^2 = -a, t^2 + 2k^2 = a.

Every generator is checked against the exhaustive enumeration in
:mod:`dstriples.descartes`.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Iterable, Iterator

from .arith import euler_phi, square_divisors
from .descartes import CurvatureTriple, DSQuintuple, quintuple
from .forms import (
    PellSolution,
    SolutionFamily,
    all_definite_reps,
    family_iterate,
    first_positive_index,
    iter_positive_members,
    solve_pell_families,
    unique_xy_solution,
)


def _ds(c1: int, c2: int, c3: int) -> DSQuintuple:
    q5 = quintuple(CurvatureTriple.of(c1, c2, c3))
    if not isinstance(q5, DSQuintuple):
        raise AssertionError(f"[{c1},{c2},{c3}] is not DS")
    return q5


# equal pairs ---------------------------------------------------------------


@dataclass(frozen=True, order=True)
class MPair:
    n: int
    m: int

    def __post_init__(self) -> None:
        if not (self.n > self.m >= 1 and gcd(self.n, self.m) == 1 and (self.n + self.m) % 2):
            raise ValueError(f"({self.n},{self.m}) is not an admissible pair")


def m_pairs(n_max: int) -> list[MPair]:
    """All (n, m) with n <= n_max, n > m >= 1, gcd 1 and n + m odd."""
    return [
        MPair(n, m)
        for n in range(2, n_max + 1)
        for m in range(1, n)
        if (n + m) % 2 and gcd(n, m) == 1
    ]


def m_pair_count(n: int) -> int:
    return euler_phi(2 * n) // 2


@dataclass(frozen=True)
class EqualPairTriple:
    pair: MPair
    kind: str  # "I" or "II"
    quintuple: DSQuintuple

    @property
    def shape(self) -> str:
        """"ccd" for [c, c, d] and "cdd" for [c, d, d]."""
        c1, c2, _ = self.quintuple.triple.as_tuple()
        return "ccd" if c1 == c2 else "cdd"


def equal_pair_triples(p: MPair) -> list[EqualPairTriple]:
    n, m = p.n, p.m
    d = (n - m) ** 2
    if n * n + m * m < 4 * n * m:
        t1 = (d, d, 2 * n * m)
    else:
        t1 = (2 * n * m, d, d)
    q1 = n * n - m * m
    # sqrt(3) m < n  <=>  3 m^2 < n^2
    if 3 * m * m < n * n:
        t2 = (2 * m * m, 2 * m * m, n * n - m * m)
    else:
        t2 = (n * n - m * m, 2 * m * m, 2 * m * m)
    q2 = 2 * n * m
    out = []
    for kind, triple, q, c4m, c4p in (
        ("I", t1, q1, 2 * m * (2 * m - n), 2 * n * (2 * n - m)),
        ("II", t2, q2, (n - m) * (n - 3 * m), (n + m) * (n + 3 * m)),
    ):
        q5 = DSQuintuple(CurvatureTriple(*triple), q, c4m, c4p)
        out.append(EqualPairTriple(p, kind, q5))
    return out


def equal_pair_solutions(c3_max: int) -> list[DSQuintuple]:
    """Equal-pair quintuples with c3 <= c3_max."""
    out = []
    # the largest entry is at least 2n - 1, so n <= (c3_max + 1) / 2
    for p in m_pairs((c3_max + 1) // 2 + 1):
        for e in equal_pair_triples(p):
            if e.quintuple.c3 <= c3_max:
                out.append(e.quintuple)
    return sorted(out)


# c4- = 0 ---------------------------------------------------------------------


def zero_c4_triples(n: int) -> list[DSQuintuple]:
    """Primitive [M^2, N^2, n^2] with M + N = n, gcd(M, N) = 1, by ascending c1."""
    if n < 2:
        raise ValueError("n must be at least 2")
    out = []
    for M in range(1, n // 2 + 1):
        N = n - M
        if gcd(M, N) == 1:
            q5 = DSQuintuple(
                CurvatureTriple(M * M, N * N, n * n),
                M * M + N * N + M * N,
                0,
                4 * (M * M + N * N + M * N),
            )
            out.append(q5)
    return out


def zero_c4_count(n: int) -> int:
    return 1 if n == 2 else euler_phi(n) // 2


def zero_c4_solutions(c3_max: int) -> list[DSQuintuple]:
    out = []
    for n in range(2, isqrt(c3_max) + 1):
        out.extend(zero_c4_triples(n))
    return sorted(out)


# case i: q = c3 -------------------------------------------------------------


@dataclass(frozen=True)
class CaseIRow:
    s: int
    x: int
    y: int
    X: int
    Y: int
    quintuple: DSQuintuple
    family: SolutionFamily
    conjugate: SolutionFamily

    @property
    def q(self) -> int:
        return self.quintuple.q


def case_i_rows(s: int) -> list[CaseIRow]:
    """Case i triples for one odd s >= 3, by ascending X."""
    if s < 3 or s % 2 == 0:
        raise ValueError(f"s must be odd and at least 3, got {s}")
    families = {f.j: f for f in solve_pell_families(-s * s)}
    rows = []
    for sol in unique_xy_solution(s):
        fam = _family_of(sol, families.values())
        conj = families[fam.conjugate_j]
        x, y = (sol.Y - sol.X) // 2, (sol.Y + sol.X) // 2
        c3 = (sol.Y + s) // 2
        q5 = _ds(x, y, c3)
        if q5.q != c3:
            raise AssertionError(f"s={s}: q={q5.q} differs from c3={c3}")
        rows.append(CaseIRow(s, x, y, sol.X, sol.Y, q5, fam, conj))
    return rows


def _family_of(sol: PellSolution, families: Iterable[SolutionFamily]) -> SolutionFamily:
    for fam in families:
        for member in iter_positive_members(fam):
            if member.X > sol.X:
                break
            if member == sol:
                return fam
    raise AssertionError(f"{sol} belongs to no family")


def solve_case_i(s_max: int) -> list[CaseIRow]:
    out = []
    for s in range(3, s_max + 1, 2):
        out.extend(case_i_rows(s))
    return out


def case_i_solutions(c3_max: int) -> list[DSQuintuple]:
    # c3 = (Y + s) / 2 with Y > s / sqrt(2), hence s < 2 c3 / (1 + 1/sqrt 2) < 2 c3
    out = [r.quintuple for r in solve_case_i(2 * c3_max) if r.quintuple.c3 <= c3_max]
    return sorted(out)


# cases ii and iii -----------------------------------------------------------


class SolutionType(enum.Enum):
    A = "a"  # both representations proper
    B = "b"  # (X, Yh) = A * proper, (t, k) proper
    C = "c"  # (X, Yh) proper, (t, k) = A * proper
    D = "d"  # both improper


@dataclass(frozen=True)
class CaseIISolution:
    a: int
    X: int
    Yhat: int
    t: int
    k: int
    quintuple: DSQuintuple
    type_tag: SolutionType
    case: str  # "ii" (q = c3 - k) or "iii" (q = c3 + k)
    x_scale: int = 1
    t_scale: int = 1

    def __post_init__(self) -> None:
        if self.X**2 - 2 * self.Yhat**2 != -self.a or self.t**2 + 2 * self.k**2 != self.a:
            raise ValueError("representations do not match a")

    @property
    def triple(self) -> CurvatureTriple:
        return self.quintuple.triple

    @property
    def Y(self) -> int:
        return self.Yhat - self.k if self.case == "ii" else self.Yhat + self.k


def _type_tag(x_scale: int, t_scale: int) -> SolutionType:
    if x_scale == 1:
        return SolutionType.A if t_scale == 1 else SolutionType.C
    return SolutionType.B if t_scale == 1 else SolutionType.D


def _assemble(case: str, a: int, X: int, Yh: int, t: int, k: int) -> tuple[int, int, int, int] | None:
    """(c1, c2, c3, q) for a candidate, or None if a constraint fails."""
    if case == "ii":
        Y, two_c3, two_q = Yh - k, Yh + t + k, Yh + t - k
        if X >= t + 2 * k:
            return None
    else:
        Y, two_c3, two_q = Yh + k, Yh + t - k, Yh + t + k
        if X >= t - 2 * k:
            return None
    if not 0 < X < Y or (Y - X) % 2 or two_c3 % 2:
        return None
    c1, c2, c3 = (Y - X) // 2, (Y + X) // 2, two_c3 // 2
    if gcd(c1, c2, c3) != 1:
        return None
    return c1, c2, c3, two_q // 2


def _x_reps(a: int, x_max: int) -> list[tuple[int, int, int]]:
    """(X, Yh, scale) with 0 < X <= x_max, Yh > 0 and X^2 - 2 Yh^2 = -a."""
    out = []
    for A in square_divisors(a):
        for fam in solve_pell_families(-(a // (A * A))):
            for sol in iter_positive_members(fam):
                if A * sol.X > x_max:
                    break
                out.append((A * sol.X, A * sol.Y, A))
    return sorted(out)


def _solve_cases(a: int, cases: tuple[str, ...] = ("ii", "iii")) -> dict[str, list[CaseIISolution]]:
    """Final solutions for a, for each requested case, sorted by quintuple."""
    t_reps = all_definite_reps(a)
    bounds = [0]
    if "ii" in cases:
        bounds += [r.u + 2 * r.v - 1 for r in t_reps]
    if "iii" in cases:
        bounds += [r.u - 2 * r.v - 1 for r in t_reps]
    found: dict[str, dict[CurvatureTriple, CaseIISolution]] = {c: {} for c in cases}
    if max(bounds) < 1:
        return {c: [] for c in cases}
    x_reps = _x_reps(a, max(bounds))
    for tr in t_reps:
        t, k = tr.u, tr.v
        for X, Yh, xs in x_reps:
            if "iii" in cases and _minus_root_qualifies(X, Yh, t, k):
                raise AssertionError(f"a={a}: the root 2q = Y - t gave c2 < c3")
            for case in cases:
                got = _assemble(case, a, X, Yh, t, k)
                if got is None:
                    continue
                c1, c2, c3, q = got
                q5 = _ds(c1, c2, c3)
                if q5.q != q:
                    raise AssertionError(f"a={a}: q mismatch for [{c1},{c2},{c3}]")
                sol = CaseIISolution(a, X, Yh, t, k, q5, _type_tag(xs, tr.scale), case, xs, tr.scale)
                found[case].setdefault(q5.triple, sol)
    return {c: sorted(f.values(), key=lambda s: s.quintuple) for c, f in found.items()}


def _minus_root_qualifies(X: int, Yh: int, t: int, k: int) -> bool:
    """Would 2q = Y - t (with Y = Yh + k) give c1 < c2 < c3?"""
    two_c3 = Yh - k - t
    return 0 < X < Yh + k and Yh + k + X < two_c3


def solve_case_ii(a: int) -> list[CaseIISolution]:
    """Primitive DS triples with q = c3 - k arising from a = t^2 + 2k^2."""
    return _solve_cases(a, ("ii",))["ii"]


def solve_case_iii(a: int) -> list[CaseIISolution]:
    """Primitive DS triples with q = c3 + k arising from a = t^2 + 2k^2."""
    return _solve_cases(a, ("iii",))["iii"]


def a_bound(case: str, c3_max: int) -> int:
    """Largest a that can produce c3 <= c3_max.

    2 c3 = Yh + t +- k with Yh > sqrt(a / 2).  For case ii t + k >= sqrt(a / 2)
    gives a < 2 c3^2; for case iii t > 2k gives t - k > sqrt(a / 6), so
    a < 4 c3^2 / (1/sqrt 2 + 1/sqrt 6)^2 < 3.2154 c3^2.
    """
    if case == "ii":
        return 2 * c3_max * c3_max
    return (32154 * c3_max * c3_max) // 10000 + 1


def admissible(a: int, spf: list[int] | None = None) -> bool:
    """Could a be both t^2 + 2k^2 and -(X^2 - 2Yh^2)?  Odd primes not 1 mod 8
    must then occur to an even power."""
    n = a
    while n % 2 == 0:
        n //= 2
    if spf is None:
        from .arith import factorize

        return all(p % 8 == 1 or e % 2 == 0 for p, e in factorize(n).factors)
    while n > 1:
        p, e = spf[n], 0
        while n % p == 0:
            n //= p
            e += 1
        if p % 8 != 1 and e % 2:
            return False
    return True


def _spf(limit: int) -> list[int]:
    spf = list(range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            for mult in range(p * p, limit + 1, p):
                if spf[mult] == mult:
                    spf[mult] = p
    return spf


def iter_admissible(a_max: int, a_min: int = 2) -> Iterator[int]:
    spf = _spf(a_max)
    for a in range(a_min, a_max + 1):
        if admissible(a, spf):
            yield a


def case_ii_solutions(c3_max: int) -> list[CaseIISolution]:
    return case_solutions(c3_max, ("ii",))["ii"]


def case_iii_solutions(c3_max: int) -> list[CaseIISolution]:
    return case_solutions(c3_max, ("iii",))["iii"]


def case_solutions(c3_max: int, cases: tuple[str, ...] = ("ii", "iii")) -> dict[str, list[CaseIISolution]]:
    """Case ii and iii solutions with c3 <= c3_max, scanning each a once."""
    limits = {c: a_bound(c, c3_max) for c in cases}
    out: dict[str, list[CaseIISolution]] = {c: [] for c in cases}
    for a in iter_admissible(max(limits.values())):
        active = tuple(c for c in cases if a <= limits[c])
        for case, sols in _solve_cases(a, active).items():
            out[case].extend(s for s in sols if s.quintuple.c3 <= c3_max)
    return {c: sorted(v, key=lambda s: s.quintuple) for c, v in out.items()}


# conjecture checker ---------------------------------------------------------


@dataclass
class ConjectureRecord:
    """What happened at the first positive member of every family II."""

    a: int
    checked: int = 0
    x_lt_y: int = 0
    x_lt_t_minus_2k: int = 0
    counterexamples: list[tuple[int, int, int, int, int]] = field(default_factory=list)


def check_conjecture(a: int) -> ConjectureRecord:
    """Examine, for each (t, k) and each family II (all splittings of a), the
    first member with X > 0.  A counterexample is a final primitive case iii
    triple coming from that member."""
    rec = ConjectureRecord(a)
    t_reps = all_definite_reps(a)
    if not t_reps:
        return rec
    firsts = []
    for A in square_divisors(a):
        for fam in solve_pell_families(-(a // (A * A))):
            if fam.family_tag == "II":
                sol = family_iterate(fam, first_positive_index(fam))
                firsts.append((A * sol.X, A * sol.Y))
    for tr in t_reps:
        t, k = tr.u, tr.v
        for X, Yh in firsts:
            rec.checked += 1
            if 0 < X < Yh + k:
                rec.x_lt_y += 1
            if X < t - 2 * k:
                rec.x_lt_t_minus_2k += 1
            if _assemble("iii", a, X, Yh, t, k) is not None:
                rec.counterexamples.append((X, Yh, t, k, a))
    return rec


def conjecture_scan(a_max: int) -> dict:
    """Run :func:`check_conjecture` for every admissible a <= a_max."""
    per_a = []
    totals: Counter = Counter()
    for a in iter_admissible(a_max):
        rec = check_conjecture(a)
        if rec.checked == 0:
            continue
        per_a.append(
            {
                "a": a,
                "checked": rec.checked,
                "x_lt_y": rec.x_lt_y,
                "x_lt_t_minus_2k": rec.x_lt_t_minus_2k,
                "counterexamples": [list(c) for c in rec.counterexamples],
            }
        )
        totals["a_values"] += 1
        totals["checked"] += rec.checked
        totals["x_lt_y"] += rec.x_lt_y
        totals["x_lt_t_minus_2k"] += rec.x_lt_t_minus_2k
        totals["counterexamples"] += len(rec.counterexamples)
    return {"a_max": a_max, "totals": dict(totals), "per_a": per_a}


# classification and union ---------------------------------------------------


class Kind(enum.Enum):
    EQUAL_PAIR_I = "EqualPair-I"
    EQUAL_PAIR_II = "EqualPair-II"
    ZERO_C4 = "ZeroC4"
    CASE_I = "CaseI"
    CASE_II = "CaseII"
    CASE_III = "CaseIII"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    k: int | None = None
    case: Kind | None = None  # the q versus c3 case, kept when kind is ZeroC4


def classify(q5: DSQuintuple) -> Classification:
    """Single label: equal-pair shapes first, then c4- = 0, then q versus c3."""
    c1, c2, c3 = q5.triple.as_tuple()
    if c1 == c2 or c2 == c3:
        n_m = _equal_pair_origin(q5)
        return Classification(n_m)
    diff = q5.q - c3
    if diff == 0:
        case, k = Kind.CASE_I, None
    elif diff < 0:
        case, k = Kind.CASE_II, -diff
    else:
        case, k = Kind.CASE_III, diff
    if q5.c4_minus == 0:
        return Classification(Kind.ZERO_C4, k, case)
    return Classification(case, k, case)


def _equal_pair_origin(q5: DSQuintuple) -> Kind:
    """Type I has q = n^2 - m^2 with a square repeated entry (n - m)^2."""
    c1, c2, c3 = q5.triple.as_tuple()
    repeated = c1 if c1 == c2 else c2
    r = isqrt(repeated)
    return Kind.EQUAL_PAIR_I if r * r == repeated else Kind.EQUAL_PAIR_II


SOLVER_NAMES = ("equal_pair", "zero_c4", "case_i", "case_ii", "case_iii")


def solver_union(c3_max: int, disabled: Iterable[str] = ()) -> dict[str, list[DSQuintuple]]:
    """Outputs of every structured solver up to c3_max, keyed by solver."""
    disabled = set(disabled)
    unknown = disabled - set(SOLVER_NAMES)
    if unknown:
        raise ValueError(f"unknown solver names: {sorted(unknown)}")
    cases = tuple(c for c in ("ii", "iii") if "case_" + c not in disabled)
    by_case = case_solutions(c3_max, cases) if cases else {}
    runners = {
        "equal_pair": lambda: equal_pair_solutions(c3_max),
        "zero_c4": lambda: zero_c4_solutions(c3_max),
        "case_i": lambda: case_i_solutions(c3_max),
        "case_ii": lambda: [s.quintuple for s in by_case["ii"]],
        "case_iii": lambda: [s.quintuple for s in by_case["iii"]],
    }
    return {name: run() for name, run in runners.items() if name not in disabled}
