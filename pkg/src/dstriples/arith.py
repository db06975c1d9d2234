"""Exact integer number theory used throughout the package.

Everything here works on Python integers and :class:`fractions.Fraction`,
so no result depends on floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, prod

# Trial division is exact for any input, but it gets slow once the second
# largest prime factor passes ~10**7.  Inputs up to this ceiling factor in
# well under a second.
FACTOR_CEILING = 10**12

# Below this bound square roots modulo a prime are found by scanning.
_SCAN_PRIME_BOUND = 1000

Rational = Fraction


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if prod(p**e for p, e in self.factors) != self.value:
            raise ValueError(f"factors do not multiply to {self.value}")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)) or any(e < 1 for _, e in self.factors):
            raise ValueError("primes must be strictly increasing with exponents >= 1")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for prime, e in self.factors:
            if prime == p:
                return e
        return 0

    def count_mod8(self, residue: int) -> int:
        """Number of distinct odd primes congruent to ``residue`` mod 8."""
        return sum(1 for p, _ in self.factors if p % 2 and p % 8 == residue)

    @property
    def p1(self) -> int:
        return self.count_mod8(1)

    @property
    def p3(self) -> int:
        return self.count_mod8(3)

    @property
    def p7(self) -> int:
        return self.count_mod8(7)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> Factorization:
    """Prime factorization by trial division (see ``FACTOR_CEILING``)."""
    if n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n}")
    if n > FACTOR_CEILING:
        raise ValueError(f"{n} exceeds the trial-division ceiling {FACTOR_CEILING}")
    factors = []
    m = n
    for p in (2, 3):
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            factors.append((p, e))
    d = 5
    step = 2
    while d * d <= m:
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        if e:
            factors.append((d, e))
        d += step
        step = 6 - step
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi needs a positive integer, got {n}")
    result = n
    for p, _ in factorize(n).factors:
        result -= result // p
    return result


def legendre_2(p: int) -> int:
    """Legendre symbol (2/p) for an odd prime p."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return 1 if p % 8 in (1, 7) else -1


def _sqrt_mod_prime(a: int, p: int) -> list[int]:
    a %= p
    if p == 2 or a == 0:
        return [a]
    if p < _SCAN_PRIME_BOUND:
        return [j for j in range(p) if j * j % p == a]
    if pow(a, (p - 1) // 2, p) != 1:
        return []
    r = _tonelli_shanks(a, p)
    return sorted({r, p - r})


def _tonelli_shanks(a: int, p: int) -> int:
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    if s == 1:
        return pow(a, (p + 1) // 4, p)
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _sqrt_mod_prime_power(a: int, p: int, e: int) -> list[int]:
    roots = _sqrt_mod_prime(a, p)
    modulus = p
    for _ in range(1, e):
        nxt = modulus * p
        lifted: set[int] = set()
        for r in roots:
            derivative = 2 * r % p
            if derivative:
                # Hensel: the lift is unique when p does not divide 2r.
                f = (r * r - a) // modulus
                inv = pow(derivative, -1, p)
                lifted.add((r - f * inv * modulus) % nxt)
            else:
                lifted.update(
                    c for c in range(r, nxt, modulus) if (c * c - a) % nxt == 0
                )
        roots = sorted(lifted)
        modulus = nxt
    return roots


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """The residue mod m1*m2 congruent to r1 (mod m1) and r2 (mod m2)."""
    if gcd(m1, m2) != 1:
        raise ValueError("moduli must be coprime")
    return (r1 + m1 * ((r2 - r1) * pow(m1, -1, m2) % m2)) % (m1 * m2)


def sqrt_mod(a: int, m: int) -> list[int]:
    """All j in [0, m) with j*j = a (mod m), sorted."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if m == 1:
        return [0]
    roots, modulus = [0], 1
    for p, e in factorize(m).factors:
        local = _sqrt_mod_prime_power(a, p, e)
        if not local:
            return []
        pe = p**e
        roots = [crt_pair(r, modulus, s, pe) for r in roots for s in local]
        modulus *= pe
    return sorted(roots)


def square_part(n: int) -> int:
    """Largest A with A*A dividing n."""
    return prod(p ** (e // 2) for p, e in factorize(n).factors)


def square_divisors(n: int) -> list[int]:
    """All A >= 1 with A*A dividing n, ascending."""
    out = [1]
    for p, e in factorize(n).factors:
        out = [d * p**k for d in out for k in range(e // 2 + 1)]
    return sorted(out)


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n >= 1 as r*r*d with d squarefree; returns (r, d)."""
    r = square_part(n)
    return r, n // (r * r)
