"""Prefixes of the OEIS sequences that index the triples, computed from their
definitions and compared with bundled b-files.

Refreshing a snapshot is a manual step (:func:`fetch_bfile`); tests and
``ds seq verify`` only read the bundled files.
"""

from __future__ import annotations

import re
import urllib.request
from dataclasses import dataclass
from importlib import resources
from itertools import count as _naturals
from pathlib import Path
from typing import Callable, Iterator

from .arith import euler_phi, factorize

_ID = re.compile(r"^A\d{6}$")


@dataclass(frozen=True)
class SequenceSnapshot:
    id: str
    terms: tuple[int, ...]
    source: str = "bundled"  # or "fetched"
    offset: int = 0

    def __post_init__(self) -> None:
        if not _ID.match(self.id):
            raise ValueError(f"bad OEIS id {self.id!r}")
        if not self.terms:
            raise ValueError(f"snapshot {self.id} is empty")
        if self.source not in ("bundled", "fetched"):
            raise ValueError(f"unknown source {self.source!r}")


@dataclass(frozen=True)
class VerifyReport:
    id: str
    snapshot_length: int
    match_length: int
    divergence: tuple[int, int, int] | None  # (OEIS index, snapshot value, generated value)

    @property
    def ok(self) -> bool:
        return self.divergence is None

    def __str__(self) -> str:
        if self.ok:
            return f"{self.id}: {self.match_length} terms match"
        n, want, got = self.divergence
        return (
            f"{self.id}: diverges at index {n} after {self.match_length} matching terms:"
            f" snapshot {want}, generated {got}"
        )


# generators -----------------------------------------------------------------


def _filtered(pred: Callable[[int], bool], start: int = 1) -> Iterator[int]:
    return (n for n in _naturals(start) if pred(n))


def _odd_part_primes(n: int) -> tuple[int, list[int]]:
    f = factorize(n)
    return f.exponent(2), [p for p in f.primes if p != 2]


def _all_pm1_mod8(n: int) -> bool:
    return all(p % 8 in (1, 7) for p in factorize(n).primes)


def _two_is_square_mod(n: int) -> bool:
    e2, odd = _odd_part_primes(n)
    return e2 <= 1 and all(p % 8 in (1, 7) for p in odd)


def _pm2_are_squares_mod(n: int) -> bool:
    e2, odd = _odd_part_primes(n)
    return e2 <= 1 and all(p % 8 == 1 for p in odd)


def _odd_primes_1_or_3_mod8(n: int) -> bool:
    return n % 2 == 1 and all(p % 8 in (1, 3) for p in factorize(n).primes)


def _chebyshev_like(x0: int, x1: int) -> Iterator[int]:
    """x(n+1) = 6 x(n) - x(n-1)."""
    while True:
        yield x0
        x0, x1 = x1, 6 * x1 - x0


def _a023022() -> Iterator[int]:
    yield 1
    for n in _naturals(3):
        yield euler_phi(n) // 2


def _a055034() -> Iterator[int]:
    yield 1
    for n in _naturals(2):
        yield euler_phi(2 * n) // 2


def _a054521() -> Iterator[int]:
    from math import gcd

    for n in _naturals(1):
        for k in range(1, n + 1):
            yield 1 if gcd(n, k) == 1 else 0


@dataclass(frozen=True)
class _Entry:
    offset: int
    make: Callable[[], Iterator[int]]
    name: str


REGISTRY: dict[str, _Entry] = {
    "A058529": _Entry(1, lambda: _filtered(_all_pm1_mod8), "all prime factors are 1 or 7 mod 8"),
    "A057126": _Entry(1, lambda: _filtered(_two_is_square_mod), "2 is a square mod n"),
    "A192453": _Entry(1, lambda: _filtered(_pm2_are_squares_mod), "2 and -2 are squares mod n"),
    "A225771": _Entry(1, lambda: _filtered(_odd_primes_1_or_3_mod8), "odd, prime factors 1 or 3 mod 8"),
    "A023022": _Entry(2, _a023022, "number of partitions of n into two coprime parts"),
    "A055034": _Entry(1, _a055034, "phi(2n)/2, with a(1) = 1"),
    "A001109": _Entry(0, lambda: _chebyshev_like(0, 1), "x(n) = 6x(n-1) - x(n-2), from 0, 1"),
    "A001541": _Entry(0, lambda: _chebyshev_like(1, 3), "x(n) = 6x(n-1) - x(n-2), from 1, 3"),
    "A001653": _Entry(1, lambda: _chebyshev_like(1, 5), "x(n) = 6x(n-1) - x(n-2), from 1, 5"),
    "A054521": _Entry(1, _a054521, "triangle T(n,k) = [gcd(n,k) = 1]"),
}

SUPPORTED = tuple(REGISTRY)


def _entry(seq_id: str) -> _Entry:
    try:
        return REGISTRY[seq_id]
    except KeyError:
        raise ValueError(f"unsupported sequence {seq_id!r}; supported: {', '.join(SUPPORTED)}") from None


def offset(seq_id: str) -> int:
    return _entry(seq_id).offset


def generate(seq_id: str, count: int) -> list[int]:
    """First ``count`` terms from the definition."""
    if count < 1:
        raise ValueError("count must be at least 1")
    it = _entry(seq_id).make()
    return [next(it) for _ in range(count)]


# b-files --------------------------------------------------------------------


def parse_bfile(text: str, seq_id: str = "A000000", source: str = "bundled") -> SequenceSnapshot:
    """Read "index value" lines; blank lines and # comments are skipped.
    Indices must be consecutive."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'index value', got {line!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    if not pairs:
        raise ValueError(f"b-file for {seq_id} has no terms")
    first = pairs[0][0]
    for i, (n, _) in enumerate(pairs):
        if n != first + i:
            raise ValueError(f"b-file for {seq_id}: index {n} out of sequence")
    return SequenceSnapshot(seq_id, tuple(v for _, v in pairs), source, first)


def format_bfile(seq_id: str, terms: list[int], first_index: int) -> str:
    lines = [f"# {seq_id}"]
    lines += [f"{first_index + i} {v}" for i, v in enumerate(terms)]
    return "\n".join(lines) + "\n"


def snapshot_path(seq_id: str) -> Path:
    return Path(str(resources.files("dstriples") / "data" / "bfiles" / f"b{seq_id[1:]}.txt"))


def load_snapshot(seq_id: str, path: str | Path | None = None) -> SequenceSnapshot:
    _entry(seq_id)
    p = Path(path) if path is not None else snapshot_path(seq_id)
    if not p.is_file():
        raise FileNotFoundError(f"snapshot for {seq_id} not found; expected {p}")
    return parse_bfile(p.read_text(encoding="utf-8"), seq_id)


def verify(seq_id: str, path: str | Path | None = None) -> VerifyReport:
    snap = load_snapshot(seq_id, path)
    off = offset(seq_id)
    if snap.offset != off:
        raise ValueError(f"{seq_id}: snapshot starts at index {snap.offset}, expected {off}")
    generated = generate(seq_id, len(snap.terms))
    for i, (want, got) in enumerate(zip(snap.terms, generated)):
        if want != got:
            return VerifyReport(seq_id, len(snap.terms), i, (off + i, want, got))
    return VerifyReport(seq_id, len(snap.terms), len(snap.terms), None)


def fetch_bfile(seq_id: str, dest: str | Path | None = None, timeout: float = 30.0) -> SequenceSnapshot:
    """Download the OEIS b-file and store it (manual refresh only)."""
    _entry(seq_id)
    url = f"https://oeis.org/{seq_id}/b{seq_id[1:]}.txt"
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        text = resp.read().decode("utf-8")
    snap = parse_bfile(text, seq_id, source="fetched")
    target = Path(dest) if dest is not None else snapshot_path(seq_id)
    target.write_text(text, encoding="utf-8")
    return snap
