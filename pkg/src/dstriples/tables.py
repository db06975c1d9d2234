"""Tables of primitive DS triples, their text renderings, and comparison with
the bundled golden transcriptions.

Cells are strings in one fixed style: lists as "[a,b,c]" without spaces,
factorizations as "146=2·73", runs of three or more equal entries in a
t-tuple as "2_5".
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass
from importlib import resources
from itertools import groupby
from pathlib import Path

from .arith import factorize
from .descartes import DSQuintuple, enumerate_primitive_ds
from .solvers import (
    case_solutions,
    equal_pair_triples,
    m_pairs,
    solve_case_i,
    zero_c4_triples,
)

DEFAULT_BOUNDS = {1: 17, 2: 38, 3: 313, 4: 37, 5: 35, 6: 24}

HEADERS = {
    1: ["shape", "n_m", "triple", "q", "c4"],
    2: ["c3", "triple", "q", "c4"],
    3: ["s", "xy", "XY", "q", "t_tuples"],
    4: ["c3", "X_Yhat", "c1_c2", "q", "k", "t", "a", "c4"],
    5: ["c3", "X_Yhat", "c1_c2", "q", "k", "t", "a", "c4"],
    6: ["n", "triple", "q", "c4"],
}

TITLES = {
    1: "Primitive triples [c,c,d] and [c,d,d], n <= {bound}",
    2: "Distinct primitive triples, c3 <= {bound}",
    3: "q = c3: [x,y], [X,Y] and t-tuples of both families, s <= {bound}",
    4: "q = c3 - k, c3 <= {bound}",
    5: "q = c3 + k, c3 <= {bound}",
    6: "Primitive triples with c4- = 0 and c3 = n^2, n <= {bound}",
}

EMPTY = "∅"


@dataclass(frozen=True)
class Table:
    table_id: int
    bound: int
    header: list[str]
    rows: list[list[str]]

    @property
    def title(self) -> str:
        return TITLES[self.table_id].format(bound=self.bound)


def _br(*values: int) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def _c4(q5: DSQuintuple) -> str:
    return _br(q5.c4_minus, q5.c4_plus)


def factor_cell(a: int) -> str:
    """"89" for a prime, otherwise "153=3^2·17"."""
    f = factorize(a)
    if len(f.factors) == 1 and f.factors[0][1] == 1:
        return str(a)
    parts = [str(p) if e == 1 else f"{p}^{e}" for p, e in f.factors]
    return f"{a}=" + "·".join(parts)


def compress_tuple(ts: tuple[int, ...]) -> str:
    parts = []
    for value, run in groupby(ts):
        n = len(list(run))
        parts += [f"{value}_{n}"] if n >= 3 else [str(value)] * n
    return "(" + ",".join(parts) + ")"


def expand_tuple(text: str) -> tuple[int, ...]:
    """Inverse of :func:`compress_tuple`; raises ValueError on malformed text."""
    m = re.fullmatch(r"\(([-\d_,]+)\)", text)
    if not m:
        raise ValueError(f"not a t-tuple: {text!r}")
    out: list[int] = []
    for part in m.group(1).split(","):
        value, _, rep = part.partition("_")
        out += [int(value)] * (int(rep) if rep else 1)
    return tuple(out)


def split_t_tuples(cell: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Parse "(I tuple),[(II tuple)]"."""
    m = re.fullmatch(r"(\([^()\[\]]*\)),\[(\([^()\[\]]*\))\]", cell)
    if not m:
        raise ValueError(f"not a pair of t-tuples: {cell!r}")
    return expand_tuple(m.group(1)), expand_tuple(m.group(2))


# builders -------------------------------------------------------------------


def table1(n_max: int) -> Table:
    ccd, cdd = [], []
    for p in m_pairs(n_max):
        for e in equal_pair_triples(p):
            row = [e.shape, _br(p.n, p.m), str(e.quintuple.triple), str(e.quintuple.q), _c4(e.quintuple)]
            (ccd if e.shape == "ccd" else cdd).append(row)
    return Table(1, n_max, HEADERS[1], ccd + cdd)


def table2(c3_max: int) -> Table:
    distinct = [
        q5 for q5 in enumerate_primitive_ds(c3_max) if len(set(q5.triple.as_tuple())) == 3
    ]
    by_c3: dict[int, list[DSQuintuple]] = {}
    for q5 in distinct:
        by_c3.setdefault(q5.c3, []).append(q5)
    rows = []
    if by_c3:
        for c3 in range(min(by_c3), c3_max + 1):
            group = by_c3.get(c3)
            if not group:
                rows.append([str(c3), EMPTY, EMPTY, EMPTY])
            for q5 in group or ():
                rows.append([str(c3), str(q5.triple), str(q5.q), _c4(q5)])
    return Table(2, c3_max, HEADERS[2], rows)


def table3(s_max: int) -> Table:
    rows = []
    for r in solve_case_i(s_max):
        tt = f"{compress_tuple(r.family.t_tuple)},[{compress_tuple(r.conjugate.t_tuple)}]"
        rows.append([str(r.s), _br(r.x, r.y), _br(r.X, r.Y), str(r.q), tt])
    return Table(3, s_max, HEADERS[3], rows)


def _table_45(table_id: int, c3_max: int) -> Table:
    case = "ii" if table_id == 4 else "iii"
    sols = case_solutions(c3_max, (case,))[case]
    rows = []
    for s in sorted(sols, key=lambda s: (s.quintuple.c3, s.quintuple.c1, s.quintuple.c2)):
        q5 = s.quintuple
        rows.append(
            [
                str(q5.c3),
                _br(s.X, s.Yhat),
                _br(q5.c1, q5.c2),
                str(q5.q),
                str(s.k),
                str(s.t),
                factor_cell(s.a),
                _c4(q5),
            ]
        )
    return Table(table_id, c3_max, HEADERS[table_id], rows)


def table4(c3_max: int) -> Table:
    return _table_45(4, c3_max)


def table5(c3_max: int) -> Table:
    return _table_45(5, c3_max)


def table6(n_max: int) -> Table:
    rows = []
    for n in range(2, n_max + 1):
        for q5 in sorted(zero_c4_triples(n), key=lambda q5: -q5.c1):
            rows.append([str(n), str(q5.triple), str(q5.q), _c4(q5)])
    return Table(6, n_max, HEADERS[6], rows)


BUILDERS = {1: table1, 2: table2, 3: table3, 4: table4, 5: table5, 6: table6}


def build(table_id: int, bound: int | None = None) -> Table:
    if table_id not in BUILDERS:
        raise ValueError(f"no table {table_id}; choose 1-6")
    bound = DEFAULT_BOUNDS[table_id] if bound is None else bound
    if bound < 1:
        raise ValueError("bound must be positive")
    return BUILDERS[table_id](bound)


# rendering ------------------------------------------------------------------


def render(table: Table, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(table.header)
        w.writerows(table.rows)
        return buf.getvalue()
    if fmt == "md":
        lines = [
            f"**Table {table.table_id}.** {table.title}",
            "",
            "| " + " | ".join(table.header) + " |",
            "|" + "---|" * len(table.header),
        ]
        lines += ["| " + " | ".join(r) + " |" for r in table.rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        objs = [dict(zip(table.header, r)) for r in table.rows]
        return json.dumps(objs, ensure_ascii=False, indent=1) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


# golden files ---------------------------------------------------------------


@dataclass(frozen=True)
class Erratum:
    table: int
    row: int  # 1-based data row in the golden CSV
    field: str
    printed: str
    corrected: str
    reason: str


def _data_dir() -> Path:
    return Path(str(resources.files("dstriples") / "data" / "golden"))


def load_golden_raw(table_id: int, directory: Path | None = None) -> list[list[str]]:
    path = (directory or _data_dir()) / f"table{table_id}.csv"
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if rows[0] != HEADERS[table_id]:
        raise ValueError(f"{path}: unexpected header {rows[0]}")
    return rows[1:]


def load_errata(directory: Path | None = None) -> list[Erratum]:
    path = (directory or _data_dir()) / "errata.csv"
    with open(path, newline="", encoding="utf-8") as fh:
        return [
            Erratum(int(r["table"]), int(r["row"]), r["field"], r["printed"], r["corrected"], r["reason"])
            for r in csv.DictReader(fh)
        ]


MISSING_ROW = "row"


def load_golden(table_id: int, directory: Path | None = None) -> list[list[str]]:
    """Golden rows with the errata applied.

    A cell erratum names a printed row (1-based) and must still match the
    printed cell, so a stale ledger is caught instead of silently ignored.
    An erratum with field "row" inserts a row the table left out, before the
    printed row it names; its corrected value holds the cells joined by "|".
    """
    rows = [list(r) for r in load_golden_raw(table_id, directory)]
    header = HEADERS[table_id]
    inserts = []
    for e in load_errata(directory):
        if e.table != table_id:
            continue
        if e.field == MISSING_ROW:
            cells = e.corrected.split("|")
            if e.printed or len(cells) != len(header):
                raise ValueError(f"malformed missing-row erratum for table {table_id} row {e.row}")
            inserts.append((e.row, cells))
            continue
        col = header.index(e.field)
        cell = rows[e.row - 1][col]
        if cell != e.printed:
            raise ValueError(
                f"erratum for table {table_id} row {e.row} {e.field}: expected {e.printed!r}, found {cell!r}"
            )
        rows[e.row - 1][col] = e.corrected
    for before, cells in sorted(inserts, reverse=True):
        rows.insert(before - 1, cells)
    return rows


def canonical_cell(table_id: int, field: str, cell: str) -> object:
    """Value used for comparison; t-tuples compare by their expanded entries."""
    if table_id == 3 and field == "t_tuples":
        try:
            return split_t_tuples(cell)
        except ValueError:
            return cell
    return cell


@dataclass(frozen=True)
class Mismatch:
    row: int  # 1-based
    field: str
    emitted: str | None
    golden: str | None


def compare(table: Table, golden: list[list[str]]) -> list[Mismatch]:
    out = []
    header = table.header
    for i in range(max(len(table.rows), len(golden))):
        got = table.rows[i] if i < len(table.rows) else None
        want = golden[i] if i < len(golden) else None
        if got is None or want is None:
            out.append(Mismatch(i + 1, "*", ",".join(got) if got else None, ",".join(want) if want else None))
            continue
        for f, g, w in zip(header, got, want):
            if canonical_cell(table.table_id, f, g) != canonical_cell(table.table_id, f, w):
                out.append(Mismatch(i + 1, f, g, w))
    return out


def check_against_golden(table_id: int, directory: Path | None = None) -> list[Mismatch]:
    return compare(build(table_id), load_golden(table_id, directory))
