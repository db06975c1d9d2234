"""Acceptance criteria 1-9.

Each test prints one PASS/FAIL line.  Run with ``pytest tests/test_acceptance.py``
or directly with ``python tests/test_acceptance.py``.
"""

import json
import sys
import time
from fractions import Fraction

import mpmath
import pytest

from dstriples.arith import factorize
from dstriples.descartes import descartes_residual, enumerate_primitive_ds
from dstriples.forms import brute_force_pell, members_in_box, solve_pell_families, unique_xy_solution
from dstriples.geometry import (
    area_scale,
    classical_area,
    complex_descartes_defect,
    full_scene,
    line_distance_defect,
    squared_distance,
    tangent_pairs,
)
from dstriples.sequences import SUPPORTED, generate, verify
from dstriples.solvers import admissible, conjecture_scan, solver_union, zero_c4_triples
from dstriples.tables import check_against_golden


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return emit


def test_criterion_1_descartes_identity(report):
    start = time.perf_counter()
    produced = list(enumerate_primitive_ds(500))
    for out in solver_union(500).values():
        produced.extend(out)
    bad = [
        q5
        for q5 in produced
        for c4 in (q5.c4_minus, q5.c4_plus)
        if descartes_residual((q5.c1, q5.c2, q5.c3, c4)) != 0
    ]
    elapsed = time.perf_counter() - start
    report(1, not bad and elapsed < 60, f"{len(produced)} quintuples, {len(bad)} failures, {elapsed:.1f} s")


def test_criterion_2_golden_tables(report):
    counts = {tid: len(check_against_golden(tid)) for tid in range(1, 7)}
    report(2, not any(counts.values()), f"mismatches per table {counts}")


def test_criterion_3_oracle_equivalence(report):
    start = time.perf_counter()
    oracle = {q5.triple for q5 in enumerate_primitive_ds(200)}
    produced = {q5.triple for out in solver_union(200).values() for q5 in out}
    elapsed = time.perf_counter() - start
    ok = oracle == produced and elapsed < 120
    report(
        3,
        ok,
        f"oracle {len(oracle)}, solvers {len(produced)}, missing {len(oracle - produced)},"
        f" extra {len(produced - oracle)}, {elapsed:.1f} s",
    )


def test_criterion_4_case_i_counts(report):
    solvable = [s for s in generate("A058529", 200) if 7 <= s <= 313]
    wrong = []
    for s in solvable:
        f = factorize(s)
        want = 2 ** (f.p1 + f.p7 - 1)
        if len(unique_xy_solution(s)) != want:
            wrong.append(s)
    controls = {s: len(unique_xy_solution(s)) for s in (3, 5, 9, 11, 13)}
    ok = not wrong and not any(controls.values())
    report(4, ok, f"{len(solvable)} solvable s, wrong counts {wrong}, controls {controls}")


def test_criterion_5_pell_oracle(report):
    start = time.perf_counter()
    ks = [-s * s for s in range(1, 61, 2)] + [-a for a in range(2, 2001) if admissible(a)]
    wrong = []
    for k in ks:
        found = sorted(
            sol.as_tuple() for fam in solve_pell_families(k) for sol in members_in_box(fam, 1500, 1500)
        )
        if found != brute_force_pell(k, 1500, 1500):
            wrong.append(k)
    elapsed = time.perf_counter() - start
    report(5, not wrong and elapsed < 60, f"{len(ks)} values of k, mismatches {wrong}, {elapsed:.1f} s")


def test_criterion_6_classical_areas(report):
    dec = classical_area(Fraction(5, 2)).decimals(30)
    lam = area_scale(Fraction(5, 2), 120, 30)
    with mpmath.workdps(30):
        surd = mpmath.pi * (196 * mpmath.sqrt(77) - 681) / 169
        checks = {
            "F_hat printed": abs(dec["f_hat"] / mpmath.mpf("19.312") - 1) < 5e-4,
            "F_hat' printed": abs(dec["f_hat_prime"] / mpmath.mpf("19.176") - 1) < 5e-4,
            "lambda printed": abs(lam / mpmath.mpf("2.493") - 1) < 5e-4,
            "F_hat surd": abs(dec["f_hat"] / surd - 1) < 1e-12,
        }
    failed = [name for name, ok in checks.items() if not ok]
    detail = f"F_hat {mpmath.nstr(dec['f_hat'], 15)}, F_hat' {mpmath.nstr(dec['f_hat_prime'], 15)}, lambda {mpmath.nstr(lam, 15)}"
    report(6, not failed, detail + (f", failed {failed}" if failed else ""))


def test_criterion_7_geometry(report):
    bad = []
    scenes = 0
    for q5 in enumerate_primitive_ds(60):
        scene = full_scene(q5)
        scenes += 1
        for a, b in tangent_pairs(scene):
            if a.curvature < 0 or b.curvature < 0:
                want = (abs(a.radius) - abs(b.radius)) ** 2
            else:
                want = (a.radius + b.radius) ** 2
            if squared_distance(a.center, b.center) != want:
                bad.append((str(q5.triple), a.label, b.label))
        labels = ["4+"] + (["4-"] if scene.has("4-") else [])
        for lab in labels:
            if complex_descartes_defect(scene, lab) != (0, 0):
                bad.append((str(q5.triple), "complex", lab))
    lines = 0
    for n in range(2, 25):
        for q5 in zero_c4_triples(n):
            scene = full_scene(q5)
            lines += 1
            for lab in ("1", "2", "3"):
                if line_distance_defect(scene.line, scene.circle(lab)) != 0:
                    bad.append((str(q5.triple), "line", lab))
    report(7, not bad, f"{scenes} scenes, {lines} tangent lines, failures {bad[:5]}")


def test_criterion_8_conjecture_scan(report, tmp_path):
    result = conjecture_scan(50000)
    path = tmp_path / "conjecture_report.json"
    path.write_text(json.dumps(result), encoding="utf-8")
    saved = json.loads(path.read_text(encoding="utf-8"))
    totals = saved["totals"]
    ok = totals["counterexamples"] == 0 and len(saved["per_a"]) == totals["a_values"] > 0
    report(
        8,
        ok,
        f"{totals['a_values']} values of a, {totals['checked']} members checked,"
        f" {totals['x_lt_y']} with X < Y, {totals['counterexamples']} counterexamples",
    )


def test_criterion_9_sequences(report):
    reports = [verify(seq_id) for seq_id in SUPPORTED]
    short = [r.id for r in reports if r.snapshot_length < 200]
    failed = [str(r) for r in reports if not r.ok]
    lengths = min(r.match_length for r in reports)
    report(9, len(reports) == 10 and not short and not failed, f"{len(reports)} sequences, shortest match {lengths} terms {failed}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
