"""``ds`` command line.

Exit status is 0 on success, 1 when a comparison finds a mismatch (or a
requested file is missing), 2 on bad usage.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import click
from mpmath import nstr

from . import geometry, sequences, solvers, tables
from .descartes import CurvatureTriple, enumerate_primitive_ds


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Exact tools for primitive integer curvature triples of touching circles."""


@main.command("table")
@click.option("--id", "table_id", type=click.IntRange(1, 6), required=True, help="Table number 1-6.")
@click.option("--bound", type=click.IntRange(min=1), default=None,
              help="n_max (tables 1, 6), c3_max (2, 4, 5) or s_max (3).")
@click.option("--format", "fmt", type=click.Choice(["csv", "md", "json"]), default="csv", show_default=True)
@click.option("--check", is_flag=True, help="Compare with the bundled golden table instead of printing it.")
def table_cmd(table_id: int, bound: int | None, fmt: str, check: bool) -> None:
    """Regenerate one of the six tables."""
    table = tables.build(table_id, bound)
    if not check:
        click.echo(tables.render(table, fmt), nl=False)
        return
    if bound is not None and bound != tables.DEFAULT_BOUNDS[table_id]:
        raise click.UsageError(f"--check needs the golden bound {tables.DEFAULT_BOUNDS[table_id]}")
    mismatches = tables.compare(table, tables.load_golden(table_id))
    for m in mismatches:
        click.echo(f"row {m.row} {m.field}: emitted {m.emitted!r}, golden {m.golden!r}")
    click.echo(f"table {table_id}: {len(table.rows)} rows, {len(mismatches)} mismatches")
    sys.exit(1 if mismatches else 0)


@main.command("crosscheck")
@click.option("--c3-max", type=click.IntRange(min=4), required=True)
@click.option("--disable", multiple=True, type=click.Choice(solvers.SOLVER_NAMES),
              help="Leave a solver out (test mode); may be repeated.")
def crosscheck_cmd(c3_max: int, disable: tuple[str, ...]) -> None:
    """Compare brute-force enumeration with the union of structured solvers."""
    oracle = {q5.triple for q5 in enumerate_primitive_ds(c3_max)}
    union = solvers.solver_union(c3_max, disable)
    produced = {q5.triple for out in union.values() for q5 in out}
    for name, out in union.items():
        click.echo(f"{name}: {len(out)}")
    only_oracle = sorted(oracle - produced)
    only_solvers = sorted(produced - oracle)
    click.echo(f"oracle: {len(oracle)}, solvers: {len(produced)}")
    click.echo("missing from solvers: " + (" ".join(map(str, only_oracle)) or "none"))
    click.echo("not found by oracle: " + (" ".join(map(str, only_solvers)) or "none"))
    sys.exit(1 if only_oracle or only_solvers else 0)


def _parse_triple(_ctx, _param, value: str) -> CurvatureTriple:
    try:
        parts = [int(p) for p in value.split(",")]
        if len(parts) != 3:
            raise ValueError
        return CurvatureTriple.of(*parts)
    except ValueError:
        raise click.BadParameter("expected three positive integers like 8,9,17") from None


@main.command("figure")
@click.option("--triple", callback=_parse_triple, required=True, help="c1,c2,c3")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), required=True)
@click.option("--size", type=click.IntRange(min=50), default=600, show_default=True)
def figure_cmd(triple: CurvatureTriple, out: str, size: int) -> None:
    """Draw the touching circles (and tangent line) as SVG."""
    try:
        scene = geometry.full_scene(triple)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--triple") from None
    Path(out).write_text(geometry.render_svg(scene, size=size), encoding="utf-8")
    for line in geometry.scene_summary(scene):
        click.echo(line)
    click.echo(f"wrote {out}")


def _parse_fraction(_ctx, _param, value: str) -> Fraction:
    try:
        a = Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"{value!r} is not a rational number") from None
    if a <= 0:
        raise click.BadParameter("a must be positive")
    return a


@main.command("areas")
@click.option("--a", "a", callback=_parse_fraction, default="5/2", show_default=True, help="Rational a > 0.")
@click.option("--dps", type=click.IntRange(min=5), default=20, show_default=True)
@click.option("--target", type=click.IntRange(min=1), default=120, show_default=True,
              help="Area used for the scale factor lambda.")
def areas_cmd(a: Fraction, dps: int, target: int) -> None:
    """Leftover areas for the configuration with parameter a."""
    res = geometry.classical_area(a)
    dec = res.decimals(dps)
    click.echo(f"a = {a}")
    click.echo(f"F_hat/pi   = {res.f_hat_over_pi}")
    click.echo(f"F_hat      = {nstr(dec['f_hat'], dps)}")
    click.echo(f"F_hat'/pi  = {res.f_hat_prime_over_pi}")
    click.echo(f"F_hat'     = {nstr(dec['f_hat_prime'], dps)}")
    click.echo(f"lambda     = {nstr(geometry.area_scale(a, target, dps), dps)}")


@main.group("seq")
def seq_group() -> None:
    """OEIS sequences used to index the triples."""


@seq_group.command("verify")
@click.option("--id", "seq_id", type=click.Choice(sequences.SUPPORTED), required=True)
@click.option("--snapshot", type=click.Path(dir_okay=False), default=None, help="Use this b-file instead.")
def seq_verify_cmd(seq_id: str, snapshot: str | None) -> None:
    """Compare the generator with the bundled b-file."""
    try:
        report = sequences.verify(seq_id, snapshot)
    except FileNotFoundError as exc:
        click.echo(str(exc), err=True)
        sys.exit(1)
    click.echo(str(report))
    sys.exit(0 if report.ok else 1)


@seq_group.command("generate")
@click.option("--id", "seq_id", type=click.Choice(sequences.SUPPORTED), required=True)
@click.option("--count", type=click.IntRange(min=1), default=20, show_default=True)
def seq_generate_cmd(seq_id: str, count: int) -> None:
    """Print the first terms, one "index value" pair per line."""
    off = sequences.offset(seq_id)
    for i, v in enumerate(sequences.generate(seq_id, count)):
        click.echo(f"{off + i} {v}")


@main.command("conjecture")
@click.option("--a-max", type=click.IntRange(min=1), default=50000, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Write the JSON report here.")
def conjecture_cmd(a_max: int, out: str | None) -> None:
    """Check that no first positive family II member yields a q = c3 + k triple."""
    report = solvers.conjecture_scan(a_max)
    totals = report["totals"]
    text = json.dumps(report, indent=1) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
        click.echo(f"wrote {out}")
    click.echo(
        f"a <= {a_max}: {totals.get('a_values', 0)} values of a, {totals.get('checked', 0)} members checked, "
        f"{totals.get('counterexamples', 0)} counterexamples"
    )
    sys.exit(1 if totals.get("counterexamples") else 0)


if __name__ == "__main__":
    main()
