"""Exact positions of tangent circles, the straight-line case, a classical
area formula, and SVG output.

Placement: circle 1 sits at the origin and circle 2 on the positive x-axis,
circle 3 above the x-axis.  Radii are 1/c, signed, so an enclosing circle
with negative curvature has negative radius and every tangency reads
|M_i - M_j|^2 = (r_i + r_j)^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import Sequence

from mpmath import mp, mpf, pi as mp_pi, sqrt as mp_sqrt

from .descartes import CurvatureTriple, DSQuintuple, NotDS, quintuple
from .surd import Number, QuadSurd, sign_of


@dataclass(frozen=True)
class ExactPoint:
    x: Number
    y: Number

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class Circle:
    label: str
    curvature: int
    center: ExactPoint

    @property
    def radius(self) -> Fraction:
        """Signed radius 1/c."""
        return Fraction(1, self.curvature)


@dataclass(frozen=True)
class TangentLine:
    """The line y = slope * x + intercept touching circles 1, 2 and 3.

    C is the Thales construction point; P, Q and R are the touch points on
    circles 1, 2 and 3.
    """

    slope: Fraction
    intercept: Fraction
    C: ExactPoint
    P: ExactPoint
    Q: ExactPoint
    R: ExactPoint


@dataclass(frozen=True)
class CircleScene:
    triple: CurvatureTriple
    q: Number
    circles: tuple[Circle, ...]
    line: TangentLine | None = None

    def circle(self, label: str) -> Circle:
        for c in self.circles:
            if c.label == label:
                return c
        raise KeyError(label)

    def has(self, label: str) -> bool:
        return any(c.label == label for c in self.circles)


def _q_value(q5: DSQuintuple | NotDS) -> Number:
    if isinstance(q5, DSQuintuple):
        return q5.q
    return QuadSurd.sqrt(q5.q_squared)


def _resolve(arg) -> DSQuintuple | NotDS:
    if isinstance(arg, (DSQuintuple, NotDS)):
        return arg
    return quintuple(arg)


def place_triple(arg) -> CircleScene:
    """Centres of the three mutually tangent circles.

    Accepts a DS quintuple, or any curvature triple; for a non-DS triple the
    y coordinate of the third centre is a quadratic surd.
    """
    q5 = _resolve(arg)
    t = q5.triple
    c1, c2, c3 = t.as_tuple()
    q = _q_value(q5)
    qq = c1 * c2 + c1 * c3 + c2 * c3
    x3 = Fraction(qq - c1 * c1, c1 * c3 * (c1 + c2))
    y3 = 2 * q / Fraction((c1 + c2) * c3)
    circles = (
        Circle("1", c1, ExactPoint(Fraction(0), Fraction(0))),
        Circle("2", c2, ExactPoint(Fraction(1, c1) + Fraction(1, c2), Fraction(0))),
        Circle("3", c3, ExactPoint(x3, y3)),
    )
    return CircleScene(t, q, circles)


def centers_c4(scene: CircleScene, q5: DSQuintuple) -> tuple[ExactPoint, ExactPoint | None]:
    """Centres (M4p, M4m) of the two Apollonius circles; M4m is None when c4- = 0."""
    c1, c2, c3 = scene.triple.as_tuple()
    m3 = scene.circle("3").center
    q = q5.q

    def centre(c4: int, sign: int) -> ExactPoint:
        x = (Fraction(c1 + c2, c1) + c3 * m3.x + sign * Fraction(2 * q, c1)) / c4
        y = (c3 * m3.y + 2 * sign) / c4
        return ExactPoint(x, y)

    m4p = centre(q5.c4_plus, 1)
    m4m = None if q5.c4_minus == 0 else centre(q5.c4_minus, -1)
    return m4p, m4m


def tangent_line(arg) -> TangentLine:
    """Common tangent of the three circles when c4- = 0."""
    q5 = _resolve(arg)
    if not isinstance(q5, DSQuintuple) or q5.c4_minus != 0:
        raise ValueError(f"{q5.triple} is not degenerate (c4- != 0)")
    c1, c2, c3 = q5.triple.as_tuple()
    h = isqrt(c1 * c2)
    if h * h != c1 * c2:
        raise ValueError(f"c1*c2 = {c1 * c2} is not a square; the line is irrational")
    s = c1 + c2
    slope = Fraction(-(c2 - c1), 2 * h)
    intercept = Fraction(s, 2 * h * c1)
    C = ExactPoint(Fraction((c1 - c2) ** 2, c1 * c2 * s), Fraction(2 * (c2 - c1), h * s))
    P = ExactPoint(Fraction(c2 - c1, c1 * s), Fraction(2 * c2, h * s))
    Q = ExactPoint(Fraction(c2 + 3 * c1, c1 * s), Fraction(2 * c1, h * s))
    xr_curv = Fraction(1, c1) + Fraction(2 * (c2 - c1), s * c3)
    r1, r2, r3 = Fraction(1, c1), Fraction(1, c2), Fraction(1, c3)
    xr_radii = r1 + 2 * r3 * (r1 - r2) / (r1 + r2)
    if xr_curv != xr_radii:
        raise AssertionError("touch point abscissa forms disagree")
    R = ExactPoint(xr_curv, Fraction(2 * (q5.q + h), c3 * s))
    return TangentLine(slope, intercept, C, P, Q, R)


def full_scene(arg) -> CircleScene:
    """All circles of a DS quintuple, with the tangent line in the degenerate case."""
    q5 = _resolve(arg)
    if not isinstance(q5, DSQuintuple):
        raise ValueError(
            f"{q5.triple} is not a DS triple: q = sqrt({q5.q_squared}) is irrational"
        )
    base = place_triple(q5)
    m4p, m4m = centers_c4(base, q5)
    circles = list(base.circles) + [Circle("4+", q5.c4_plus, m4p)]
    line = None
    if m4m is not None:
        circles.append(Circle("4-", q5.c4_minus, m4m))
    else:
        line = tangent_line(q5)
    return CircleScene(base.triple, q5.q, tuple(circles), line)


def squared_distance(a: ExactPoint, b: ExactPoint) -> Number:
    dx, dy = a.x - b.x, a.y - b.y
    return dx * dx + dy * dy


def tangency_defect(a: Circle, b: Circle) -> Number:
    """|M_a - M_b|^2 - (r_a + r_b)^2; zero for touching circles."""
    return squared_distance(a.center, b.center) - (a.radius + b.radius) ** 2


def tangent_pairs(scene: CircleScene) -> list[tuple[Circle, Circle]]:
    """Every pair of circles in the scene that should touch.

    The two Apollonius circles lie on opposite sides of the triple and are
    not tangent to each other, so that pair is left out.
    """
    return [
        (a, b)
        for a, b in combinations(scene.circles, 2)
        if {a.label, b.label} != {"4+", "4-"}
    ]


def complex_descartes_defect(scene: CircleScene, c4_label: str) -> tuple[Number, Number]:
    """(sum c z)^2 - 2 sum (c z)^2 as (real, imaginary) for circles 1, 2, 3, c4."""
    chosen = [scene.circle(lab) for lab in ("1", "2", "3", c4_label)]
    sx: Number = 0
    sy: Number = 0
    qx: Number = 0
    qy: Number = 0
    for c in chosen:
        wx, wy = c.curvature * c.center.x, c.curvature * c.center.y
        sx, sy = sx + wx, sy + wy
        qx, qy = qx + (wx * wx - wy * wy), qy + 2 * wx * wy
    return (sx * sx - sy * sy - 2 * qx, 2 * sx * sy - 2 * qy)


def line_distance_defect(line: TangentLine, circle: Circle) -> Fraction:
    """(m x0 - y0 + b)^2 - r^2 (1 + m^2): zero when the line touches the circle."""
    m, b = line.slope, line.intercept
    x0, y0 = circle.center.x, circle.center.y
    return (m * x0 - y0 + b) ** 2 - circle.radius**2 * (1 + m * m)


def on_line(line: TangentLine, p: ExactPoint) -> bool:
    return p.y == line.slope * p.x + line.intercept


def y3_exceeds_r3(scene: CircleScene) -> bool:
    c3 = scene.circle("3")
    return sign_of(c3.center.y - c3.radius) > 0


# classical area -----------------------------------------------------------


@dataclass(frozen=True)
class AreaResult:
    a: Fraction
    f_hat_over_pi: Number
    f_hat_prime_over_pi: Number

    def decimals(self, dps: int = 30) -> dict[str, mpf]:
        with mp.workdps(dps):
            out = {}
            for name, val in (
                ("f_hat_over_pi", self.f_hat_over_pi),
                ("f_hat_prime_over_pi", self.f_hat_prime_over_pi),
            ):
                over_pi = val.to_mpf(dps) if isinstance(val, QuadSurd) else mpf(
                    val.numerator
                ) / val.denominator
                out[name] = +over_pi
                out[name.replace("_over_pi", "")] = over_pi * mp_pi
            return out


def classical_area(a: Fraction | int | str) -> AreaResult:
    """Leftover areas (divided by pi) for the rational parameter a > 0."""
    a = Fraction(a)
    if a <= 0:
        raise ValueError("a must be positive")
    root = QuadSurd.sqrt((a + 3) / (a + 1))
    den = (3 + 4 * a) ** 2
    f_hat = (
        4 * (1 + a) ** 2 * (3 + 5 * a + 2 * a * a) * root
        - 2 * (1 + 2 * a) * (3 + 4 * a + 2 * a * a + 2 * a**3)
    ) / den
    f_hat_prime = 8 * (1 + a) ** 3 * (3 + 2 * a) * root / den - (2 + (1 + a) ** 2)
    return AreaResult(a, f_hat, f_hat_prime)


def area_scale(a: Fraction | int | str = Fraction(5, 2), target_area: int = 120,
               dps: int = 30) -> mpf:
    """Length factor lambda with lambda^2 * F_hat(a) = target_area."""
    with mp.workdps(dps):
        f_hat = classical_area(a).decimals(dps)["f_hat"]
        return mp_sqrt(mpf(target_area) / f_hat)


# SVG ---------------------------------------------------------------------


def _f(x: Number) -> float:
    return float(x)


def _bbox(scene: CircleScene) -> tuple[float, float, float, float]:
    enclosing = [c for c in scene.circles if c.curvature < 0]
    pool = enclosing or list(scene.circles)
    xs0, ys0, xs1, ys1 = [], [], [], []
    for c in pool:
        r = abs(float(c.radius))
        x, y = _f(c.center.x), -_f(c.center.y)
        xs0.append(x - r)
        xs1.append(x + r)
        ys0.append(y - r)
        ys1.append(y + r)
    x0, y0, x1, y1 = min(xs0), min(ys0), max(xs1), max(ys1)
    pad = 0.05 * max(x1 - x0, y1 - y0)
    return x0 - pad, y0 - pad, x1 + pad, y1 + pad


def _num(v: float) -> str:
    text = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def render_svg(scene: CircleScene, size: int = 600, labels: bool = True) -> str:
    """Deterministic SVG 1.1 drawing; the y axis is flipped only here."""
    x0, y0, x1, y1 = _bbox(scene)
    w, h = x1 - x0, y1 - y0
    stroke = _num(max(w, h) / 400)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" '
        f'height="{_num(size * h / w)}" viewBox="{_num(x0)} {_num(y0)} {_num(w)} {_num(h)}">',
        f"<title>circles {scene.triple}</title>",
        f'<g fill="none" stroke="black" stroke-width="{stroke}">',
    ]
    for c in scene.circles:
        lines.append(
            f'<circle id="c{c.label}" cx="{_num(_f(c.center.x))}" '
            f'cy="{_num(-_f(c.center.y))}" r="{_num(abs(float(c.radius)))}"/>'
        )
    if scene.line is not None:
        m, b = float(scene.line.slope), float(scene.line.intercept)
        lines.append(
            f'<line id="tangent" x1="{_num(x0)}" y1="{_num(-(m * x0 + b))}" '
            f'x2="{_num(x1)}" y2="{_num(-(m * x1 + b))}"/>'
        )
    lines.append("</g>")
    if labels:
        font = _num(max(w, h) / 40)
        lines.append(f'<g font-family="sans-serif" font-size="{font}" text-anchor="middle">')
        for c in scene.circles:
            lines.append(
                f'<text x="{_num(_f(c.center.x))}" y="{_num(-_f(c.center.y))}">'
                f"{c.curvature}</text>"
            )
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def scene_summary(scene: CircleScene) -> list[str]:
    out = [f"{c.label}: c={c.curvature} centre={c.center}" for c in scene.circles]
    if scene.line is not None:
        out.append(f"line: y = {scene.line.slope} x + {scene.line.intercept}")
    return out


def all_tangencies_hold(scene: CircleScene) -> bool:
    return all(sign_of(tangency_defect(a, b)) == 0 for a, b in tangent_pairs(scene))


def points_exact(points: Sequence[ExactPoint]) -> bool:
    return all(isinstance(p.x, (int, Fraction)) and isinstance(p.y, (int, Fraction))
               for p in points)
