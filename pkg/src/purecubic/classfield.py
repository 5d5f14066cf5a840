"""Quadratic extensions of pure cubic fields from Mordell-curve points.

A rational point P = (a/e^2, y) on y^2 = x^3 - m*b^3 with gcd(a, e) = 1
yields the element alpha = a - b*e^2*w of Q(w), w^3 = m, whose norm
a^3 - m*b^3*e^6 = (y*e^3)^2 is always a perfect square. When alpha is
not itself a square, K(sqrt(alpha)) is a quadratic extension of the
field, generated over Q by a root of

    x^6 - 3a x^4 + 3a^2 x^2 - N(alpha).

Sufficient conditions for that extension to be unramified everywhere
are tracked as flags: m not congruent to 0 or +-1 mod 9, gcd(a, b) = 1,
e even, and a positive with a = 1 mod 4. The flags are reported, never
enforced, so failing examples stay explorable.

table1_verify() checks the bundled reference dataset of such rows
(data/table1.json) end to end.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from importlib import resources
from math import gcd

from .arith import DEFAULT_EFFORT, IntPoly, perfect_cube_root, perfect_square_root
from .errors import AlphaIsSquare, EffortExceeded, FieldMismatch, InvalidPoint
from .field import CubicElement, CubicField
from .mordell import CurvePoint, MordellCurve, x_as_a_over_e2


@dataclass(frozen=True)
class KappaReport:
    """The element a - b*e^2*w attached to a curve point, with all checks."""

    m: int
    b: int
    point: CurvePoint
    a: int
    e: int
    alpha: CubicElement
    norm: Fraction
    norm_sqrt: Fraction | None
    eligible_mod9: bool
    gcd_ab_ok: bool
    two_divides_e: bool
    a_pos_1mod4: bool
    sextic: IntPoly
    already_square: bool | None  # None: halving exceeded the effort budget
    claims_unramified: bool | None = None


def kappa_element(
    m: int, b: int, P: CurvePoint, effort_bound: int = DEFAULT_EFFORT
) -> KappaReport:
    """Build the report for a point on y^2 = x^3 - m*b^3.

    The norm is asserted to be the square of y*e^3; eligibility flags
    are computed but never enforced.
    """
    if b == 0:
        raise ValueError("twist scale b must be nonzero")
    field = CubicField(m)  # validates cubefree and non-cube
    curve = MordellCurve.twist(m, b)
    if P.is_infinity:
        raise InvalidPoint("need an affine point")
    if not curve.contains(P):
        raise InvalidPoint(f"{P} is not on {curve}")
    a, e = x_as_a_over_e2(P.x)
    alpha = field.element(a, -b * e * e, 0)
    norm = Fraction(a**3 - m * b**3 * e**6)
    assert norm == (P.y * e**3) ** 2, "norm must equal (y*e^3)^2 for on-curve points"
    norm_sqrt = perfect_square_root(norm)
    try:
        already_square = bool(curve.halve(P, effort_bound))
    except EffortExceeded:
        already_square = None
    sextic = IntPoly((-int(norm), 0, 3 * a * a, 0, -3 * a, 0, 1))
    return KappaReport(
        m=m,
        b=b,
        point=P,
        a=a,
        e=e,
        alpha=alpha,
        norm=norm,
        norm_sqrt=norm_sqrt,
        eligible_mod9=m % 9 not in (0, 1, 8),
        gcd_ab_ok=gcd(a, b) == 1,
        two_divides_e=e % 2 == 0,
        a_pos_1mod4=a > 0 and a % 4 == 1,
        sextic=sextic,
        already_square=already_square,
    )


def unramified_conditions(report: KappaReport) -> KappaReport:
    """Fill the combined claims_unramified flag from the individual ones."""
    claims = (
        report.eligible_mod9
        and report.gcd_ab_ok
        and report.two_divides_e
        and report.a_pos_1mod4
    )
    return replace(report, claims_unramified=claims)


def sqrt_ext_minpoly(report: KappaReport) -> IntPoly:
    """Defining sextic of sqrt(alpha) over Q.

    Refuses (AlphaIsSquare) when the point is divisible by 2, since
    alpha is then a square and generates nothing. If halving exceeded
    its effort budget the check is skipped and the sextic returned
    anyway; callers can see this on report.already_square being None.
    """
    if report.already_square:
        raise AlphaIsSquare(f"{report.alpha} is a square: {report.point} is divisible by 2")
    return report.sextic


def kappa_pairwise_distinct(reports: list[KappaReport]) -> bool:
    """Necessary condition for the extensions to be pairwise distinct.

    True when every underlying point has an empty halving preimage.
    Reports must all live over the same field.
    """
    if not reports:
        return True
    if len({r.m for r in reports}) != 1:
        raise FieldMismatch("reports span different fields")
    for r in reports:
        if r.already_square is None:
            raise EffortExceeded(f"halving unresolved for {r.point}")
    return all(r.already_square is False for r in reports)


# -- Table 1 verification ----------------------------------------------------


@dataclass(frozen=True)
class Table1Row:
    m: int
    field_m: int
    k: int
    x: Fraction
    b: int
    report: KappaReport | None  # None when the point is not even on the curve
    on_curve: bool
    alpha_match: bool
    printed_alpha_match: bool
    norm_square: bool
    flags_match: bool
    sextic_match: bool | None  # None when the row carries no expected sextic
    note: str | None

    @property
    def passed(self) -> bool:
        checks = [self.on_curve, self.alpha_match, self.norm_square, self.flags_match]
        if self.sextic_match is not None:
            checks.append(self.sextic_match)
        return all(checks)


@dataclass(frozen=True)
class Table1Result:
    rows: tuple[Table1Row, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.rows)


def load_table1(path: str | None = None) -> dict:
    """Load the bundled dataset, or one from an explicit path."""
    if path is not None:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    ref = resources.files("purecubic").joinpath("data/table1.json")
    return json.loads(ref.read_text(encoding="utf-8"))


def table1_verify(path: str | None = None, effort_bound: int = DEFAULT_EFFORT) -> Table1Result:
    """Recompute every dataset row and compare against its recorded values.

    Per row: the point lies on the stated curve, the recomputed element
    matches the recorded one, the norm is a perfect square, the
    condition flags agree, and any recorded sextic matches coefficient
    for coefficient. Failures become report entries, not exceptions.
    """
    data = load_table1(path)
    rows: list[Table1Row] = []
    for raw in data["rows"]:
        field_m = int(raw["field_m"])
        k = int(raw["k"])
        x = Fraction(int(raw["x_num"]), int(raw["x_den"]))
        cube = perfect_cube_root(-k // field_m) if k % field_m == 0 else None
        if cube is None:
            raise ValueError(f"row m={raw['m']}: k = {k} is not -field_m * b^3")
        b = cube
        y2 = x**3 + k
        y = perfect_square_root(y2)
        on_curve = y is not None
        if not on_curve:
            # cannot even build the point; record the failure and move on
            rows.append(
                Table1Row(
                    m=int(raw["m"]), field_m=field_m, k=k, x=x, b=b,
                    report=None, on_curve=False, alpha_match=False,
                    printed_alpha_match=False, norm_square=False,
                    flags_match=False, sextic_match=None, note=raw.get("note"),
                )
            )
            continue
        P = CurvePoint(x, y)
        report = unramified_conditions(kappa_element(field_m, b, P, effort_bound))
        want_a = int(raw["alpha_a"])
        want_coeff = int(raw["alpha_b_coeff"])
        got_coeff = -report.b * report.e**2
        alpha_match = report.a == want_a and got_coeff == want_coeff
        printed = raw.get("alpha_b_coeff_printed")
        printed_alpha_match = printed is None or int(printed) == got_coeff
        flags = {
            "eligible_mod9": report.eligible_mod9,
            "gcd_ab_ok": report.gcd_ab_ok,
            "two_divides_e": report.two_divides_e,
            "a_pos_1mod4": report.a_pos_1mod4,
            "claims_unramified": report.claims_unramified,
        }
        flags_match = flags == raw["expected_flags"]
        sextic_match = None
        if raw.get("expected_sextics"):
            wanted = [IntPoly(tuple(int(c) for c in cs)) for cs in raw["expected_sextics"]]
            sextic_match = report.sextic in wanted
        rows.append(
            Table1Row(
                m=int(raw["m"]),
                field_m=field_m,
                k=k,
                x=x,
                b=b,
                report=report,
                on_curve=True,
                alpha_match=alpha_match,
                printed_alpha_match=printed_alpha_match,
                norm_square=report.norm_sqrt is not None,
                flags_match=flags_match,
                sextic_match=sextic_match,
                note=raw.get("note"),
            )
        )
    return Table1Result(tuple(rows))
