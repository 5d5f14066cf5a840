"""Exact group law on Mordell curves y^2 = x^3 + k over the rationals.

The chord-tangent law is implemented in the standard orientation: the
sum of two points is the reflection of the third collinear point, so
for P = (x, y) with y != 0

    2P = ( (x^4 - 8kx) / (4y^2),  (x^6 + 20kx^3 - 8k^2) / (8y^3) ).

Point halving inverts duplication: Q solves 2Q = P exactly when x(Q)
is a rational root of the quartic

    x^4 - 4X x^3 - 8k x - 4kX        (X = x(P))

and x(Q)^3 + k is a rational square; candidates are confirmed by an
exact doubling check, never by sign conventions.

k is normally an integer but may be any nonzero rational, which is
what quadratic twists with fractional scale produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .arith import DEFAULT_EFFORT, IntPoly, perfect_square_root, rational_roots
from .errors import InvalidPoint


@dataclass(frozen=True)
class CurvePoint:
    """A rational point: affine (x, y), or the point at infinity (None, None)."""

    x: Fraction | None
    y: Fraction | None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self) -> "CurvePoint":
        if self.is_infinity:
            return self
        return CurvePoint(self.x, -self.y)

    def __str__(self):
        if self.is_infinity:
            return "inf"
        return f"({self.x}, {self.y})"


INFINITY = CurvePoint(None, None)


def affine(x, y) -> CurvePoint:
    """Unvalidated affine point (use MordellCurve.point for the checked form)."""
    return CurvePoint(Fraction(x), Fraction(y))


@dataclass(frozen=True)
class MordellCurve:
    """The curve y^2 = x^3 + k, k != 0."""

    k: Fraction

    def __post_init__(self):
        k = Fraction(self.k)
        if k == 0:
            raise ValueError("k = 0 is singular")
        object.__setattr__(self, "k", k)

    @classmethod
    def from_m(cls, m: int) -> "MordellCurve":
        """The curve y^2 = x^3 - m attached to the field of cbrt(m)."""
        return cls(Fraction(-m))

    @classmethod
    def twist(cls, m: int, b) -> "MordellCurve":
        """The twist y^2 = x^3 - m*b^3 carrying squares of the form a - b*w."""
        b = Fraction(b)
        if b == 0:
            raise ValueError("twist scale b must be nonzero")
        return cls(-m * b**3)

    def __str__(self):
        k = self.k
        return f"y^2 = x^3 + {k}" if k > 0 else f"y^2 = x^3 - {-k}"

    # -- membership ---------------------------------------------------------

    def contains(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        return P.y * P.y == P.x**3 + self.k

    def point(self, x, y) -> CurvePoint:
        """Validated affine point; raises InvalidPoint off the curve."""
        P = affine(x, y)
        if not self.contains(P):
            raise InvalidPoint(f"({x}, {y}) is not on {self}")
        return P

    def _require(self, *points: CurvePoint):
        for P in points:
            if not self.contains(P):
                raise InvalidPoint(f"{P} is not on {self}")

    # -- group law ----------------------------------------------------------

    def add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        self._require(P, Q)
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
        if x1 == x2:
            if y1 == -y2:
                return INFINITY
            lam = 3 * x1 * x1 / (2 * y1)
        else:
            lam = (y2 - y1) / (x2 - x1)
        x3 = lam * lam - x1 - x2
        y3 = lam * (x1 - x3) - y1
        return CurvePoint(x3, y3)

    def double(self, P: CurvePoint) -> CurvePoint:
        """2P by the closed duplication formula (identical to add(P, P))."""
        self._require(P)
        if P.is_infinity or P.y == 0:
            return INFINITY
        x, y, k = P.x, P.y, self.k
        x2 = (x**4 - 8 * k * x) / (4 * y * y)
        y2 = (x**6 + 20 * k * x**3 - 8 * k * k) / (8 * y**3)
        return CurvePoint(x2, y2)

    def scalar_mul(self, n: int, P: CurvePoint) -> CurvePoint:
        self._require(P)
        if n < 0:
            n, P = -n, -P
        R = INFINITY
        Q = P
        while n:
            if n & 1:
                R = self.add(R, Q)
            n >>= 1
            if n:
                Q = self.double(Q)
        return R

    # -- halving -------------------------------------------------------------

    def two_torsion(self, effort_bound: int = DEFAULT_EFFORT) -> set[CurvePoint]:
        """Rational points of order 2 (y = 0); at most one on a Mordell curve."""
        cubic = IntPoly.from_rationals([self.k, 0, 0, 1])
        return {CurvePoint(r, Fraction(0)) for r in rational_roots(cubic, effort_bound)}

    def halving_quartic(self, X) -> IntPoly:
        """Integer form of the preimage quartic for x(2Q) = X."""
        X = Fraction(X)
        k = self.k
        return IntPoly.from_rationals([-4 * k * X, -8 * k, 0, -4 * X, 1])

    def halve(self, P: CurvePoint, effort_bound: int = DEFAULT_EFFORT) -> set[CurvePoint]:
        """All rational Q with 2Q = P (possibly empty; at most two).

        For the point at infinity this is the rational 2-torsion plus
        infinity itself.
        """
        self._require(P)
        if P.is_infinity:
            return {INFINITY} | self.two_torsion(effort_bound)
        found: set[CurvePoint] = set()
        for x0 in rational_roots(self.halving_quartic(P.x), effort_bound):
            y0 = perfect_square_root(x0**3 + self.k)
            if y0 is None:
                continue
            for Q in (CurvePoint(x0, y0), CurvePoint(x0, -y0)):
                if self.double(Q) == P:
                    found.add(Q)
        return found

    # -- search --------------------------------------------------------------

    def search(self, e_bound: int, a_bound: int) -> list[CurvePoint]:
        """All affine points with x = a/e^2, gcd(a, e) = 1, within the bounds.

        Both y signs are returned; the list is ordered by (e, a, y).
        """
        if e_bound < 1 or a_bound < 1:
            raise ValueError("bounds must be >= 1")
        out: list[CurvePoint] = []
        for e in range(1, e_bound + 1):
            e2 = e * e
            for a in range(-a_bound, a_bound + 1):
                if gcd(a, e) != 1:
                    continue
                c = Fraction(a, e2) ** 3 + self.k
                if c < 0:
                    continue
                y = perfect_square_root(c)
                if y is None:
                    continue
                x = Fraction(a, e2)
                if y == 0:
                    out.append(CurvePoint(x, y))
                else:
                    out.append(CurvePoint(x, -y))
                    out.append(CurvePoint(x, y))
        return out


def x_as_a_over_e2(x: Fraction) -> tuple[int, int]:
    """Write x = a/e^2 with gcd(a, e) = 1; raises InvalidPoint otherwise."""
    e = isqrt(x.denominator)
    if e * e != x.denominator:
        raise InvalidPoint(f"denominator of {x} is not a perfect square")
    return x.numerator, e
