"""Exact arithmetic in the pure cubic field Q(w), w^3 = m.

Elements are stored on the basis (1, w, w^2) with rational coordinates.
Besides ring arithmetic, norm and trace, this module provides a verified
general square root: candidate roots are produced numerically from the
three embeddings of the field and reconstructed coordinate-wise as
rationals, then every candidate is confirmed by exact squaring before it
is returned. A wrong numeric guess can therefore only cause a miss,
never a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .arith import (
    DEFAULT_EFFORT,
    IntPoly,
    cubefree_and_noncube,
    perfect_square_root,
    rational_reconstruct,
)
from .errors import FieldMismatch, PrecisionExceeded

#: Default working precision (decimal digits) for embedding computations.
DEFAULT_DIGITS = 256


@dataclass(frozen=True)
class CubicField:
    """Q(cbrt(m)) for a cubefree non-cube integer m."""

    m: int

    def __post_init__(self):
        m = int(self.m)
        object.__setattr__(self, "m", m)
        cubefree, cube = cubefree_and_noncube(m, DEFAULT_EFFORT)
        if cube:
            raise ValueError(f"m = {m} is a perfect cube; the field degenerates")
        if not cubefree:
            raise ValueError(f"m = {m} is not cubefree")

    def element(self, r, s=0, t=0) -> "CubicElement":
        return CubicElement(self, Fraction(r), Fraction(s), Fraction(t))

    @property
    def one(self) -> "CubicElement":
        return self.element(1)

    @property
    def omega(self) -> "CubicElement":
        return self.element(0, 1)

    def real_root(self) -> mp.mpf:
        """The real embedding of w at the current mpmath precision."""
        if self.m >= 0:
            return mp.cbrt(mp.mpf(self.m))
        return -mp.cbrt(mp.mpf(-self.m))

    def __str__(self):
        return f"Q(cbrt({self.m}))"


@dataclass(frozen=True)
class CubicElement:
    """r + s*w + t*w^2 in a fixed CubicField."""

    field: CubicField
    r: Fraction
    s: Fraction
    t: Fraction

    def components(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.r, self.s, self.t)

    def is_rational(self) -> bool:
        return self.s == 0 and self.t == 0

    def is_zero(self) -> bool:
        return self.r == 0 and self.s == 0 and self.t == 0

    def _coerce(self, other) -> "CubicElement":
        if isinstance(other, CubicElement):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field} != {self.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CubicElement(self.field, self.r + o.r, self.s + o.s, self.t + o.t)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CubicElement(self.field, self.r - o.r, self.s - o.s, self.t - o.t)

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        return CubicElement(self.field, -self.r, -self.s, -self.t)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        m = self.field.m
        r1, s1, t1 = self.components()
        r2, s2, t2 = o.components()
        return CubicElement(
            self.field,
            r1 * r2 + m * (s1 * t2 + t1 * s2),
            r1 * s2 + s1 * r2 + m * t1 * t2,
            r1 * t2 + s1 * s2 + t1 * r2,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers not supported")
        acc = self.field.one
        base = self
        while n:
            if n & 1:
                acc = acc * base
            n >>= 1
            if n:
                base = base * base
        return acc

    def norm(self) -> Fraction:
        """N(r + s*w + t*w^2) = r^3 + m s^3 + m^2 t^3 - 3m r s t."""
        m = self.field.m
        r, s, t = self.components()
        return r**3 + m * s**3 + m * m * t**3 - 3 * m * r * s * t

    def trace(self) -> Fraction:
        return 3 * self.r

    def flip(self) -> "CubicElement":
        """The sign flip s -> -s; preserves having a binomial square."""
        return CubicElement(self.field, self.r, -self.s, self.t)

    def embed(self) -> mp.mpf:
        """Real embedding at the current mpmath precision."""
        w = self.field.real_root()
        return (
            mp.mpf(self.r.numerator) / self.r.denominator
            + mp.mpf(self.s.numerator) / self.s.denominator * w
            + mp.mpf(self.t.numerator) / self.t.denominator * w * w
        )

    def sign_of_embedding(self) -> int:
        """Sign of the real embedding of a nonzero element."""
        if self.is_zero():
            raise ValueError("zero element has no sign")
        if self.is_rational():
            return 1 if self.r > 0 else -1
        # 1, w, w^2 are independent over Q, so the embedding is never 0;
        # raise precision until the numeric value clears its error bound.
        scale = max(abs(c.numerator) + c.denominator for c in self.components())
        for dps in (60, 240, 960, 3840):
            with mp.workdps(dps):
                w = self.field.real_root()
                err = mp.mpf(scale) * (1 + abs(w)) ** 2 * mp.mpf(2) ** (16 - mp.mp.prec)
                v = self.embed()
                if abs(v) > err:
                    return 1 if v > 0 else -1
        raise PrecisionExceeded(f"could not determine sign of {self}")

    def positive_embedding(self) -> "CubicElement":
        """Whichever of self, -self has positive real embedding."""
        return self if self.sign_of_embedding() > 0 else -self

    def __str__(self):
        terms = []
        for coeff, power in ((self.r, ""), (self.s, "*w"), (self.t, "*w^2")):
            if coeff == 0:
                continue
            terms.append(f"{coeff}{power}" if not terms else (f"+ {coeff}{power}" if coeff > 0 else f"- {-coeff}{power}"))
        body = " ".join(terms) if terms else "0"
        return f"{body} (w = cbrt({self.field.m}))"


def sqrt_in_field(
    beta: CubicElement,
    digits: int = DEFAULT_DIGITS,
    height_bound: int | None = None,
) -> CubicElement | None:
    """An exact square root of beta in its field, or None.

    The root is found by taking square roots of the three embeddings of
    beta (two essentially different sign choices), solving the linear
    system back to (r, s, t) coordinates, reconstructing each coordinate
    as a bounded-height rational, and verifying gamma^2 = beta exactly.
    Returns the root with positive real embedding. On reconstruction
    failure the computation is retried once at four times the precision;
    if the precision is still too small for the height bound,
    PrecisionExceeded is raised instead of answering "not a square".
    """
    if beta.is_zero():
        return beta
    if beta.is_rational():
        root = perfect_square_root(beta.r)
        return beta.field.element(root) if root is not None else None
    if height_bound is None:
        h = max(max(abs(c.numerator), c.denominator) for c in beta.components())
        height_bound = h * h * (1 << 24)
    # digits of precision needed for convergent uniqueness at this height
    needed = 2 * len(str(height_bound)) + 24

    for dps in (digits, 4 * digits):
        gamma = _sqrt_attempt(beta, dps, height_bound)
        if gamma is not None:
            return gamma
    if 4 * digits < needed:
        raise PrecisionExceeded(
            f"height bound {height_bound} needs about {needed} digits, have {4 * digits}"
        )
    return None


def _sqrt_attempt(beta: CubicElement, dps: int, height_bound: int) -> CubicElement | None:
    with mp.workdps(dps):
        w = beta.field.real_root()
        zeta = mp.expjpi(mp.mpf(2) / 3)  # primitive cube root of unity
        r, s, t = (mp.mpf(c.numerator) / c.denominator for c in beta.components())
        e_real = r + s * w + t * w * w
        e_cplx = r + s * w * zeta + t * w * w * zeta**2
        if e_real < 0:
            return None  # the field is real, so beta < 0 has no square root
        g_real = mp.sqrt(e_real)
        for sign in (1, -1):
            g_cplx = sign * mp.sqrt(e_cplx)
            # invert the embedding matrix: conjugate coordinates come in
            # a real + complex-pair pattern
            rr = (g_real + 2 * mp.re(g_cplx)) / 3
            ss = (g_real + 2 * mp.re(zeta**2 * g_cplx)) / (3 * w)
            tt = (g_real + 2 * mp.re(zeta * g_cplx)) / (3 * w * w)
            comps = []
            for v in (rr, ss, tt):
                c = rational_reconstruct(v, height_bound)
                if c is None:
                    break
                comps.append(c)
            else:
                gamma = CubicElement(beta.field, *comps)
                if gamma * gamma == beta:
                    return gamma.positive_embedding()
    return None


def binomial_minpoly(a, b, field: CubicField) -> IntPoly:
    """Integer minimal cubic of a - b*w: y^3 - 3a y^2 + 3a^2 y - (a^3 - m b^3)."""
    a, b = Fraction(a), Fraction(b)
    if b == 0:
        raise ValueError("b = 0 gives a rational, not a cubic generator")
    m = field.m
    return IntPoly.from_rationals([-(a**3 - m * b**3), 3 * a * a, -3 * a, 1])
