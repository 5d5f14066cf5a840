from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from purecubic.errors import FieldMismatch, PrecisionExceeded
from purecubic.field import CubicField, binomial_minpoly, sqrt_in_field

from helpers import naive_elem_square

F2 = CubicField(2)
F26 = CubicField(26)

rats = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 30))
elems2 = st.tuples(rats, rats, rats).map(lambda c: F2.element(*c))


class TestFieldConstruction:
    def test_cube_rejected(self):
        with pytest.raises(ValueError):
            CubicField(8)
        with pytest.raises(ValueError):
            CubicField(1)

    def test_non_cubefree_rejected(self):
        with pytest.raises(ValueError):
            CubicField(16)

    def test_negative_allowed(self):
        assert CubicField(-4).m == -4


class TestMul:
    def test_one_is_identity(self):
        a = F2.element(Fraction(3, 7), 2, Fraction(-1, 5))
        assert a * F2.one == a

    def test_intro_identity_small(self):
        a = F2.element(1, -1, -1)
        assert (a * a).components() == (5, 0, -1)

    def test_intro_identity_larger(self):
        a = F2.element(9, -6, -2)
        assert (a * a).components() == (129, -100, 0)

    def test_matches_schoolbook_expansion(self):
        comps = (Fraction(3, 5), Fraction(-7, 2), Fraction(11, 4))
        a = F26.element(*comps)
        assert (a * a).components() == naive_elem_square(26, comps)

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatch):
            F2.one * F26.one

    def test_int_coercion(self):
        a = F2.element(1, 2, 3)
        assert 2 * a == F2.element(2, 4, 6)
        assert a + 1 == F2.element(2, 2, 3)

    @given(elems2, elems2, elems2)
    @settings(max_examples=100, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestNormTrace:
    def test_five_minus_w_squared(self):
        assert F2.element(5, 0, -1).norm() == 121

    def test_one(self):
        assert F2.one.norm() == 1
        assert F2.one.trace() == 3

    def test_unit_in_q_cbrt_26(self):
        assert F26.element(3, -1, 0).norm() == 1

    def test_binomial_norm_formula(self):
        # N(a - b*w) = a^3 - m*b^3
        a, b = Fraction(35), Fraction(1)
        assert F26.element(a, -b, 0).norm() == a**3 - 26 * b**3

    @given(elems2, elems2)
    @settings(max_examples=100, deadline=None)
    def test_norm_multiplicative(self, a, b):
        assert (a * b).norm() == a.norm() * b.norm()

    @given(elems2, elems2)
    @settings(max_examples=50, deadline=None)
    def test_trace_additive(self, a, b):
        assert (a + b).trace() == a.trace() + b.trace()


class TestFlip:
    def test_involution(self):
        a = F2.element(Fraction(1, 3), -2, 5)
        assert a.flip().flip() == a

    def test_fixed_on_rationals(self):
        assert F2.one.flip() == F2.one

    def test_preserves_binomial_square_pattern(self):
        # the pattern 2rt + s^2 = 0 is invariant under s -> -s, so if
        # alpha^2 = a - b*w then flip(alpha)^2 is binomial as well
        a = F2.element(Fraction(-9, 10), Fraction(3, 5), Fraction(1, 5))
        assert (a * a).components() == (Fraction(129, 100), -1, 0)
        flipped = a.flip()
        sq = flipped * flipped
        assert sq.t == 0
        assert sq.components() == (Fraction(33, 100), Fraction(29, 25), 0)

    def test_no_claim_without_the_invariant(self):
        # (1 - w - w^2)^2 = 5 - w^2 is binomial in w^2, not w; flipping s
        # does not preserve that pattern (checked by direct expansion)
        a = F2.element(1, -1, -1)
        assert (a * a).components() == (5, 0, -1)
        flipped = a.flip()
        assert flipped == F2.element(1, 1, -1)
        assert (flipped * flipped).components() == (-3, 4, -1)


class TestSqrtInField:
    def test_five_minus_w2_in_q_cbrt2(self):
        got = sqrt_in_field(F2.element(5, 0, -1))
        assert got == F2.element(-1, 1, 1)
        assert got.sign_of_embedding() > 0

    def test_rational_square(self):
        assert sqrt_in_field(F2.element(4)) == F2.element(2)
        assert sqrt_in_field(F2.element(2)) is None

    def test_fundamental_unit_not_square(self):
        # norm is 1, but 3 - w is not a square in Q(cbrt(26))
        beta = F26.element(3, -1, 0)
        assert beta.norm() == 1
        assert sqrt_in_field(beta) is None

    def test_negative_real_embedding(self):
        assert sqrt_in_field(F2.element(-5, 0, 1) * F2.element(-5, 0, 1) * F2.element(-1)) is None

    def test_always_verified(self):
        beta = F2.element(Fraction(2340922881, 58675600), -1, 0)
        got = sqrt_in_field(beta)
        assert got is not None and got * got == beta

    def test_precision_exceeded(self):
        big = 10**60 + 3
        gamma = F2.element(big, big + 1, Fraction(1, big))
        with pytest.raises(PrecisionExceeded):
            sqrt_in_field(gamma * gamma, digits=20)

    def test_roundtrip_random(self):
        import random

        rng = random.Random(11)
        for _ in range(10):
            gamma = F2.element(
                Fraction(rng.randint(-30, 30), rng.randint(1, 9)),
                Fraction(rng.randint(-30, 30), rng.randint(1, 9)),
                Fraction(rng.randint(-30, 30), rng.randint(1, 9)),
            )
            if gamma.is_zero():
                continue
            beta = gamma * gamma
            got = sqrt_in_field(beta)
            assert got is not None
            assert got in (gamma, -gamma)
            assert got * got == beta


class TestBinomialMinpoly:
    def test_129_minus_100w(self):
        p = binomial_minpoly(129, 100, F2)
        assert p.coeffs == (-(129**3 - 2 * 100**3), 3 * 129**2, -3 * 129, 1)
        assert p.coeffs == (-146689, 49923, -387, 1)

    def test_nagell_unit(self):
        p = binomial_minpoly(-19, -7, CubicField(20))
        assert p.coeffs == (-1, 1083, 57, 1)

    def test_vanishes_at_element_exactly(self):
        for (a, b, field) in [(129, 100, F2), (Fraction(129, 100), 1, F2), (-19, -7, CubicField(20))]:
            p = binomial_minpoly(a, b, field)
            alpha = field.element(Fraction(a), -Fraction(b), 0)
            value = p(alpha)
            assert value == field.element(0)

    def test_b_zero_rejected(self):
        with pytest.raises(ValueError):
            binomial_minpoly(5, 0, F2)

    def test_clears_denominators(self):
        p = binomial_minpoly(Fraction(129, 100), 1, F2)
        assert all(isinstance(c, int) for c in p.coeffs)
        alpha = F2.element(Fraction(129, 100), -1, 0)
        assert p(alpha) == F2.element(0)
