import random
from fractions import Fraction

import pytest

from linkinv import laurent
from linkinv.laurent import LaurentPoly, NondivisibleError


def lp(arity, terms):
    return LaurentPoly(arity, terms)


x = LaurentPoly.variable(1, 0)
one = LaurentPoly.one(1)


def random_poly(rng, arity, max_terms=4, span=2, coeff=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(-span, span) for _ in range(arity))
        c = rng.randint(-coeff, coeff)
        if c:
            terms[exps] = c
    return LaurentPoly(arity, terms)


class TestBasics:
    def test_add_cancellation(self):
        assert (x + one) + (-one) == x

    def test_add_identity(self):
        p = lp(1, {(2,): 3, (-1,): 1})
        assert p + LaurentPoly.zero(1) == p

    def test_add_doubling(self):
        p = lp(1, {(1,): 1, (-1,): 1})
        assert p + p == lp(1, {(1,): 2, (-1,): 2})

    def test_mul_unit_inverse(self):
        assert x * x.inverted() == one

    def test_mul_difference_of_squares(self):
        assert (x - 1) * (x + 1) == lp(1, {(2,): 1, (0,): -1})

    def test_mul_identity(self):
        d = laurent.mt_link_polynomial()
        assert d * LaurentPoly.one(4) == d

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            x + LaurentPoly.one(2)
        with pytest.raises(ValueError):
            x * LaurentPoly.one(2)

    def test_zero_coefficients_dropped(self):
        assert lp(1, {(3,): 0}).is_zero()


class TestSubstitutePowers:
    def test_square(self):
        assert laurent.substitute_powers(x + x.inverted(), 2) == lp(
            1, {(2,): 1, (-2,): 1}
        )

    def test_mt_coefficient(self):
        d = laurent.substitute_powers(laurent.mt_link_polynomial(), 2)
        assert d.coefficient((2, 2, 2, 0)) == 1

    def test_identity_power(self):
        p = lp(1, {(2,): 5, (0,): -1})
        assert laurent.substitute_powers(p, 1) == p

    def test_bad_power(self):
        with pytest.raises(ValueError):
            laurent.substitute_powers(x, 0)


class TestEvaluate:
    def test_mt_at_ones(self):
        assert laurent.evaluate(laurent.mt_link_polynomial(), (1, 1, 1, 1)) == 0

    def test_rational_point(self):
        assert laurent.evaluate(x + x.inverted(), (2,)) == Fraction(5, 2)

    def test_zero_poly(self):
        assert laurent.evaluate(LaurentPoly.zero(2), (3, -7)) == 0

    def test_zero_entry_rejected(self):
        with pytest.raises(ValueError):
            laurent.evaluate(x, (0,))


class TestSymmetry:
    def test_mt_symmetric(self):
        flag, sign, shift = laurent.is_symmetric(laurent.mt_link_polynomial())
        assert flag and sign == 1 and shift == (0, 0, 0, 0)

    def test_x_plus_one(self):
        flag, sign, shift = laurent.is_symmetric(x + 1)
        assert flag and sign == 1 and shift == (-1,)

    def test_x_plus_two(self):
        assert laurent.is_symmetric(x + 2)[0] is False


class TestNormalizeUnits:
    def test_mt_shift_restored(self):
        d = laurent.mt_link_polynomial()
        shifted = d.shifted((2, 0, 0, 0))
        assert laurent.normalize_units(shifted) == d

    def test_monomials_normalize_to_one(self):
        # a monomial is a unit: its class representative is the constant 1
        assert laurent.normalize_units(-x) == one

    def test_idempotent(self):
        p = lp(2, {(1, 0): 2, (0, 3): -5, (2, 1): 1})
        q = laurent.normalize_units(p)
        assert laurent.normalize_units(q) == q

    def test_sign_fix(self):
        p = lp(1, {(1,): -1, (0,): 1})
        q = laurent.normalize_units(p)
        assert q.coefficient(max(q.support())) > 0

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            laurent.normalize_units(LaurentPoly.zero(1))

    def test_unit_multiples_agree(self):
        rng = random.Random(5)
        for _ in range(60):
            p = random_poly(rng, 2)
            if p.is_zero():
                continue
            m = tuple(rng.randint(-2, 2) for _ in range(2))
            sign = rng.choice((1, -1))
            q = (sign * p).shifted(m)
            assert laurent.normalize_units(q) == laurent.normalize_units(p)


class TestDivide:
    def test_difference_of_squares(self):
        assert laurent.divide_exact(x * x - 1, x - 1) == x + 1

    def test_divide_by_one(self):
        p = lp(1, {(4,): 7, (-2,): -3})
        assert laurent.divide_exact(p, one) == p

    def test_monomial_factor(self):
        xx = LaurentPoly.variable(2, 0)
        yy = LaurentPoly.variable(2, 1)
        assert laurent.divide_exact(xx * yy - yy, xx - 1) == yy

    def test_nondivisible(self):
        with pytest.raises(NondivisibleError):
            laurent.divide_exact(x + 1, x - 1)

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            laurent.divide_exact(x, LaurentPoly.zero(1))

    def test_round_trip_small(self):
        rng = random.Random(11)
        for _ in range(100):
            p = random_poly(rng, 2)
            q = random_poly(rng, 2)
            if q.is_zero():
                continue
            assert laurent.divide_exact(p * q, q) == p


class TestGcd:
    def test_linear_factor(self):
        assert laurent.gcd(x * x - 1, x - 1) == laurent.normalize_units(x - 1)

    def test_gcd_self(self):
        p = lp(2, {(1, 1): 2, (0, 0): -2})
        assert laurent.gcd(p, p) == laurent.normalize_units(p)

    def test_gcd_with_unit(self):
        # y is a unit in the Laurent ring, so the gcd class is that of 1
        xx = LaurentPoly.variable(2, 0)
        yy = LaurentPoly.variable(2, 1)
        g = laurent.gcd(xx * yy - yy, yy)
        assert g == laurent.normalize_units(yy) == LaurentPoly.one(2)

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            laurent.gcd(LaurentPoly.zero(1), LaurentPoly.zero(1))

    def test_gcd_divides_both(self):
        rng = random.Random(23)
        checked = 0
        while checked < 40:
            p = random_poly(rng, 2, max_terms=3, span=1)
            q = random_poly(rng, 2, max_terms=3, span=1)
            if p.is_zero() or q.is_zero():
                continue
            g = laurent.gcd(p, q)
            laurent.divide_exact(p, g)
            laurent.divide_exact(q, g)
            checked += 1

    def test_integer_content_kept(self):
        p = lp(1, {(1,): 2, (0,): 2})
        q = lp(1, {(2,): 2, (0,): -2})
        g = laurent.gcd(p, q)
        assert g == laurent.normalize_units(2 * (x + 1))


class TestRingLaws:
    def test_laws_small(self):
        rng = random.Random(3)
        for _ in range(80):
            a = random_poly(rng, 2)
            b = random_poly(rng, 2)
            c = random_poly(rng, 2)
            assert a + b == b + a
            assert (a + b) + c == a + (b + c)
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_substitute_powers_is_ring_hom(self):
        rng = random.Random(4)
        for _ in range(60):
            a = random_poly(rng, 2)
            b = random_poly(rng, 2)
            k = rng.randint(1, 3)
            assert laurent.substitute_powers(a * b, k) == laurent.substitute_powers(
                a, k
            ) * laurent.substitute_powers(b, k)


class TestMtPolynomial:
    def test_constant_term(self):
        assert laurent.mt_link_polynomial().coefficient((0, 0, 0, 0)) == -4

    def test_xy_term(self):
        assert laurent.mt_link_polynomial().coefficient((1, 1, 0, 0)) == -1

    def test_term_count(self):
        assert laurent.mt_link_polynomial().num_terms() == 17


class TestSerialization:
    def test_round_trip_exact(self):
        d = laurent.mt_link_polynomial()
        text = laurent.to_text(d)
        assert laurent.to_text(laurent.from_text(text)) == text

    def test_round_trip_random(self):
        rng = random.Random(9)
        for _ in range(40):
            p = random_poly(rng, 3)
            assert laurent.from_text(laurent.to_text(p)) == p

    def test_sorted_lines(self):
        text = laurent.to_text(laurent.mt_link_polynomial())
        lines = text.strip().splitlines()[1:]
        keys = [tuple(int(v) for v in ln.split()[1:]) for ln in lines]
        assert keys == sorted(keys)

    def test_bad_header(self):
        with pytest.raises(ValueError):
            laurent.from_text("nope 3\n")

    def test_duplicate_term(self):
        with pytest.raises(ValueError):
            laurent.from_text("laurent 1\n1 0\n2 0\n")
