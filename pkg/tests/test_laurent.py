import random
from fractions import Fraction

import pytest

from dunkl_jacobi import LaurentPoly, PoleAtZero, Polynomial

from _helpers import random_rational


def lp(terms):
    return LaurentPoly(terms)


class TestArithmetic:
    def test_add_cancellation(self):
        assert lp({1: 1, 0: 1}) + lp({1: -1}) == lp({0: 1})

    def test_add_like_terms(self):
        assert lp({-1: 2}) + lp({-1: 1}) == lp({-1: 3})

    def test_add_absorbs_constant(self):
        assert lp({2: 1, 0: -1}) + lp({0: 1}) == lp({2: 1})

    def test_mul_inverse_pair(self):
        assert lp({-1: 1}) * lp({1: 1}) == LaurentPoly.one()

    def test_mul_difference_of_squares(self):
        assert lp({1: 1, 0: -1}) * lp({1: 1, 0: 1}) == lp({2: 1, 0: -1})

    def test_mul_quadratic_over_x(self):
        # 2(x-1)(x+c)/x at c = 1/2 expands to 2x - 1 - 1/x
        c = Fraction(1, 2)
        prod = lp({0: 2}) * lp({1: 1, 0: -1}) * lp({1: 1, 0: c}) * lp({-1: 1})
        assert prod == lp({1: 2, 0: 2 * (c - 1), -1: -2 * c})
        assert prod == lp({1: 2, 0: -1, -1: -1})

    def test_valuation_additive_under_product(self):
        rng = random.Random(7)
        for _ in range(50):
            p = lp({rng.randint(-4, 4): random_rational(rng, nonzero=True)})
            q = lp({rng.randint(-4, 4): random_rational(rng, nonzero=True),
                    5: random_rational(rng)})
            r = p * q
            assert r.valuation == p.valuation + q.valuation

    def test_commutative_associative(self):
        rng = random.Random(11)
        for _ in range(30):
            ps = [
                lp({rng.randint(-3, 3): random_rational(rng) for _ in range(3)})
                for _ in range(3)
            ]
            a, b, c = ps
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)

    def test_zero_pruning(self):
        p = lp({3: 1, 1: 0, 0: Fraction(0)})
        assert p.terms == {3: Fraction(1)}


class TestCalculus:
    def test_differentiate_cube(self):
        assert lp({3: 1}).differentiate() == lp({2: 3})

    def test_differentiate_inverse(self):
        assert lp({-1: 1}).differentiate() == lp({-2: -1})

    def test_differentiate_constant(self):
        assert lp({0: 5}).differentiate().is_zero

    def test_reflect_basics(self):
        assert lp({1: 1}).reflect() == lp({1: -1})
        assert lp({2: 1, -1: 1}).reflect() == lp({2: 1, -1: -1})

    def test_reflect_fixes_even(self):
        p = lp({4: 3, 2: Fraction(-1, 2), 0: 7, -2: 1})
        assert p.reflect() == p

    def test_reflect_involution(self):
        rng = random.Random(3)
        for _ in range(40):
            p = lp({rng.randint(-5, 5): random_rational(rng) for _ in range(4)})
            assert p.reflect().reflect() == p

    def test_reflection_derivative_rule(self):
        # d/dx reflect(p) = -reflect(d/dx p)
        rng = random.Random(5)
        for _ in range(40):
            p = lp({rng.randint(-5, 5): random_rational(rng) for _ in range(4)})
            assert p.reflect().differentiate() == -(p.differentiate().reflect())


class TestEvaluation:
    def test_simple_values(self):
        assert lp({2: 1, 0: -1}).evaluate(2) == 3.0
        assert lp({1: 1, -1: 1}).evaluate(0.5) == 2.5

    def test_pole_at_zero(self):
        with pytest.raises(PoleAtZero):
            lp({-1: 1}).evaluate(0.0)
        with pytest.raises(PoleAtZero):
            lp({-2: 1, 1: 3}).evaluate_exact(0)

    def test_zero_at_zero_ok(self):
        assert lp({2: 4}).evaluate(0.0) == 0.0

    def test_float_matches_exact(self):
        rng = random.Random(13)
        for _ in range(60):
            p = lp({rng.randint(-4, 6): random_rational(rng) for _ in range(5)})
            x = random_rational(rng, lo=1, hi=40, max_den=7)
            if rng.random() < 0.5:
                x = -x
            exact = p.evaluate_exact(x)
            approx = p.evaluate(float(x))
            scale = max(1e-30, abs(float(exact)))
            assert abs(approx - float(exact)) <= 1e-14 * max(1.0, scale)

    def test_scale_argument(self):
        p = lp({2: 1, -1: 3})
        k = Fraction(1, 2)
        q = p.scale_argument(k)
        for x in (Fraction(2), Fraction(-3, 2)):
            assert q.evaluate_exact(x) == p.evaluate_exact(k * x)


class TestStructure:
    def test_degree_valuation(self):
        p = lp({3: 1, -2: 5})
        assert p.degree == 3 and p.valuation == -2
        assert LaurentPoly.zero().degree is None
        assert LaurentPoly.zero().valuation is None

    def test_polynomial_guard(self):
        with pytest.raises(ValueError):
            Polynomial({-1: 1})
        assert Polynomial({2: 1}).is_polynomial

    def test_monic(self):
        assert Polynomial({3: 1, 0: 5}).is_monic
        assert not Polynomial({3: 2}).is_monic

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            LaurentPoly({0: 0.5})

    def test_power(self):
        p = lp({1: 1, 0: 1})
        assert p**2 == lp({2: 1, 1: 2, 0: 1})
        assert p**0 == LaurentPoly.one()


class TestSerialization:
    def test_json_round_trip(self):
        p = lp({-2: Fraction(1, 3), 0: -2, 5: Fraction(7, 2)})
        assert LaurentPoly.from_json(p.to_json()) == p

    def test_json_is_exponent_ascending(self):
        p = lp({3: 1, -1: 2})
        obj = p.to_json_obj()
        assert [rec["exponent"] for rec in obj] == [-1, 3]
        assert obj[0] == {"exponent": -1, "numerator": 2, "denominator": 1}
