import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eginoe.algebra import (ZERO_DEGREE, Poly, SurdValue, as_rational, catalan, double_factorial,
                            pochhammer, poly_divide_exact, poly_divmod, poly_eval_surd,
                            rational_from_str, rational_to_str)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10 ** 6)
polys = st.lists(rationals, max_size=7).map(Poly)


def test_double_factorial_examples():
    assert double_factorial(-1) == 1
    assert double_factorial(0) == 1
    assert double_factorial(5) == 15
    assert double_factorial(8) == 384
    with pytest.raises(ValueError):
        double_factorial(-2)


def test_pochhammer_examples():
    assert pochhammer(3, 0) == 1
    assert pochhammer(2, 3) == 24
    assert pochhammer(-1, 3) == 0
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)


def test_catalan():
    assert [catalan(p) for p in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    for p in range(20):
        assert catalan(p) == math.comb(2 * p, p) // (p + 1)


def test_as_rational_rejects_floats_and_bools():
    assert as_rational(3) == Fraction(3)
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)


def test_rational_strings_round_trip():
    for q in (Fraction(0), Fraction(-7, 3), Fraction(12)):
        assert rational_from_str(rational_to_str(q)) == q
    assert rational_to_str(Fraction(1, 2)) == "1/2"


class TestSurd:
    def test_normalisation(self):
        v = SurdValue(1, 8)
        assert (v.coeff, v.radicand) == (2, 2)
        w = SurdValue(1, Fraction(1, 2))
        assert (w.coeff, w.radicand) == (Fraction(1, 2), 2)
        assert SurdValue(0, 5) == SurdValue(0, 1)
        assert SurdValue(3, 4) == SurdValue(6)

    def test_normalisation_idempotent_and_value_preserving(self):
        for c in (Fraction(3, 7), Fraction(-5, 2)):
            for r in (Fraction(3, 4), Fraction(18), Fraction(50, 27), Fraction(1, 2)):
                v = SurdValue(c, r)
                assert SurdValue(v.coeff, v.radicand) == v
                assert float(v) == pytest.approx(float(c) * math.sqrt(float(r)), rel=1e-14)

    def test_add_requires_equal_radicands(self):
        a, b = SurdValue(1, 2), SurdValue(3, 2)
        assert a + b == SurdValue(4, 2)
        assert a - b == SurdValue(-2, 2)
        assert a + SurdValue(0) == a
        with pytest.raises(ValueError):
            a + SurdValue(1, 3)

    def test_mul_merges_radicands(self):
        assert SurdValue(1, 2) * SurdValue(1, 2) == SurdValue(2)
        assert SurdValue(1, 2) * SurdValue(1, 3) == SurdValue(1, 6)
        assert SurdValue(2, 3) / SurdValue(1, 3) == SurdValue(2)
        with pytest.raises(ZeroDivisionError):
            SurdValue(1, 2) / SurdValue(0)

    def test_json_round_trip(self):
        v = SurdValue(Fraction(-51, 32), 3)
        doc = json.loads(json.dumps(v.to_json()))
        assert doc == {"coeff": "-51/32", "radicand": "3/1"}
        assert SurdValue.from_json(doc) == v

    def test_immutable(self):
        v = SurdValue(1, 2)
        with pytest.raises(AttributeError):
            v.coeff = Fraction(2)


class TestPoly:
    def test_zero_degree_sentinel(self):
        assert Poly([]).degree == ZERO_DEGREE
        assert Poly([0, 0]).is_zero()
        assert Poly([1, 2, 0]).degree == 1

    def test_eval_surd_examples(self):
        t = Poly([0, 1])
        assert poly_eval_surd(t * t, SurdValue(2, Fraction(3, 4))) == SurdValue(3)
        assert poly_eval_surd(Poly([1]), SurdValue(5, 7)) == SurdValue(1)
        assert poly_eval_surd(t ** 3 - t, SurdValue(1)) == SurdValue(0)
        # odd powers keep the surd, even powers drop it
        assert poly_eval_surd(t ** 3, SurdValue(1, 2)) == SurdValue(2, 2)

    def test_monomial_division(self):
        p = Poly([0, 0, 3, 4])
        assert p.shift_down(2) == Poly([3, 4])
        q, r = Poly([1, 0, 3]).divmod_monomial(2)
        assert q == Poly([3]) and r == Poly([1])
        with pytest.raises(ArithmeticError):
            Poly([1, 2]).shift_down(1)

    def test_divmod(self):
        a, b = Poly([1, 2, 3]), Poly([-1, 1])
        q, r = poly_divmod(a * b + Poly([5]), b)
        assert q == a and r == Poly([5])
        assert poly_divide_exact(a * b, b) == a
        with pytest.raises(ArithmeticError):
            poly_divide_exact(a * b + Poly([5]), b)

    def test_derivative_and_parity(self):
        p = Poly([1, 0, 3, 0, 5])
        assert p.derivative() == Poly([0, 6, 0, 20])
        assert p.derivative(2) == Poly([6, 0, 60])
        assert p.is_even() and not p.is_odd()
        assert p.derivative().is_odd()


@settings(max_examples=60, deadline=None)
@given(rationals, rationals, rationals)
def test_rational_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_poly_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_leibniz_rule(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@settings(max_examples=40, deadline=None)
@given(polys, rationals)
def test_horner_matches_expanded_sum(p, x):
    assert p(x) == sum((c * x ** k for k, c in enumerate(p.coeffs)), Fraction(0))
