import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import gammaincc

from eginoe.density import (DensityInstance, density_pfaffian, density_r1, density_r2,
                            density_total, ginoe_r1_reference, ginoe_r2_reference,
                            ginoe_rescaled_reference, goe_density_reference)
from eginoe.hermite import phi, skew_poly
from eginoe.moments import exact_moment
from eginoe.params import ModelParams

ROOT_2PI = math.sqrt(2 * math.pi)


def test_n2_r1_at_origin():
    for tau in (0, Fraction(1, 3), 1):
        assert density_r1(DensityInstance(ModelParams(2, tau)), 0.0) == pytest.approx(1 / ROOT_2PI, rel=1e-15)


def test_ginoe_r1_incomplete_gamma():
    inst = DensityInstance(ModelParams(4, 0))
    # Gamma(3, 1) / (2! sqrt(2 pi)) with the regularised upper gamma from scipy
    assert density_r1(inst, 1.0) == pytest.approx(gammaincc(3, 1.0) / ROOT_2PI, rel=1e-14)
    assert ginoe_r1_reference(4, 1.0) == pytest.approx(gammaincc(3, 1.0) / ROOT_2PI, rel=1e-13)


def test_r2_examples():
    for tau in (0, Fraction(1, 2), 1):
        assert density_r2(DensityInstance(ModelParams(4, tau)), 0.0) == 0.0
    inst = DensityInstance(ModelParams(2, 0))
    inner, _ = quad(lambda u: math.exp(-u * u / 2), 0, 1)
    assert density_r2(inst, 1.0) == pytest.approx(math.exp(-0.5) * inner / ROOT_2PI, rel=1e-13)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_tau0_closed_forms(n):
    inst = DensityInstance(ModelParams(n, 0))
    for x in np.linspace(-4, 4, 17):
        assert float(inst.r1(x)) == pytest.approx(ginoe_r1_reference(n, x), abs=1e-13)
        assert float(inst.r2(x)) == pytest.approx(ginoe_r2_reference(n, x), abs=1e-13)
    for y in (-1.2, 0.0, 0.5, 1.1):
        assert ginoe_rescaled_reference(n, y) == pytest.approx(float(inst.total(math.sqrt(n) * y)), abs=1e-13)


def test_goe_density_at_origin():
    for n in (2, 4, 6):
        inst = DensityInstance(ModelParams(n, 1))
        assert density_total(inst, 0.0) == pytest.approx(goe_density_reference(n, 0.0), abs=1e-14)


@pytest.mark.parametrize("params", [ModelParams(n, t) for n in (2, 4, 6)
                                    for t in (Fraction(0), Fraction(1, 2), Fraction(1))], ids=str)
def test_pfaffian_matches_total(params):
    inst = DensityInstance(params)
    for x in (0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0):
        assert density_pfaffian(inst, x) == pytest.approx(float(inst.total(x)), abs=1e-10)


def test_pfaffian_single_summand_by_hand():
    params = ModelParams(2, Fraction(1, 3))
    s = float(params.s)
    for x in (-0.7, 0.4, 1.9):
        p0, p1 = 1.0, x
        hand = (phi(0, params, x) * p1 - phi(1, params, x) * p0) * math.exp(-x * x / (2 * s)) / (2 * ROOT_2PI * s)
        assert density_pfaffian(DensityInstance(params), x) == pytest.approx(hand, rel=1e-14)
        assert float(skew_poly(1, params.tau)(Fraction(x))) == pytest.approx(x)


@pytest.mark.parametrize("params", [ModelParams(n, t) for n in (2, 6, 8)
                                    for t in (Fraction(0), Fraction(3, 4), Fraction(1))], ids=str)
def test_even_nonnegative_and_normalised(params):
    inst = DensityInstance(params)
    xs = np.linspace(-8, 8, 161)
    vals = inst.total(xs)
    assert np.all(vals >= 0)
    assert np.allclose(vals, inst.total(-xs), rtol=0, atol=1e-15)
    mass, _ = quad(lambda x: float(inst.total(x)), -40, 40, epsabs=1e-13, epsrel=1e-12, limit=200)
    assert mass == pytest.approx(float(exact_moment(params, 0)), rel=1e-9)


def test_large_n_stays_finite():
    inst = DensityInstance(ModelParams(200, Fraction(1, 2)))
    vals = inst.total(np.array([0.0, 5.0, 20.0, 40.0]))
    assert np.all(np.isfinite(vals)) and np.all(vals >= 0)
