import math
from fractions import Fraction

import numpy as np
import pytest

from eginoe.algebra import Poly
from eginoe.hermite import (HermiteCache, hermite, phi, scaled_hermite, skew_poly,
                            weighted_hermite_squares)
from eginoe.params import ModelParams

X = Poly([0, 1], "x")
TAUS = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


def test_hermite_examples():
    assert hermite(0) == Poly([1], "x")
    assert hermite(1) == Poly([0, 2], "x")
    assert hermite(3) == Poly([0, -12, 0, 8], "x")


def test_hermite_identities_to_40():
    for k in range(1, 40):
        assert hermite(k + 1) == 2 * (X * hermite(k)) - 2 * k * hermite(k - 1)
    for k in range(41):
        H = hermite(k)
        assert H.derivative(2) - 2 * (X * H.derivative()) + 2 * k * H == Poly([], "x")
        if k:
            assert H.derivative() == 2 * k * hermite(k - 1)


def test_scaled_examples():
    for tau in TAUS:
        assert scaled_hermite(2, tau) == X * X - tau
        assert scaled_hermite(1, tau) == X
    for k in range(10):
        assert scaled_hermite(k, 0) == Poly.monomial(k, var="x")


@pytest.mark.parametrize("tau", TAUS)
def test_scaled_relations(tau):
    for k in range(1, 40):
        C = scaled_hermite
        assert X * C(k, tau) == C(k + 1, tau) + k * tau * C(k - 1, tau)
        assert C(k, tau).derivative() == k * C(k - 1, tau)
        assert C(k, tau).degree == k and C(k, tau)[k] == 1
        assert C(k, tau).is_even() if k % 2 == 0 else C(k, tau).is_odd()
        p = skew_poly(k, tau)
        assert p.is_even() if k % 2 == 0 else p.is_odd()


def test_scaled_matches_hermite_rescaling():
    tau = 0.5
    for k in range(12):
        for x in (-1.3, 0.2, 2.7):
            direct = (tau / 2) ** (k / 2) * float(hermite(k)(Fraction(x / math.sqrt(2 * tau))))
            assert float(scaled_hermite(k, Fraction(1, 2))(Fraction(x))) == pytest.approx(direct, rel=1e-12, abs=1e-12)


def test_skew_examples():
    tau = Fraction(1, 3)
    assert skew_poly(0, tau) == Poly([1], "x")
    assert skew_poly(1, tau) == X
    assert skew_poly(3, tau) == scaled_hermite(3, tau) - 2 * scaled_hermite(1, tau)


def test_hermite_cache_is_read_only_table():
    cache = HermiteCache(ModelParams(4, Fraction(1, 2)))
    assert cache[3] == scaled_hermite(3, Fraction(1, 2))
    assert len(cache.table) == 5


def test_weighted_squares_matches_direct_sum():
    xs = np.linspace(-4, 4, 17)
    tau = Fraction(1, 2)
    got = weighted_hermite_squares(10, float(tau), xs)
    for x, g in zip(xs, got):
        direct = sum(float(scaled_hermite(k, tau)(Fraction(x))) ** 2 / math.factorial(k) for k in range(11))
        assert g == pytest.approx(direct * math.exp(-x * x / 1.5), rel=1e-12)


def test_weighted_squares_large_k_finite():
    v = weighted_hermite_squares(400, 0.5, np.array([0.0, 10.0, 30.0]))
    assert np.all(np.isfinite(v)) and np.all(v > 0)


@pytest.mark.parametrize("tau", [Fraction(0), Fraction(1, 2), Fraction(1)])
def test_phi_properties(tau):
    params = ModelParams(6, tau)
    s = float(params.s)
    for k in range(7):
        if k % 2 == 0:
            assert abs(phi(k, params, 0.0)) < 1e-12
        for x in (-1.7, 0.3, 2.2):
            h = 1e-5
            fd = (phi(k, params, x + h) - phi(k, params, x - h)) / (2 * h)
            exact = 2 * float(skew_poly(k, tau)(Fraction(x))) * math.exp(-x * x / (2 * s))
            assert fd == pytest.approx(exact, abs=1e-8 * max(1.0, abs(exact)))
    # large-x limit is the full Gaussian moment of p_k
    from scipy.integrate import quad
    for k in (1, 3, 5):
        full, _ = quad(lambda y: float(skew_poly(k, tau)(Fraction(y))) * math.exp(-y * y / (2 * s)), -40, 40)
        assert phi(k, params, 60.0) == pytest.approx(full, rel=1e-10, abs=1e-10)


def test_phi_rejects_nonpositive_tol():
    with pytest.raises(ValueError):
        phi(1, ModelParams(2, Fraction(1, 2)), 0.5, tol=0)
