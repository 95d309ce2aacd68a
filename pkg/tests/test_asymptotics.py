import math
from fractions import Fraction

import pytest
from scipy.integrate import quad
from scipy.special import gammainc, gammaincc, i0e, i1e

from eginoe import asymptotics as A
from eginoe.algebra import SurdValue, catalan
from eginoe.moments import exact_moment
from eginoe.params import ModelParams
from eginoe.special import bessel_i, bessel_i_scaled, gamma_p, gamma_q, hyp2f1


class TestHyp2f1:
    def test_examples(self):
        assert hyp2f1(0.3, 1.7, 2.2, 0.0) == 1.0
        assert hyp2f1(1, 1, 2, -0.5) == pytest.approx(math.log(1.5) / 0.5, rel=1e-13)
        assert hyp2f1(1, 1, 2, -3.0) == pytest.approx(math.log(4.0) / 3.0, rel=1e-12)

    def test_pfaff_and_direct_agree(self):
        from eginoe.special import _gauss_series
        a, b, c, z = 0.5, 0.5, -3.5, -0.4
        w = z / (z - 1)
        direct = _gauss_series(a, b, c, z, 10000)
        assert (1 - z) ** (-a) * _gauss_series(a, c - b, c, w, 10000) == pytest.approx(direct, rel=1e-12)

    def test_domain(self):
        with pytest.raises(ValueError):
            hyp2f1(1, 1, -2, -0.1)
        with pytest.raises(ValueError):
            hyp2f1(1, 1, 2, 0.1)


def test_incomplete_gamma_against_scipy():
    for a in (0.5, 1.0, 3.0, 7.5, 40.0):
        for z in (0.1, 1.0, a, a + 1.5, 3 * a + 5):
            assert gamma_p(a, z) == pytest.approx(gammainc(a, z), rel=1e-12, abs=1e-300)
            assert gamma_q(a, z) == pytest.approx(gammaincc(a, z), rel=1e-11, abs=1e-300)


def test_bessel():
    assert bessel_i(0, 0.0) == 1.0 and bessel_i(1, 0.0) == 0.0
    partial = sum(1.0 / math.factorial(k) ** 2 for k in range(40))
    assert bessel_i(0, 2.0) == pytest.approx(partial, rel=1e-13)
    for z in (0.3, 5.0, 12.0, 39.9, 40.1, 80.0, 500.0):
        assert bessel_i_scaled(0, z) == pytest.approx(i0e(z), rel=1e-12)
        assert bessel_i_scaled(1, z) == pytest.approx(i1e(z), rel=1e-12)


class TestCount:
    def test_examples(self):
        for n in (2, 4, 6, 8, 20):
            assert A.expected_real_count(ModelParams(n, 1)) == n
        assert A.expected_real_count(ModelParams(2, 0)) == pytest.approx(math.sqrt(2), rel=1e-15)
        p = ModelParams(2, Fraction(1, 2))
        assert A.expected_real_count(p) == pytest.approx(float(exact_moment(p, 0)), rel=1e-10)

    def test_exact_variant_equals_engine(self):
        for n in (2, 4, 6, 8, 12):
            for k in range(5):
                p = ModelParams(n, Fraction(k, 4))
                assert A.expected_real_count_exact(p) == exact_moment(p, 0)

    def test_eks_sum(self):
        for n in (2, 4, 10, 30):
            assert A.expected_real_count(ModelParams(n, 0)) == pytest.approx(A.ginoe_count_reference(n), rel=1e-13)

    @staticmethod
    def _gaps(sizes):
        tau = Fraction(1, 2)
        limit = A.strong_moment(float(tau), 0)
        # the exact hypergeometric count equals M_0 (checked above) and is cheap at large N
        return [abs(float(A.expected_real_count_exact(ModelParams(n, tau))) / math.sqrt(n) - limit)
                for n in sizes]

    @pytest.mark.xfail(strict=True, reason="gap grows from N=8 to N=16 (0.0607 -> 0.0693); "
                       "three independent routes agree on the values, see the decisions ledger")
    def test_finite_n_convergence_monotone_from_8(self):
        gaps = self._gaps((8, 16, 32, 64))
        assert all(b < a for a, b in zip(gaps, gaps[1:]))

    def test_finite_n_convergence_monotone_from_16(self):
        gaps = self._gaps((16, 32, 64, 128, 256))
        assert all(b < a for a, b in zip(gaps, gaps[1:]))
        assert gaps[-1] < 0.03


class TestStrong:
    def test_examples(self):
        assert A.strong_moment(0.0, 0) == pytest.approx(math.sqrt(2 / math.pi), rel=1e-15)
        for tau in (0.0, 0.5, 0.9):
            for p in range(4):
                q, _ = quad(lambda x: x ** (2 * p) * A.strong_density(tau, x), -(1 + tau), 1 + tau)
                assert A.strong_moment(tau, p) == pytest.approx(q, rel=1e-12)
        with pytest.raises(ValueError):
            A.strong_moment(1.0, 1)


class TestWeak:
    def test_density(self):
        assert A.weak_density(1.0, 2.0) == 0.0 and A.weak_density(1.0, -3.0) == 0.0
        assert A.weak_density(1e-5, 1.0) == pytest.approx(math.sqrt(3) / (2 * math.pi), rel=1e-8)
        for alpha in (0.5, 1.0, 3.0):
            mass, _ = quad(lambda x: A.weak_density(alpha, x), -2, 2, epsabs=1e-14)
            assert mass == pytest.approx(A.weak_moment_series(alpha, 0), rel=1e-10)

    def test_series_is_density_moment(self):
        for alpha in (0.5, 2.0, 7.0, 12.0):
            for p in range(5):
                q, _ = quad(lambda x: x ** (2 * p) * A.weak_density(alpha, x), -2, 2, epsabs=1e-14, epsrel=1e-13)
                assert A.weak_moment_series(alpha, p) == pytest.approx(q, rel=1e-10)

    def test_catalan_limit(self):
        for p in range(7):
            assert A.weak_moment_series(1e-4, p) == pytest.approx(catalan(p), abs=1e-6)
            assert A.weak_moment_series(1e-5, p) == catalan(p)

    def test_bessel_tables(self):
        assert A.bessel_r_table(1.3, 0) == (1.0, 1.0)
        a = 1.3
        r0, r1 = A.bessel_r_table(a, 2)
        assert r0 == pytest.approx(8 * (2 * a ** 4 - a ** 2) / (5 * a ** 4))
        assert r1 == pytest.approx(8 * (2 * a ** 4 - 3 * a ** 2 + 4) / (5 * a ** 4))
        with pytest.raises(ValueError):
            A.bessel_r_table(1.0, 1)
        for alpha in (0.5, 1.0, 2.0, 5.0):
            for p in A.BESSEL_ORDERS:
                assert A.weak_moment_bessel(alpha, p) == pytest.approx(A.weak_moment_series(alpha, p), rel=1e-10)

    def test_large_alpha_trend(self):
        # moments fall off like 1/alpha, the matched strong-regime scaling
        scaled = [a * A.weak_moment_series(a, 1) for a in (4.0, 6.0, 9.0, 13.0)]
        diffs = [abs(b - a) for a, b in zip(scaled, scaled[1:])]
        assert all(d2 < d1 for d1, d2 in zip(diffs, diffs[1:]))

    def test_semicircle(self):
        assert A.semicircle(0.0) == pytest.approx(1 / math.pi)
        assert A.semicircle(2.5) == 0.0
