"""Real-eigenvalue density R_N = R^(1) + R^(2) and its reference closed forms."""
from __future__ import annotations

import math

import numpy as np
from scipy.special import erf

from .hermite import hermite, phi, skew_poly, weighted_hermite_squares
from .params import ModelParams
from .special import gamma_p, gamma_q

_ROOT_2PI = math.sqrt(2 * math.pi)


class DensityInstance:
    """Pointwise evaluator of the density for one parameter set (array-friendly)."""

    def __init__(self, params: ModelParams):
        self.params = params
        self.n = params.n
        self.tau = float(params.tau)
        self.s = float(params.s)

    def r1(self, x):
        return weighted_hermite_squares(self.n - 2, self.tau, x) / _ROOT_2PI

    def r2(self, x):
        """Second component.

        With E_k(x) = int_0^x exp(-u^2/(2s)) C_k(u) du, integrating
        C_k = C_{k+1}'/(k+1) by parts gives, for even k,
            E_{k+2} = (k+1) E_k - s exp(-x^2/(2s)) C_{k+1}(x),
        an erf term plus Gaussian-weighted polynomials.  Both C_k and E_k are
        carried divided by sqrt(k!) to keep large sizes finite.
        """
        x = np.asarray(x, dtype=float)
        s, tau = self.s, self.tau
        w = np.exp(-x * x / (2 * s))
        # normalised scaled Hermite values c_k = C_k / sqrt(k!)
        c = [np.ones_like(x), x.copy()]
        for k in range(1, self.n - 1):
            c.append((x * c[k] - math.sqrt(k) * tau * c[k - 1]) / math.sqrt(k + 1))
        e = math.sqrt(math.pi * s / 2) * erf(x / math.sqrt(2 * s))
        for k in range(0, self.n - 2, 2):
            e = ((k + 1) * e - s * w * c[k + 1] * math.sqrt(k + 1)) / math.sqrt((k + 1) * (k + 2))
        return w / (s * _ROOT_2PI) * math.sqrt(self.n - 1) * c[self.n - 1] * e

    def total(self, x):
        return self.r1(x) + self.r2(x)

    def pfaffian(self, x: float) -> float:
        """Skew-orthogonal sum with the integrated functions Phi_k."""
        p = self.params
        x = float(x)
        acc = 0.0
        for k in range(self.n // 2):
            pe = skew_poly(2 * k, p.tau)(x)
            po = skew_poly(2 * k + 1, p.tau)(x)
            acc += (phi(2 * k, p, x) * po - phi(2 * k + 1, p, x) * pe) / math.factorial(2 * k)
        return math.exp(-x * x / (2 * self.s)) / (2 * _ROOT_2PI * self.s) * acc


def density_r1(inst: DensityInstance, x):
    return inst.r1(x)


def density_r2(inst: DensityInstance, x):
    return inst.r2(x)


def density_total(inst: DensityInstance, x):
    return inst.total(x)


def density_pfaffian(inst: DensityInstance, x: float) -> float:
    return inst.pfaffian(x)


# ---------------------------------------------------------------------------
# reference closed forms (independent routes used by the tests)
# ---------------------------------------------------------------------------

def ginoe_r1_reference(n: int, x: float) -> float:
    """tau = 0: Gamma(N-1, x^2) / ((N-2)! sqrt(2 pi)), regularised form."""
    return gamma_q(n - 1, x * x) / _ROOT_2PI


def ginoe_r2_reference(n: int, x: float) -> float:
    """tau = 0: 2^{(N-3)/2}/(N-2)! e^{-x^2/2}/sqrt(2 pi) |x|^{N-1} gamma((N-1)/2, x^2/2)."""
    if x == 0:
        return 0.0
    a = (n - 1) / 2
    log_mag = ((n - 3) / 2 * math.log(2) - math.lgamma(n - 1) - x * x / 2
               + (n - 1) * math.log(abs(x)) + math.lgamma(a))
    return math.exp(log_mag) * gamma_p(a, x * x / 2) / _ROOT_2PI


def ginoe_rescaled_reference(n: int, x: float) -> float:
    """R_N(sqrt(N) x) at tau = 0 from the incomplete-gamma pair."""
    y = math.sqrt(n) * x
    return ginoe_r1_reference(n, y) + ginoe_r2_reference(n, y)


def goe_density_reference(n: int, x: float) -> float:
    """Classical GOE density in physicists' Hermite form; the inner integral by scipy quad."""
    from scipy.integrate import quad

    H = [hermite(k) for k in range(n)]
    first = sum(H[k](x / math.sqrt(2)) ** 2 / (2 ** k * math.factorial(k)) for k in range(n - 1))
    first *= math.exp(-x * x / 2) / _ROOT_2PI
    inner, _ = quad(lambda u: math.exp(-u * u / 4) * H[n - 2](u / math.sqrt(2)), 0.0, x,
                    epsabs=1e-11, epsrel=1e-11, limit=200)
    second = (2.0 ** -(n - 0.5) / math.factorial(n - 2) * math.exp(-x * x / 4) / _ROOT_2PI
              * H[n - 1](x / math.sqrt(2)) * inner)
    return first + second
