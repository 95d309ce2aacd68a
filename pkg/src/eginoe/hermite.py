"""Hermite polynomials, the scaled monic family C_k and skew-orthogonal p_k.

C_k(x) = (tau/2)^{k/2} H_k(x / sqrt(2 tau)) is monic with rational
coefficients and obeys C_{k+1} = x C_k - k tau C_{k-1}; at tau = 0 it is x^k.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.special import erf, erfc

from .algebra import Poly, as_rational
from .params import ModelParams


@lru_cache(maxsize=None)
def hermite(k: int) -> Poly:
    """Physicists' Hermite polynomial H_k with integer coefficients."""
    if k < 0:
        raise ValueError("hermite needs k >= 0")
    prev, cur = Poly([], "x"), Poly([1], "x")
    x = Poly([0, 1], "x")
    for j in range(k):
        prev, cur = cur, 2 * (x * cur) - 2 * j * prev
    return cur


@lru_cache(maxsize=None)
def _scaled_table(tau: Fraction, kmax: int) -> tuple[Poly, ...]:
    x = Poly([0, 1], "x")
    table = [Poly([1], "x")]
    if kmax >= 1:
        table.append(x)
    for k in range(1, kmax):
        table.append(x * table[k] - (k * tau) * table[k - 1])
    return tuple(table)


def scaled_hermite(k: int, tau) -> Poly:
    """Monic C_k for rational tau in [0, 1]."""
    if k < 0:
        raise ValueError("scaled_hermite needs k >= 0")
    tau = as_rational(tau)
    # grow in blocks so repeated calls share one cached table
    size = max(8, 1 << (k + 1).bit_length())
    return _scaled_table(tau, size)[k]


def skew_poly(k: int, tau) -> Poly:
    """p_{2m} = C_{2m}, p_{2m+1} = C_{2m+1} - 2m C_{2m-1}."""
    if k < 0:
        raise ValueError("skew_poly needs k >= 0")
    if k % 2 == 0 or k == 1:
        return scaled_hermite(k, tau)
    return scaled_hermite(k, tau) - (k - 1) * scaled_hermite(k - 2, tau)


class HermiteCache:
    """C_0..C_K for one parameter set; read-only after construction."""

    def __init__(self, params: ModelParams, kmax: int | None = None):
        self.params = params
        kmax = params.n if kmax is None else kmax
        self.table = tuple(scaled_hermite(k, params.tau) for k in range(kmax + 1))

    def __getitem__(self, k: int) -> Poly:
        return self.table[k]


def weighted_hermite_squares(kmax: int, tau: float, x) -> np.ndarray:
    """Return sum_{k<=kmax} C_k(x)^2/k! * exp(-x^2/(1+tau)) for an array x.

    Iterates psi_k = C_k(x) exp(-x^2/(2(1+tau))) / sqrt(k!) with
    psi_{k+1} = (x psi_k - sqrt(k) tau psi_{k-1}) / sqrt(k+1).  The Gaussian
    factor is carried as a separate log scale and the iterates are rescaled
    whenever they grow large, so neither overflow nor underflow occurs for
    sizes in the hundreds.
    """
    x = np.asarray(x, dtype=float)
    s = 1.0 + float(tau)
    log_scale = -x * x / (2.0 * s)
    prev = np.zeros_like(x)
    cur = np.ones_like(x)
    acc = np.ones_like(x)
    for k in range(kmax):
        nxt = (x * cur - math.sqrt(k) * tau * prev) / math.sqrt(k + 1)
        prev, cur = cur, nxt
        acc = acc + cur * cur
        big = np.abs(cur) > 1e150
        if np.any(big):
            f = np.where(big, np.abs(cur), 1.0)
            prev = prev / f
            cur = cur / f
            acc = acc / (f * f)
            log_scale = log_scale + np.log(f)
    return acc * np.exp(2.0 * log_scale)


def _gaussian_tail_integrals(mmax: int, s: float, x: float) -> list[float]:
    """I_m = int_{-inf}^x y^m exp(-y^2/(2s)) dy for m = 0..mmax.

    Uses I_m = -s x^{m-1} w(x) + s (m-1) I_{m-2}, with I_0 an erf value and
    I_1 = -s w(x).
    """
    w = math.exp(-x * x / (2 * s))
    root = math.sqrt(2 * s)
    if x < 0:
        i0 = math.sqrt(math.pi * s / 2) * erfc(-x / root)
    else:
        i0 = math.sqrt(math.pi * s / 2) * (1 + erf(x / root))
    out = [i0, -s * w]
    for m in range(2, mmax + 1):
        out.append(-s * x ** (m - 1) * w + s * (m - 1) * out[m - 2])
    return out[: mmax + 1]


def _gaussian_full_integral(m: int, s: float) -> float:
    if m % 2:
        return 0.0
    from .algebra import double_factorial
    return double_factorial(m - 1) * s ** (m // 2) * math.sqrt(2 * math.pi * s)


def phi(k: int, params: ModelParams, x: float, tol: float = 1e-12) -> float:
    """Phi_k(x) = int sgn(x - y) p_k(y) exp(-y^2/(2(1+tau))) dy.

    Reduced to one erf evaluation plus Gaussian-weighted polynomial terms,
    so ``tol`` only guards the call contract: the result is closed form.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    p = skew_poly(k, params.tau)
    s = float(params.s)
    coeffs = p.float_coeffs()
    lower = _gaussian_tail_integrals(len(coeffs), s, float(x))
    below = sum(c * lower[m] for m, c in enumerate(coeffs))
    total = sum(c * _gaussian_full_integral(m, s) for m, c in enumerate(coeffs))
    return 2.0 * below - total
