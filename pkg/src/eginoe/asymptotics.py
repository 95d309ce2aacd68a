"""Expected number of real eigenvalues and large-N moment formulas."""
from __future__ import annotations

import math
from fractions import Fraction

from scipy.special import erf

from .algebra import SurdValue, catalan, pochhammer
from .params import ModelParams
from .special import bessel_i, bessel_i_scaled, hyp2f1  # noqa: F401  (re-exported)

CATALAN_ALPHA = 1e-4


def _half_ratio(k: int) -> Fraction:
    """Gamma(2k+1/2) / (sqrt(pi) (2k)!) as an exact rational."""
    return pochhammer(Fraction(1, 2), 2 * k) / math.factorial(2 * k)


def expected_real_count(params: ModelParams) -> float:
    """E[number of real eigenvalues] from the hypergeometric sum.

    sqrt(2(1+tau)/(pi(1-tau))) sum_k Gamma(2k+1/2)/(2k)! 2F1(1/2,1/2;1/2-2k;-tau/(1-tau)).
    The sqrt(pi) inside Gamma(2k+1/2) cancels the 1/sqrt(pi) in front.
    """
    tau = params.tau
    if tau == 1:
        return float(params.n)
    t = float(tau)
    z = -t / (1 - t)
    total = math.fsum(float(_half_ratio(k)) * hyp2f1(0.5, 0.5, 0.5 - 2 * k, z)
                      for k in range(params.n // 2))
    return math.sqrt(2 * (1 + t) / (1 - t)) * total


def expected_real_count_exact(params: ModelParams) -> SurdValue:
    """Same quantity in exact arithmetic.

    A Pfaff transformation turns each 2F1 into (1-tau)^{1/2} times the
    terminating polynomial 2F1(1/2, -2k; 1/2-2k; tau), leaving
    sqrt(2(1+tau)) sum_k (1/2)_{2k}/(2k)! 2F1(1/2, -2k; 1/2-2k; tau).
    """
    tau = params.tau
    acc = Fraction(0)
    for k in range(params.n // 2):
        c = Fraction(1, 2) - 2 * k
        term = Fraction(1)
        poly = Fraction(1)
        for j in range(2 * k):
            term *= (Fraction(1, 2) + j) * (-2 * k + j) / ((c + j) * (j + 1)) * tau
            poly += term
        acc += _half_ratio(k) * poly
    return SurdValue(2 * acc, params.moment_radicand)


def ginoe_count_reference(n: int) -> float:
    """sqrt(2) sum_{k < N/2} (4k-1)!!/(4k)!! for tau = 0."""
    from .algebra import double_factorial
    return math.sqrt(2) * math.fsum(double_factorial(4 * k - 1) / double_factorial(4 * k)
                                    for k in range(n // 2))


def strong_moment(tau: float, p: int) -> float:
    """Limit of the rescaled 2p-th moment at fixed tau < 1 (uniform profile)."""
    tau = float(tau)
    if not 0 <= tau < 1:
        raise ValueError("tau must lie in [0, 1)")
    return 2 / (2 * p + 1) * (1 + tau) ** (2 * p + 1) / math.sqrt(2 * math.pi * (1 - tau * tau))


def strong_density(tau: float, x: float) -> float:
    tau = float(tau)
    return (1 / math.sqrt(2 * math.pi * (1 - tau * tau))) if abs(x) < 1 + tau else 0.0


def weak_density(alpha: float, x: float) -> float:
    """erf(alpha sqrt(4-x^2)/2) / (2 alpha sqrt(pi)) on (-2, 2), the sqrt(N) factor removed."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if abs(x) >= 2:
        return 0.0
    return float(erf(alpha * math.sqrt(4 - x * x) / 2)) / (2 * alpha * math.sqrt(math.pi))


def semicircle(x: float) -> float:
    return math.sqrt(4 - x * x) / (2 * math.pi) if abs(x) < 2 else 0.0


def weak_series_coeff(p: int, n: int) -> Fraction:
    """Rational coefficient of (-alpha^2)^n in the weak-regime moment series.

    Gamma(n+3/2) Gamma(p+1/2) / pi = (1/2)_{n+1} (1/2)_p.
    """
    return (Fraction(2 ** (2 * p + 1), 2 * n + 1) * pochhammer(Fraction(1, 2), n + 1)
            * pochhammer(Fraction(1, 2), p) / (math.factorial(n) * math.factorial(n + p + 1)))


def weak_moment_series(alpha: float, p: int, tol: float = 1e-15, max_terms: int = 20000) -> float:
    """Weak non-Hermiticity moment from its alternating power series in alpha^2.

    The terms first grow like alpha^{2n}/n! before decaying, so floating
    summation cancels catastrophically for large alpha.  The sum is therefore
    accumulated exactly (alpha^2 is converted to the rational its float
    denotes) and rounded once.  The alternating tail is bounded by the first
    omitted term once terms decrease.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if p < 0:
        raise ValueError("p must be >= 0")
    if alpha < CATALAN_ALPHA:
        return float(catalan(p))
    x = -Fraction(alpha) ** 2
    rel = Fraction(tol)
    acc = Fraction(0)
    power = Fraction(1)
    prev_mag = None
    for n in range(max_terms):
        term = weak_series_coeff(p, n) * power
        acc += term
        mag = abs(term)
        if prev_mag is not None and mag < prev_mag and mag <= rel * abs(acc):
            return float(acc)
        prev_mag = mag
        power *= x
        # keep the exact denominators bounded
        if n % 32 == 31:
            acc = acc.limit_denominator(1 << 200) if acc.denominator.bit_length() > 4000 else acc
    raise ArithmeticError(f"weak moment series did not reach tol={tol} in {max_terms} terms")


# Moment indices p (for M_{2p}) covered by the tabulated Bessel coefficients.
BESSEL_ORDERS = (0, 2, 4)


def bessel_r_table(alpha: float, p: int) -> tuple[float, float]:
    """(r_0, r_1) coefficients of I_0 and I_1 in the Bessel form of M_{2p}, p in {0, 2, 4}."""
    a2 = alpha * alpha
    a4, a6, a8 = a2 * a2, a2 ** 3, a2 ** 4
    if p == 0:
        return 1.0, 1.0
    if p == 2:
        return 8 * (2 * a4 - a2) / (5 * a4), 8 * (2 * a4 - 3 * a2 + 4) / (5 * a4)
    if p == 4:
        return (64 * (4 * a8 - 6 * a6 + 15 * a4 - 24 * a2) / (9 * a8),
                64 * (4 * a8 - 10 * a6 + 27 * a4 - 60 * a2 + 96) / (9 * a8))
    raise ValueError(f"Bessel form tabulated only for p in {BESSEL_ORDERS}")


def weak_moment_bessel(alpha: float, p: int) -> float:
    """M_{2p} in the weak regime as [r_0 I_0(alpha^2/2) + r_1 I_1(alpha^2/2)] exp(-alpha^2/2)."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    r0, r1 = bessel_r_table(alpha, p)
    z = alpha * alpha / 2
    return r0 * bessel_i_scaled(0, z) + r1 * bessel_i_scaled(1, z)
