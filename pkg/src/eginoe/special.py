"""Special functions needed by the closed forms: incomplete gamma, 2F1, I_0, I_1."""
from __future__ import annotations

import math

_EPS = 1e-16


def _gamma_series(a: float, z: float) -> float:
    """Regularised lower P(a, z) by its power series (z < a + 1)."""
    term = 1.0 / a
    total = term
    k = 0
    while abs(term) > _EPS * abs(total):
        k += 1
        term *= z / (a + k)
        total += term
        if k > 10000:
            raise ArithmeticError("incomplete gamma series did not converge")
    return total * math.exp(-z + a * math.log(z) - math.lgamma(a))


def _gamma_cf(a: float, z: float) -> float:
    """Regularised upper Q(a, z) by Lentz's continued fraction (z >= a + 1)."""
    tiny = 1e-300
    b = z + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 10000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        d = tiny if abs(d) < tiny else d
        c = b + an / c
        c = tiny if abs(c) < tiny else c
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return h * math.exp(-z + a * math.log(z) - math.lgamma(a))
    raise ArithmeticError("incomplete gamma continued fraction did not converge")


def gamma_p(a: float, z: float) -> float:
    """Regularised lower incomplete gamma gamma(a, z)/Gamma(a)."""
    if a <= 0 or z < 0:
        raise ValueError("need a > 0 and z >= 0")
    if z == 0:
        return 0.0
    if z < a + 1:
        return _gamma_series(a, z)
    return 1.0 - _gamma_cf(a, z)


def gamma_q(a: float, z: float) -> float:
    """Regularised upper incomplete gamma Gamma(a, z)/Gamma(a)."""
    if a <= 0 or z < 0:
        raise ValueError("need a > 0 and z >= 0")
    if z == 0:
        return 1.0
    if z < a + 1:
        return 1.0 - _gamma_series(a, z)
    return _gamma_cf(a, z)


def _gauss_series(a: float, b: float, c: float, z: float, max_terms: int) -> float:
    term = 1.0
    parts = [1.0]
    for k in range(max_terms):
        if a + k == 0 or b + k == 0:
            return math.fsum(parts)
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        parts.append(term)
        if abs(term) <= 1e-17 * abs(math.fsum(parts)):
            return math.fsum(parts)
    raise ArithmeticError(f"2F1 series did not converge in {max_terms} terms at z={z}")


def _is_nonpos_int(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def hyp2f1(a: float, b: float, c: float, z: float, max_terms: int = 100000) -> float:
    """Gauss hypergeometric function for z <= 0.

    |z| < 1/2 sums the defining series.  Otherwise a Pfaff transformation maps
    z to w = z/(z-1) in [1/3, 1): either
        (1-z)^{-a} 2F1(a, c-b; c; w)   or   (1-z)^{-b} 2F1(c-a, b; c; w),
    choosing the form whose series terminates when one does.
    """
    if _is_nonpos_int(c):
        raise ValueError("c must not be a non-positive integer")
    if z > 0:
        raise ValueError("only z <= 0 is supported")
    if z == 0:
        return 1.0
    if abs(z) < 0.5:
        return _gauss_series(a, b, c, z, max_terms)
    w = z / (z - 1.0)
    if _is_nonpos_int(c - a) and not _is_nonpos_int(c - b):
        return (1.0 - z) ** (-b) * _gauss_series(c - a, b, c, w, max_terms)
    return (1.0 - z) ** (-a) * _gauss_series(a, c - b, c, w, max_terms)


# Above this argument the asymptotic expansion reaches 1e-15; below it the
# all-positive power series is used.
BESSEL_CROSSOVER = 40.0


def bessel_i(nu: int, z: float) -> float:
    """Modified Bessel function I_nu(z), nu in {0, 1}, z >= 0."""
    if nu not in (0, 1):
        raise ValueError("only orders 0 and 1 are implemented")
    if z < 0:
        raise ValueError("z must be non-negative")
    if z <= BESSEL_CROSSOVER:
        half = z / 2.0
        term = 1.0 if nu == 0 else half
        total = term
        k = 0
        while term > 1e-17 * total or k < 2:
            k += 1
            term *= half * half / (k * (k + nu))
            total += term
            if total == 0.0:
                break
        return total
    return bessel_i_scaled(nu, z) * math.exp(z)


def bessel_i_scaled(nu: int, z: float) -> float:
    """exp(-z) I_nu(z); uses the large-argument expansion above the crossover."""
    if z <= BESSEL_CROSSOVER:
        return bessel_i(nu, z) * math.exp(-z)
    mu = 4.0 * nu * nu
    term = 1.0
    total = 1.0
    k = 0
    while True:
        k += 1
        new = term * -(mu - (2 * k - 1) ** 2) / (k * 8.0 * z)
        if abs(new) >= abs(term) or abs(new) < 1e-17:
            break
        term = new
        total += term
    return total / math.sqrt(2.0 * math.pi * z)
