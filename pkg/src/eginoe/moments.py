"""Exact and numerical spectral moments and moment generating functions.

Every exact moment of R_N is a rational multiple of sqrt((1+tau)/2); the
engine works with that rational part and wraps it as a SurdValue at the end.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .algebra import Poly, SurdValue, double_factorial
from .hermite import hermite, scaled_hermite
from .params import ModelParams


# ---------------------------------------------------------------------------
# exact engine
# ---------------------------------------------------------------------------

class _ExactEngine:
    """Rational parts of the two density components' moments.

    With s = 1+tau and the weight exp(-x^2/s)/sqrt(2 pi),
        int x^{2m} exp(-x^2/s)/sqrt(2 pi) dx = (2m-1)!! (s/2)^m sqrt(s/2),
    so each moment is (rational) * sqrt(s/2) and only the rational is kept.
    """

    def __init__(self, params: ModelParams):
        self.params = params
        n, tau = params.n, params.tau
        self.s = params.s
        squares = Poly([], "x")
        for k in range(n - 1):
            ck = scaled_hermite(k, tau)
            squares = squares + ck * ck * Fraction(1, math.factorial(k))
        self.squares = squares
        self.c_low = scaled_hermite(n - 2, tau)
        self.c_high = scaled_hermite(n - 1, tau)
        self.norm2 = 1 / (self.s * math.factorial(n - 2))
        self._gauss: list[Fraction] = [Fraction(1)]
        self._G: list[Fraction] = []
        self._F: dict[int, Fraction] = {}

    def gauss(self, b: int) -> Fraction:
        """Rational part of int x^b exp(-x^2/s)/sqrt(2 pi)."""
        if b % 2:
            return Fraction(0)
        m = b // 2
        half = self.s / 2
        while len(self._gauss) <= m:
            j = len(self._gauss)
            self._gauss.append(self._gauss[-1] * (2 * j - 1) * half)
        return self._gauss[m]

    def G(self, b: int) -> Fraction:
        """Rational part of int x^b C_{N-2}(x) exp(-x^2/s)/sqrt(2 pi)."""
        while len(self._G) <= b:
            j = len(self._G)
            self._G.append(sum((c * self.gauss(j + m) for m, c in enumerate(self.c_low.coeffs)),
                               Fraction(0)))
        return self._G[b]

    def F(self, a: int) -> Fraction:
        """Rational part of int x^a exp(-x^2/(2s)) E(x) dx/sqrt(2 pi), a odd.

        E(x) = int_0^x exp(-u^2/(2s)) C_{N-2}(u) du is odd, so even a gives 0.
        Writing x^a exp(-x^2/(2s)) = -s x^{a-1} d/dx exp(-x^2/(2s)) and
        integrating by parts:  F_a = s (a-1) F_{a-2} + s G_{a-1}.
        """
        if a % 2 == 0:
            return Fraction(0)
        if a in self._F:
            return self._F[a]
        start = max([k for k in self._F if k < a], default=-1)
        prev = self._F.get(start, Fraction(0))
        for b in range(start + 2, a + 1, 2):
            prev = self.s * (b - 1) * prev + self.s * self.G(b - 1)
            self._F[b] = prev
        return self._F[a]

    def component1(self, order: int) -> Fraction:
        if order % 2:
            return Fraction(0)
        return sum((c * self.gauss(order + m) for m, c in enumerate(self.squares.coeffs)),
                   Fraction(0))

    def component2(self, order: int) -> Fraction:
        if order % 2:
            return Fraction(0)
        acc = Fraction(0)
        for j, c in enumerate(self.c_high.coeffs):
            if c:
                acc += c * self.F(order + j)
        return acc * self.norm2

    def sigma(self, order: int) -> Fraction:
        """Rational part of int x^order C_{N-1}^2 exp(-x^2/s)/sqrt(2 pi) times 2/(s (N-2)!)."""
        if order % 2:
            return Fraction(0)
        sq = self.c_high * self.c_high
        acc = sum((c * self.gauss(order + m) for m, c in enumerate(sq.coeffs)), Fraction(0))
        return acc * 2 * self.norm2

    def rho(self, order: int) -> Fraction:
        """Rational part of int x^order C_{N-2} C_{N-1} exp(-x^2/s)/sqrt(2 pi) times 2/(s (N-2)!)."""
        if order % 2 == 0:
            return Fraction(0)
        pr = self.c_low * self.c_high
        acc = sum((c * self.gauss(order + m) for m, c in enumerate(pr.coeffs)), Fraction(0))
        return acc * 2 * self.norm2


@lru_cache(maxsize=64)
def _engine(params: ModelParams) -> _ExactEngine:
    return _ExactEngine(params)


def _require_exact(params: ModelParams) -> None:
    if not isinstance(params.tau, Fraction):
        raise TypeError("exact moments need a rational tau; use quad_moment instead")


def exact_moment(params: ModelParams, p: int) -> SurdValue:
    """Exact M_p = int x^p R_N(x) dx as a SurdValue (odd p gives 0)."""
    _require_exact(params)
    if p < 0:
        raise ValueError("moment order must be >= 0")
    eng = _engine(params)
    return SurdValue(eng.component1(p) + eng.component2(p), params.moment_radicand)


def exact_moment_components(params: ModelParams, p: int) -> tuple[SurdValue, SurdValue]:
    """Moments of R^(1) and R^(2) separately (their sum is exact_moment)."""
    _require_exact(params)
    eng = _engine(params)
    r = params.moment_radicand
    return SurdValue(eng.component1(p), r), SurdValue(eng.component2(p), r)


class MomentTable:
    """Exact even moments M_0, M_2, ..., M_{2P} sharing one radicand.

    ``values[i]`` is M_{2i}; ``at(order)`` accepts any order and returns the
    exact zero for odd orders.
    """

    def __init__(self, params: ModelParams | None, values: Sequence[SurdValue], label: str = "M"):
        self.params = params
        self.values = tuple(values)
        self.label = label
        radicands = {v.radicand for v in self.values if not v.is_zero()}
        if len(radicands) > 1:
            raise ValueError(f"moment table mixes radicands {sorted(radicands)}")
        self.radicand = radicands.pop() if radicands else Fraction(1)

    @property
    def P(self) -> int:
        return len(self.values) - 1

    @property
    def max_order(self) -> int:
        return 2 * self.P

    def at(self, order: int) -> SurdValue:
        if order < 0:
            raise IndexError("negative moment order")
        if order % 2:
            return SurdValue(0)
        if order // 2 >= len(self.values):
            raise IndexError(f"table {self.label} covers orders <= {self.max_order}, asked {order}")
        return self.values[order // 2]

    def rational_parts(self, upto: int) -> list[Fraction]:
        """Coefficients on the common radicand for orders 0..upto (odd ones zero)."""
        if upto > self.max_order + 1:
            raise IndexError(f"table {self.label} covers orders <= {self.max_order}, need {upto}")
        return [self.at(j).coeff if j <= self.max_order else Fraction(0) for j in range(upto + 1)]

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        return f"MomentTable({self.label}, {self.params}, P={self.P})"


def _build(params: ModelParams, P: int, which: str, threads: int = 1) -> MomentTable:
    _require_exact(params)
    eng = _engine(params)
    fn = {"total": lambda o: eng.component1(o) + eng.component2(o),
          "u": eng.component1, "v": eng.component2, "sigma": eng.sigma}[which]
    orders = [2 * i for i in range(P + 1)]
    # warm the shared recursions once, then the per-order sums are independent
    fn(orders[-1])
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(fn, orders))
    else:
        parts = [fn(o) for o in orders]
    radicand = params.moment_radicand
    if which == "sigma":
        if params.tau == 0:
            raise ValueError("the sigma prefactor sqrt(2/tau) is undefined at tau = 0")
        radicand = radicand * 2 / params.tau
    return MomentTable(params, [SurdValue(q, radicand) for q in parts], which)


def moment_table(params: ModelParams, P: int, threads: int = 1) -> MomentTable:
    """Exact M_0..M_{2P} of the full density."""
    return _build(params, P, "total", threads)


def component_tables(params: ModelParams, P: int) -> tuple[MomentTable, MomentTable]:
    """Tables for u (first density component) and v (second component)."""
    return _build(params, P, "u"), _build(params, P, "v")


def table_for_order(params: ModelParams, J: int, slack: int = 4) -> MomentTable:
    """Table long enough for series checks through t^J, over-provisioned by ``slack``."""
    return moment_table(params, (J + slack) // 2 + 4)


def aux_moments_sigma(params: ModelParams, P: int) -> MomentTable:
    """Even moments of sigma(t) = 2/(s (N-2)!) sqrt(2/tau) int e^{tx} C_{N-1}^2 e^{-x^2/s} dx/sqrt(2 pi)."""
    return _build(params, P, "sigma")


def aux_series_rho(params: ModelParams, J: int) -> list[SurdValue]:
    """EGF coefficients rho_j = int x^j rho-integrand for j = 0..J (odd j only nonzero)."""
    _require_exact(params)
    eng = _engine(params)
    r = params.moment_radicand
    return [SurdValue(eng.rho(j), r) for j in range(J + 1)]


# ---------------------------------------------------------------------------
# numerical oracles
# ---------------------------------------------------------------------------

def quad_moment(params: ModelParams, p: int, tol: float = 1e-12) -> float:
    """int x^p R_N(x) dx by adaptive Gauss-Legendre quadrature, ``tol`` relative."""
    from .density import DensityInstance
    from .quadrature import adaptive_gauss_legendre

    if tol <= 0:
        raise ValueError("tol must be positive")
    inst = DensityInstance(params)
    s = float(params.s)
    half = math.sqrt(2 * s * (params.n + p * math.log(params.n + 2) + 40))
    if p % 2:
        return 0.0
    # even integrand: integrate the right half and double
    val, err = adaptive_gauss_legendre(lambda x: x ** p * inst.total(x), 0.0, half,
                                      tol=1e-300, rtol=tol / 2)
    return 2 * val


class InsufficientTable(ValueError):
    def __init__(self, needed_P: int, msg: str):
        super().__init__(msg)
        self.needed_P = needed_P


class MgfSeries:
    """M(t) = sum_j M_{2j} t^{2j}/(2j)! with a certified truncation.

    The tail uses M_{2j} <= M_0 (2j-1)!! c^j, c = 2(1+tau)(N+2); the table is
    extended on demand up to ``max_P``.
    """

    def __init__(self, params: ModelParams, which: str = "total", P: int = 40, max_P: int = 400):
        self.params = params
        self.which = which
        self.max_P = max_P
        self._floats: list[float] = []
        self._extend(P)

    def _extend(self, P: int) -> None:
        eng = _engine(self.params)
        fn = {"total": lambda o: eng.component1(o) + eng.component2(o),
              "u": eng.component1, "v": eng.component2}[self.which]
        root = math.sqrt(float(self.params.moment_radicand))
        for j in range(len(self._floats), P + 1):
            self._floats.append(float(fn(2 * j)) * root)

    @property
    def table(self) -> MomentTable:
        return _build(self.params, len(self._floats) - 1, self.which)

    def _tail_bound(self, t: float, P: int) -> float:
        # term ratio of M0 (2j-1)!! c^j t^{2j}/(2j)! = M0 (c t^2/2)^j / j!
        c = 2 * float(self.params.s) * (self.params.n + 2)
        x = c * t * t / 2
        m0 = abs(self._floats[0])
        term = m0 * math.exp((P + 1) * math.log(x) - math.lgamma(P + 2)) if x > 0 else 0.0
        ratio = x / (P + 2)
        if ratio >= 1:
            return math.inf
        return term / (1 - ratio)

    def required_P(self, t: float, tol: float) -> int:
        P = 1
        while self._tail_bound(t, P) > tol * max(self._floats[0], 1e-300):
            P += 1
        return P

    def __call__(self, t: float, tol: float = 1e-12) -> float:
        return mgf(self, t, tol)


def mgf(series: MgfSeries, t: float, tol: float = 1e-12) -> float:
    """Evaluate the series at t; ``tol`` is relative to M_0 (which bounds M(t) below)."""
    if t == 0:
        return series._floats[0]
    P = series.required_P(t, tol)
    if P > series.max_P:
        raise InsufficientTable(P, f"need P={P} moments for t={t}, limit {series.max_P}")
    series._extend(P)
    terms = [series._floats[j] * math.exp(2 * j * math.log(abs(t)) - math.lgamma(2 * j + 1))
             for j in range(1, P + 1)]
    return math.fsum([series._floats[0]] + terms)


def mgf_quadrature(params: ModelParams, t: float, tol: float = 1e-13) -> float:
    """int e^{tx} R_N(x) dx by adaptive quadrature (independent oracle), ``tol`` relative."""
    from .density import DensityInstance
    from .quadrature import adaptive_gauss_legendre

    inst = DensityInstance(params)
    s = float(params.s)
    half = math.sqrt(2 * s * (params.n + 40)) + s * abs(t)
    val, _ = adaptive_gauss_legendre(lambda x: np.exp(t * x) * inst.total(x), -half, half,
                                    tol=1e-300, rtol=tol)
    return val


def mgf_u_discrete(params: ModelParams, t: float) -> float:
    """u(t) from its finite Hermite-sum representation.

    For tau < 1 the half-integer powers of (tau-1) are taken on the principal
    branch and combined in complex arithmetic; the imaginary part must cancel.
    H_{2k+1}(z)/t is evaluated as (H_{2k+1}(z)/z) (z/t), removing the t = 0
    singularity.  tau = 1 uses the real limit of the same sum.
    """
    n = params.n
    tau = float(params.tau)
    s = 1.0 + tau
    pref = math.sqrt(2 / s) * math.exp(t * t * s / 4)
    if params.tau == 1:
        total = sum(math.comb(n - 1, k + 1) / math.factorial(k) * t ** (2 * k) for k in range(n - 1))
        return pref * total
    root = 1j * math.sqrt(1 - tau)  # sqrt(tau - 1)
    z_over_t = s / (2 * root)
    z = z_over_t * t
    total = 0j
    scale = 0.0
    for k in range(n - 1):
        weight = math.comb(n - 1, k + 1) / math.factorial(k) * tau ** (n - k - 2)
        if weight == 0:
            continue
        h = hermite(2 * k + 1).coeffs  # odd polynomial
        hz = sum(complex(float(c)) * z ** (m - 1) for m, c in enumerate(h) if c)
        term = weight * (root / 2) ** (2 * k + 1) * hz * z_over_t
        total += term
        scale += abs(term)
    if abs(total.imag) > 1e-12 * max(scale, 1.0):
        raise ArithmeticError(f"imaginary residual {total.imag} in discrete u representation")
    return pref * total.real
