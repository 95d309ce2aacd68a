"""Polynomial coefficient stack of the seventh-order MGF equation.

For a concrete (N, tau) this builds the base polynomials a, b, c, d, the
fourth-order V-equation coefficients B_0..B_4, the seventh-order coefficients
A_0..A_7 and the recurrence coefficients derived from them.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import Poly, pochhammer
from .params import ModelParams

T = Poly([0, 1])
ONE = Poly([1])
ZERO = Poly([])


def _c(q) -> Poly:
    return Poly([q])


def base_polys(params: ModelParams) -> tuple[Poly, Poly, Poly, Poly]:
    """The four base polynomials (a, b, c, d) in t."""
    N, tau = params.n, params.tau
    om = 1 - tau          # 1 - tau
    op = 1 + tau          # 1 + tau
    sq = 1 - tau * tau    # 1 - tau^2
    k = 1 + 6 * tau + 2 * sq * N
    a = Poly([
        32 * om ** 2 * k,
        0,
        8 * sq * (1 - 3 * tau - 30 * tau ** 2 + sq * (3 + 4 * tau + 4 * tau ** 2) * N + 2 * sq ** 2 * N ** 2),
        0,
        4 * tau * op ** 2 * (1 + 8 * tau - 5 * tau * sq * N),
        0,
        -2 * tau ** 2 * op ** 3 * (1 + 2 * tau),
    ])
    b = Poly([
        0,
        -32 * om ** 2 * k,
        0,
        4 * sq * ((1 - 2 * tau) * (1 + 7 * tau) + 2 * om ** 3 * op * N),
        0,
        -2 * tau * op ** 2 * (1 - tau - 6 * tau ** 2),
    ])
    c = Poly([0, 0, -8 * om ** 2 * k, 0, 4 * tau * sq * (1 + 2 * tau)])
    d = Poly([
        0, 0, 0,
        -2 * om * (4 + 17 * tau + 6 * tau ** 2 + 2 * N * sq),
        0,
        tau * op * (2 + tau) * (1 + 2 * tau),
    ])
    return a, b, c, d


def beta_times_t(params: ModelParams) -> list[list[Poly]]:
    """t * beta[k][j] for k = 0..4, j = 0..3.

    beta_{0,1} carries a genuine 1/t pole (E(t) a(t)/t with E(0), a(0) != 0),
    so the table is stored multiplied by t; B_k divides by t^5 instead of t^4.
    """
    N, tau = params.n, params.tau
    a, b, c, d = base_polys(params)
    D = lambda p, n=1: p.derivative(n)
    om = 1 - tau
    E = Poly([-4 * om, 0, 2 * tau * (1 + tau) * (4 - tau)])
    q = Poly([0, 0, 3 * tau ** 2 * (1 + tau) ** 2])
    f4, f8 = 4 * om, 8 * om
    tb = [[ZERO] * 4 for _ in range(5)]
    tb[4][0] = T * (f4 * c)
    tb[3][0] = T * (f4 * (b + 2 * D(c))) + E * c
    tb[3][1] = T * (-f8 * c)
    tb[2][0] = T * (f4 * (a + 2 * D(b) + D(c, 2)) + q * c) + E * (b + D(c))
    tb[2][1] = T * (-f8 * (b + D(c))) - E * c
    tb[2][2] = T * (-f4 * c)
    tb[2][3] = T * (f8 * c)
    tb[1][0] = T * (f4 * (2 * D(a) + D(b, 2)) + q * b) + E * (a + D(b))
    tb[1][1] = T * (-f8 * (a + D(b))) - E * b
    tb[1][2] = T * (-f4 * b)
    tb[1][3] = T * (f8 * b)
    tb[0][0] = (T * (f4 * D(a, 2) + q * a - (4 * N * tau ** 2 * (1 + tau) ** 5) * (T * d))
                + E * D(a))
    tb[0][1] = T * (-f8 * D(a)) - E * a
    tb[0][2] = T * (-f4 * a)
    tb[0][3] = T * (f8 * a)
    return tb


def build_B(params: ModelParams) -> tuple[Poly, ...]:
    """B_0..B_4; the division by t^5 (t^4 after undoing the t scaling) must be exact."""
    d = base_polys(params)[3]
    d1, d2 = d.derivative(), d.derivative(2)
    products = (d * d, d * d1, d * d2, d1 * d1)
    out = []
    for k, row in enumerate(beta_times_t(params)):
        num = sum((bj * pj for bj, pj in zip(row, products)), ZERO)
        q, r = num.divmod_monomial(5)
        if not r.is_zero():
            raise ArithmeticError(f"B_{k}: nonzero remainder {r!r} in division by t^4")
        out.append(q)
    return tuple(out)


def _lin(*terms) -> Poly:
    """Polynomial from (coefficient, power) pairs."""
    out = ZERO
    for coeff, power in terms:
        out = out + Poly.monomial(power, coeff)
    return out


def alpha_table(params: ModelParams) -> list[list[Poly]]:
    """alpha[k][j], k = 0..7, j = 0..4."""
    N, tau = params.n, params.tau
    op, om = 1 + tau, 1 - tau
    sq = 1 - tau * tau
    half_om = _c(om / 2)
    diag1 = _lin((-op * (tau ** 2 - 3 * tau + 1) / 2, 1))

    def quad2(shift):  # -(1+tau)/2 (2 tau (1-tau^2) t^2 + (1-tau^2) N + shift)
        return _lin((-op / 2 * (sq * N + shift), 0), (-op / 2 * 2 * tau * sq, 2))

    def cubic(shift):  # -tau (1+tau)^2/2 (tau (1+tau) t^2 + (1+tau) N + shift) t
        f = -tau * op ** 2 / 2
        return _lin((f * (op * N + shift), 1), (f * tau * op, 3))

    def quart(factor, shift):  # factor * (3 tau (1+tau) t^2 + (1+tau) N + shift)
        return _lin((factor * (op * N + shift), 0), (factor * 3 * tau * op, 2))

    al = [[ZERO] * 5 for _ in range(8)]
    al[7][4] = half_om
    al[6][4] = diag1
    al[6][3] = half_om
    al[5][4] = quad2(5 - 15 * tau + 6 * tau ** 2)
    al[5][3] = diag1
    al[5][2] = half_om
    al[4][4] = cubic(18 - 19 * tau)
    al[4][3] = quad2(4 - 12 * tau + 5 * tau ** 2)
    al[4][2] = diag1
    al[4][1] = half_om
    al[3][4] = quart(-2 * tau * op ** 2, 8 - 9 * tau)
    al[3][3] = cubic(14 - 15 * tau)
    al[3][2] = quad2(3 - 9 * tau + 4 * tau ** 2)
    al[3][1] = diag1
    al[3][0] = half_om
    al[2][4] = _lin((-18 * tau ** 2 * op ** 3, 1))
    al[2][3] = quart(-3 * tau * op ** 2 / 2, 6 - 7 * tau)
    al[2][2] = cubic(10 - 11 * tau)
    al[2][1] = quad2(2 - 6 * tau + 3 * tau ** 2)
    al[2][0] = diag1
    al[1][4] = _c(-12 * tau ** 2 * op ** 3)
    al[1][3] = _lin((-9 * tau ** 2 * op ** 3, 1))
    al[1][2] = quart(-tau * op ** 2, 4 - 5 * tau)
    al[1][1] = cubic(6 - 7 * tau)
    al[1][0] = _lin((-sq / 2 * (op * N + 1 - 2 * tau), 0), (-sq / 2 * 2 * tau * op, 2))
    al[0][3] = _c(-3 * tau ** 2 * op ** 3)
    al[0][2] = _lin((-3 * tau ** 2 * op ** 3, 1))
    al[0][1] = _lin((-tau * op ** 2 / 2 * (op * N + 2 - 3 * tau), 0),
                    (-tau * op ** 2 / 2 * 3 * tau * op, 2))
    al[0][0] = cubic(2 - 3 * tau)
    return al


def build_A(params: ModelParams, B: tuple[Poly, ...] | None = None) -> tuple[Poly, ...]:
    """A_k = sum_j alpha[k][j] B_j for k = 0..7."""
    if B is None:
        B = build_B(params)
    return tuple(sum((al * bj for al, bj in zip(row, B)), ZERO) for row in alpha_table(params))


# low end of the t-span of A_k; the high end is 17 - k
A_LOW = (7, 0, 1, 0, 1, 2, 3, 4)


@dataclass(frozen=True)
class CoeffSet:
    params: ModelParams
    base: tuple[Poly, Poly, Poly, Poly]
    B: tuple[Poly, ...]
    A: tuple[Poly, ...]

    def beta(self) -> list[list[Poly]]:
        return beta_times_t(self.params)

    def alpha(self) -> list[list[Poly]]:
        return alpha_table(self.params)


@lru_cache(maxsize=128)
def coeff_set(params: ModelParams) -> CoeffSet:
    B = build_B(params)
    return CoeffSet(params, base_polys(params), B, build_A(params, B))


def coeff_a(cs: CoeffSet, k: int, m: int) -> Fraction:
    """Coefficient of t^m in A_k (zero outside the polynomial)."""
    if not 0 <= k <= 7:
        raise ValueError("k must lie in 0..7")
    if m < 0:
        return Fraction(0)
    return cs.A[k][m]


def recurrence_denominator(params: ModelParams, p: int) -> Fraction:
    N, tau = params.n, params.tau
    sq = 1 - tau * tau
    return ((1 + 6 * tau + 2 * N * sq) * (4 + 17 * tau + 6 * tau ** 2 + 2 * N * sq) ** 2
            * 256 * (p - 4) * (p - 3) * (p - 2))


def recurrence_coeff(cs: CoeffSet, p: int, l: int) -> Fraction:
    """Coefficient of M_{2p-2l} in the eleven-term recurrence (1 <= l <= 10, p >= 5)."""
    if not 1 <= l <= 10:
        raise ValueError("l must lie in 1..10")
    if p <= 4:
        raise ValueError("the recurrence coefficient has a zero denominator for p <= 4")
    acc = Fraction(0)
    for k in range(0, min(10 - l, 7) + 1):
        m = k + 2 * l - 3
        if m < 0:
            continue
        acc += pochhammer(2 * p - k - 2 * l + 1, m) * coeff_a(cs, k, m)
    return acc / recurrence_denominator(cs.params, p)
