"""Recurrences and differential identities, verified as exact series identities.

A function is handled through its exponential-generating sequence
f(t) = sum_j f_j t^j / j!, so f^{(k)} has sequence f_{j+k}.  A linear
operator sum_k P_k(t) d^k/dt^k applied to f has power-series coefficients

    r_j = sum_k sum_m P_k[m] f_{j-m+k} / (j-m)!,

and an identity holds when every r_j is exactly zero.  Since all sequences
of one ensemble are rational multiples of the same surd, the checks run on
the rational parts.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import Poly, SurdValue, catalan, poly_divide_exact, poly_divmod
from .coeffs import base_polys, coeff_set, recurrence_coeff
from .moments import (MomentTable, aux_moments_sigma, component_tables, exact_moment,
                      moment_table)
from .params import ModelParams

Operator = Sequence[Poly]   # P_0, P_1, ..., P_K (coefficient of the k-th derivative)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class VerificationReport:
    identity: str
    params: dict
    status: str = "ok"
    first_defect: dict | None = None
    checked: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def fail(self, **defect) -> None:
        if self.first_defect is None:
            self.first_defect = defect
        self.status = "defect"

    def to_json(self) -> dict:
        return {"identity": self.identity, "params": self.params, "status": self.status,
                "first_defect": self.first_defect, "checked": self.checked, "notes": self.notes}


def _pjson(params: ModelParams | None, **extra) -> dict:
    out = {} if params is None else {"n": params.n, "tau": f"{params.tau.numerator}/{params.tau.denominator}"}
    out.update(extra)
    return out


# ---------------------------------------------------------------------------
# series machinery
# ---------------------------------------------------------------------------

class TableTooShort(IndexError):
    def __init__(self, needed: int, have: int):
        super().__init__(f"sequence covers orders <= {have}, need {needed}")
        self.needed = needed
        self.have = have


def operator_order(op: Operator) -> int:
    return len(op) - 1


def apply_operator(op: Operator, f: Sequence[Fraction], J: int) -> list[Fraction]:
    """Power-series coefficients r_0..r_J of sum_k P_k(t) f^{(k)}(t)."""
    need = J + operator_order(op)
    if len(f) <= need:
        raise TableTooShort(need, len(f) - 1)
    inv_fact = [Fraction(1, math.factorial(i)) for i in range(J + 1)]
    out = [Fraction(0)] * (J + 1)
    for k, P in enumerate(op):
        for m, c in enumerate(P.coeffs):
            if c == 0:
                continue
            for j in range(m, J + 1):
                v = f[j - m + k]
                if v:
                    out[j] += c * v * inv_fact[j - m]
    return out


def power_to_egf(r: Sequence[Fraction]) -> list[Fraction]:
    return [c * math.factorial(j) for j, c in enumerate(r)]


def series_residual(terms: Sequence[tuple[Operator, Sequence[Fraction]]], J: int) -> list[Fraction]:
    """Coefficients of sum over (operator, sequence) pairs, through t^J."""
    total = [Fraction(0)] * (J + 1)
    for op, f in terms:
        for j, v in enumerate(apply_operator(op, f, J)):
            total[j] += v
    return total


@dataclass
class SeriesResidual:
    coeffs: list[SurdValue]

    @classmethod
    def from_rational(cls, r: Sequence[Fraction], radicand) -> "SeriesResidual":
        return cls([SurdValue(c, radicand) for c in r])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def first_nonzero(self) -> int | None:
        for j, c in enumerate(self.coeffs):
            if not c.is_zero():
                return j
        return None


def _residual_report(name: str, params, r: Sequence[Fraction], radicand) -> VerificationReport:
    rep = VerificationReport(name, _pjson(params, order=len(r) - 1))
    res = SeriesResidual.from_rational(r, radicand)
    rep.checked = len(r)
    j = res.first_nonzero()
    if j is not None:
        rep.fail(order=j, value=res.coeffs[j].to_json())
    return rep


def _seq(table: MomentTable, upto: int) -> list[Fraction]:
    if upto > table.max_order:
        raise TableTooShort(upto, table.max_order)
    return table.rational_parts(upto)


def _lin(*terms) -> Poly:
    out = Poly([])
    for coeff, power in terms:
        out = out + Poly.monomial(power, coeff)
    return out


def _half_p(J: int, order: int) -> int:
    return (J + order) // 2 + 1


# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------

def seventh_order_operator(params: ModelParams) -> list[Poly]:
    return list(coeff_set(params).A)


def u_operator(params: ModelParams) -> list[Poly]:
    """Third-order equation for u, multiplied through by t^2."""
    N, tau = params.n, params.tau
    op, om, sq = 1 + tau, 1 - tau, 1 - tau * tau
    a3 = _lin((om / 2, 2))
    a2 = _lin((-(1 - 4 * tau + tau ** 2) * op / 4, 3), (om, 1))
    a1 = _lin((-op * 3 * tau * sq / 8, 4),
              (-op * (sq * (N - 1) / 2 + (1 - 5 * tau + tau ** 2) / 2), 2),
              (-om, 0))
    a0 = _lin((-tau ** 2 * op / 8 * op ** 2, 5),
              (-(tau * op * (N - 1) / 2 + 5 * tau * om / 8) * op ** 2, 3))
    return [a0, a1, a2, a3]


def v_from_m_operator(params: ModelParams) -> list[Poly]:
    """V = this operator applied to M (also the left side of the mixed identity)."""
    N, tau = params.n, params.tau
    op, om, sq = 1 + tau, 1 - tau, 1 - tau * tau
    c3 = _lin((om / 2, 0))
    c2 = _lin((-op * (tau ** 2 - 3 * tau + 1) / 2, 1))
    c1 = _lin((-sq / 2 * ((N - 1) * op + 2 - tau), 0), (-sq / 2 * 2 * tau * op, 2))
    f = -tau * op ** 2 / 2
    c0 = _lin((f * ((N - 1) * op + 3 - 2 * tau), 1), (f * tau * op, 3))
    return [c0, c1, c2, c3]


def v_from_u_operator(params: ModelParams) -> list[Poly]:
    """Right side of the mixed identity, applied to u."""
    N, tau = params.n, params.tau
    op, om, sq = 1 + tau, 1 - tau, 1 - tau * tau
    c3 = _lin((om / 2, 0))
    c2 = _lin((-op * (1 - 4 * tau + tau ** 2) / 4, 1))
    c1 = _lin((-op * 3 * tau * sq / 8, 2), (-op * (sq * (N - 1) / 2 + om / 2), 0))
    f = -tau * op ** 2
    c0 = _lin((f * tau * op / 8, 3), (f * (op * (N - 1) / 2 + (5 + tau) / 8), 1))
    return [c0, c1, c2, c3]


def u_link_operator(params: ModelParams) -> list[Poly]:
    """4(1-tau) t u'' + E(t) u' + 3 tau^2 (1+tau)^2 t^3 u, which equals -4 t^2 V."""
    tau = params.tau
    om = 1 - tau
    return [_lin((3 * tau ** 2 * (1 + tau) ** 2, 3)),
            _lin((-4 * om, 0), (2 * tau * (1 + tau) * (4 - tau), 2)),
            _lin((4 * om, 1))]


def sigma_operator(params: ModelParams) -> list[Poly]:
    N, tau = params.n, params.tau
    op, sq = 1 + tau, 1 - tau * tau
    s3 = _lin((4 * (1 - tau) / op, 0))
    s2 = _lin((-2 * (1 - 4 * tau + tau ** 2), 1))
    s1 = _lin((-3 * tau * sq, 2), (-4 * ((N - 1) * sq + 1 - 2 * tau), 0))
    s0 = _lin((-tau ** 2 * op * op, 3), (-(4 * (N - 1) * tau * op + tau * (5 - tau)) * op, 1))
    return [s0, s1, s2, s3]


def large_n_ginoe_operator() -> list[Poly]:
    """Leading large-N operator for the rescaled GinOE MGF (orders 1..7)."""
    return [
        Poly([]),
        _lin((120, 0), (6, 2)),
        _lin((-120, 1), (-6, 3)),
        _lin((-120, 0), (36, 2), (2, 4)),
        _lin((120, 1), (4, 3)),
        _lin((-42, 2), (-4, 4)),
        _lin((2, 3)),
        _lin((2, 4)),
    ]


def ginoe_endpoint_polys(N: int) -> list[Poly]:
    """Coefficients C_0..C_7 of the GinOE seventh-order equation (C_0 = 0)."""
    return [
        Poly([]),
        _lin((120 * (N + 1), 0), (6 * (N + 1) ** 2, 2)),
        _lin((-120 * (N + 1), 1), (-6 * (N + 1) ** 2, 3)),
        _lin((-120, 0), (36 * N, 2), ((N - 1) * (2 * N + 3), 4)),
        _lin((120, 1), (4 * (N + 10), 3), (3 * N + 5, 5)),
        _lin((-42, 2), (-(4 * N + 13), 4), (1, 6)),
        _lin((2, 3), (-3, 5)),
        _lin((2, 4)),
    ]


def goe_endpoint_polys(N: int) -> list[Poly]:
    """Coefficients C_0..C_4 of the GOE fourth-order equation."""
    return [
        _lin((16 * N * N - 16 * N - 44, 1), (20 * N - 10, 3), (4, 5)),
        _lin((-20 * N + 10, 0), (-36, 2)),
        _lin((-(8 * N - 4), 1), (-5, 3)),
        _lin((5, 0)),
        _lin((1, 1)),
    ]


# ---------------------------------------------------------------------------
# identity checks
# ---------------------------------------------------------------------------

def ode_residual(op: Operator, table: MomentTable, J: int) -> SeriesResidual:
    """Residual of sum_k op[k] f^{(k)} for f given by a moment table."""
    f = _seq(table, J + operator_order(op))
    return SeriesResidual.from_rational(apply_operator(op, f, J), table.radicand)


def verify_ode7(params: ModelParams, J: int = 30, table: MomentTable | None = None) -> VerificationReport:
    op = seventh_order_operator(params)
    table = table or moment_table(params, _half_p(J, 7))
    r = apply_operator(op, _seq(table, J + 7), J)
    return _residual_report("ode7", params, r, table.radicand)


def verify_u_ode(params: ModelParams, J: int = 25) -> VerificationReport:
    u_tab, _ = component_tables(params, _half_p(J, 3))
    r = apply_operator(u_operator(params), _seq(u_tab, J + 3), J)
    return _residual_report("ode3", params, r, u_tab.radicand)


def _mv_sequences(params: ModelParams, order: int):
    P = _half_p(order, 3) + 1
    total = moment_table(params, P)
    u_tab, _ = component_tables(params, P)
    return total, u_tab


def v_sequence(params: ModelParams, upto: int, total: MomentTable | None = None) -> list[Fraction]:
    """EGF sequence V_0..V_upto of V, built from the moment table."""
    total = total or moment_table(params, _half_p(upto, 3))
    r = apply_operator(v_from_m_operator(params), _seq(total, upto + 3), upto)
    return power_to_egf(r)


def verify_mixed(params: ModelParams, J: int = 25) -> VerificationReport:
    total, u_tab = _mv_sequences(params, J)
    neg = [-p for p in v_from_u_operator(params)]
    r = series_residual([(v_from_m_operator(params), _seq(total, J + 3)),
                         (neg, _seq(u_tab, J + 3))], J)
    return _residual_report("mixed", params, r, total.radicand)


def verify_u_link(params: ModelParams, J: int = 25) -> VerificationReport:
    total, u_tab = _mv_sequences(params, J)
    V = v_sequence(params, J, total)
    four_t2 = [Poly.monomial(2, 4)]
    r = series_residual([(u_link_operator(params), _seq(u_tab, J + 2)), (four_t2, V)], J)
    return _residual_report("ulink", params, r, total.radicand)


def verify_v_ode(params: ModelParams, J: int = 25) -> VerificationReport:
    V = v_sequence(params, J + 4)
    B = coeff_set(params).B
    r = apply_operator(list(B), V, J)
    return _residual_report("odeV", params, r, params.moment_radicand)


def verify_u_V(params: ModelParams, J: int = 25) -> VerificationReport:
    """delta u = a V + b V' + c V'' with delta = -N tau^2 (1+tau)^5 d.

    At tau = 0 delta vanishes and the check becomes a V + b V' + c V'' = 0.
    """
    a, b, c, d = base_polys(params)
    delta = d * (-params.n * params.tau ** 2 * (1 + params.tau) ** 5)
    total, u_tab = _mv_sequences(params, J + 2)
    V = v_sequence(params, J + 2, total)
    r = series_residual([([a, b, c], V), ([-delta], _seq(u_tab, J))], J)
    rep = _residual_report("uv", params, r, total.radicand)
    if params.tau == 0:
        rep.notes.append("tau=0: delta is identically zero; checked the degenerate form aV+bV'+cV''=0")
    return rep


def verify_sigma(params: ModelParams, J: int = 25) -> VerificationReport:
    tab = aux_moments_sigma(params, _half_p(J, 3))
    r = apply_operator(sigma_operator(params), _seq(tab, J + 3), J)
    return _residual_report("sigma", params, r, tab.radicand)


def large_n_ginoe_sequences(J: int) -> dict[str, list[Fraction]]:
    """EGF sequences of sinh(t)/t and cosh(t)/2 through order J."""
    sinhc = [Fraction(1, j + 1) if j % 2 == 0 else Fraction(0) for j in range(J + 1)]
    cosh = [Fraction(1, 2) if j % 2 == 0 else Fraction(0) for j in range(J + 1)]
    return {"sinh(t)/t": sinhc, "cosh(t)/2": cosh}


def verify_large_n_ginoe(J: int = 30) -> VerificationReport:
    """The leading operator annihilates both limiting MGFs.

    The constant sqrt(2/pi) in front of sinh(t)/t is dropped: the operator
    is linear, and keeping it would only force a surd coefficient.
    """
    op = large_n_ginoe_operator()
    rep = VerificationReport("d0", {"order": J})
    for name, f in large_n_ginoe_sequences(J + 7).items():
        r = apply_operator(op, f, J)
        rep.checked += len(r)
        for j, c in enumerate(r):
            if c != 0:
                rep.fail(function=name, order=j, value=str(c))
                break
    return rep


# ---------------------------------------------------------------------------
# eleven-term recurrence
# ---------------------------------------------------------------------------

def recurrence_terms(params: ModelParams, p: int) -> tuple[Fraction, list[Fraction]]:
    """(left factor 2(2p+1)(1-tau)^6, [coefficient l=1..10])."""
    cs = coeff_set(params)
    left = 2 * (2 * p + 1) * (1 - params.tau) ** 6
    return left, [recurrence_coeff(cs, p, l) for l in range(1, 11)]


def verify_elliptic_recurrence(params: ModelParams, table: MomentTable | None = None,
                               p_min: int = 10, p_max: int = 15) -> VerificationReport:
    if p_min < 10 or p_max < p_min:
        raise ValueError("need p_max >= p_min >= 10")
    table = table or moment_table(params, p_max)
    if table.P < p_max:
        raise TableTooShort(2 * p_max, table.max_order)
    rep = VerificationReport("eleven", _pjson(params, p_min=p_min, p_max=p_max))
    for p in range(p_min, p_max + 1):
        left, coeffs = recurrence_terms(params, p)
        lhs = table.at(2 * p) * left
        parts = [table.at(2 * p - 2 * l) * c for l, c in enumerate(coeffs, start=1)]
        rhs = sum(parts, SurdValue(0))
        rep.checked += 1
        if lhs != rhs:
            rep.fail(p=p, lhs=lhs.to_json(), rhs=rhs.to_json(), defect=(lhs - rhs).to_json(),
                     terms={str(l): v.to_json() for l, v in enumerate(parts, start=1)})
    return rep


def extend_by_recurrence(params: ModelParams, seeds: Sequence[SurdValue], p_max: int) -> list[SurdValue]:
    """Generate M_{2p} for p up to p_max from the first ten seeds (tau < 1)."""
    if params.tau == 1:
        raise ValueError("the left side vanishes at tau = 1; the relation cannot be solved forward")
    out = list(seeds)
    for p in range(len(out), p_max + 1):
        left, coeffs = recurrence_terms(params, p)
        rhs = sum((out[p - l] * c for l, c in enumerate(coeffs, start=1)), SurdValue(0))
        out.append(rhs / left)
    return out


def goe_reduced_proportionality(params: ModelParams, p: int) -> Fraction | None:
    """Ratio between the tau=1 reduced relation and the GOE five-term relation.

    Returns the common ratio when coefficient-proportional, else None.
    """
    if params.tau != 1:
        raise ValueError("tau must be 1")
    _, coeffs = recurrence_terms(params, p)
    q = p - 6
    N = params.n
    goe = [Fraction(q + 1),
           Fraction(-(4 * q - 1) * (2 * N - 1)),
           Fraction(-(2 * q - 3) * (10 * q * q - 9 * q - 8 * N * N + 8 * N)),
           Fraction(5 * (2 * q - 3) * (2 * q - 4) * (2 * q - 5) * (2 * N - 1)),
           Fraction(2 * (2 * q - 3) * (2 * q - 4) * (2 * q - 5) * (2 * q - 6) * (2 * q - 7))]
    ours = coeffs[5:]
    ratio = None
    for x, y in zip(ours, goe):
        if y == 0:
            if x != 0:
                return None
            continue
        r = x / y
        if ratio is None:
            ratio = r
        elif r != ratio:
            return None
    return ratio


# ---------------------------------------------------------------------------
# classical recursions in N
# ---------------------------------------------------------------------------

NVAR = Poly([0, 1], "N")


def _npoly(coeffs) -> Poly:
    return Poly(coeffs, "N")


class NPolyMomentTable:
    """Moments M_0, M_2, ... as exact polynomials in the matrix size N."""

    def __init__(self, name: str, values: Sequence[Poly]):
        self.name = name
        self.values = tuple(values)

    def at(self, order: int) -> Poly:
        if order % 2:
            return _npoly([])
        return self.values[order // 2]

    def evaluate(self, order: int, N: int) -> Fraction:
        return self.at(order)(Fraction(N))

    def __len__(self):
        return len(self.values)


def run_gue(p_max: int) -> NPolyMomentTable:
    """(p+1) M_{2p} = (4p-2) N M_{2p-2} + (p-1)(2p-1)(2p-3) M_{2p-4}."""
    if p_max < 2:
        raise ValueError("p_max must be >= 2")
    M = [_npoly([0, 1]), _npoly([0, 0, 1])]
    for p in range(2, p_max + 1):
        nxt = (NVAR * M[p - 1] * (4 * p - 2) + M[p - 2] * ((p - 1) * (2 * p - 1) * (2 * p - 3))) \
            * Fraction(1, p + 1)
        M.append(nxt)
    return NPolyMomentTable("GUE", M)


# M_4 carries 5N (not N): see the module tests for the independent checks.
GOE_SEEDS = (
    _npoly([0, 1]),
    _npoly([0, 1, 1]),
    _npoly([0, 5, 5, 2]),
    _npoly([0, 41, 52, 22, 5]),
)


def run_goe(p_max: int) -> NPolyMomentTable:
    """Five-term recursion for the GOE moments, seeded with M_0..M_6."""
    if p_max < 4:
        raise ValueError("p_max must be >= 4")
    N = NVAR
    M = list(GOE_SEEDS)
    for p in range(4, p_max + 1):
        rhs = (M[p - 1] * ((4 * p - 1) * (2 * N - 1))
               + M[p - 2] * ((2 * p - 3) * (10 * p * p - 9 * p - 8 * N * N + 8 * N))
               - M[p - 3] * (5 * (2 * p - 3) * (2 * p - 4) * (2 * p - 5) * (2 * N - 1))
               - M[p - 4] * (2 * (2 * p - 3) * (2 * p - 4) * (2 * p - 5) * (2 * p - 6) * (2 * p - 7)))
        M.append(rhs * Fraction(1, p + 1))
    return NPolyMomentTable("GOE", M)


def run_ginoe(N: int, p_max: int) -> list[SurdValue]:
    """2(2p+1) M_{2p} = (2p-1)(6p+4N-5) M_{2p-2} - (2p-3)(2p+N-4)(2p+2N-3) M_{2p-4}."""
    if p_max < 2:
        raise ValueError("p_max must be >= 2")
    params = ModelParams(N, Fraction(0))
    M = [exact_moment(params, 0), exact_moment(params, 2)]
    for p in range(2, p_max + 1):
        rhs = (M[p - 1] * ((2 * p - 1) * (6 * p + 4 * N - 5))
               - M[p - 2] * ((2 * p - 3) * (2 * p + N - 4) * (2 * p + 2 * N - 3)))
        M.append(rhs / (2 * (2 * p + 1)))
    return M


def verify_mixed_goe_gue(p_max: int) -> VerificationReport:
    gue, goe = run_gue(p_max), run_goe(p_max)
    N = NVAR
    rep = VerificationReport("mixed_goe_gue", {"p_max": p_max})
    for p in range(2, p_max + 1):
        rhs = (goe.at(2 * p - 2) * (4 * N - 2) + goe.at(2 * p - 4) * (4 * (2 * p - 2) * (2 * p - 3))
               + gue.at(2 * p) - gue.at(2 * p - 2) * (4 * N - 3)
               - gue.at(2 * p - 4) * ((2 * p - 2) * (2 * p - 3)))
        rep.checked += 1
        if rhs != goe.at(2 * p):
            rep.fail(p=p, defect=(goe.at(2 * p) - rhs).to_json())
    return rep


def genus_coeffs(table: NPolyMomentTable, p: int) -> list[int]:
    """c(g; p) for g = 0, 1, ... from the N^{p+1-2g} coefficients."""
    P = table.at(2 * p)
    out = []
    for k, c in enumerate(P.coeffs):
        parity_ok = (p + 1 - k) % 2 == 0
        if c != 0 and not parity_ok:
            raise ArithmeticError(f"stray power N^{k} in M_{2 * p}")
    for g in range((p + 1) // 2 + 1):
        k = p + 1 - 2 * g
        if k < 1:
            break
        c = P[k]
        if c.denominator != 1 or c <= 0:
            raise ArithmeticError(f"c({g};{p}) = {c} is not a positive integer")
        out.append(int(c))
    return out


def verify_gue(p_max: int) -> VerificationReport:
    tab = run_gue(p_max)
    rep = VerificationReport("gue", {"p_max": p_max})
    for p in range(p_max + 1):
        rep.checked += 1
        lead = tab.at(2 * p)[p + 1]
        if lead != catalan(p):
            rep.fail(p=p, leading=str(lead), catalan=catalan(p))
        if p >= 1:
            genus_coeffs(tab, p)
    return rep


def verify_goe(p_max: int, sizes: Sequence[int] = (2, 4)) -> VerificationReport:
    tab = run_goe(p_max)
    rep = VerificationReport("goe", {"p_max": p_max, "sizes": list(sizes)})
    for N in sizes:
        params = ModelParams(N, Fraction(1))
        for p in range(p_max + 1):
            rep.checked += 1
            exact = exact_moment(params, 2 * p)
            val = tab.evaluate(2 * p, N)
            if exact != SurdValue(val):
                rep.fail(n=N, p=p, recursion=str(val), exact=exact.to_json())
    return rep


def verify_ginoe(N: int, p_max: int) -> VerificationReport:
    gen = run_ginoe(N, p_max)
    params = ModelParams(N, Fraction(0))
    rep = VerificationReport("ginoe", _pjson(params, p_max=p_max))
    for p, v in enumerate(gen):
        rep.checked += 1
        if v != exact_moment(params, 2 * p):
            rep.fail(p=p, recursion=v.to_json(), exact=exact_moment(params, 2 * p).to_json())
    return rep


# ---------------------------------------------------------------------------
# proportionality to the endpoint equations
# ---------------------------------------------------------------------------

def proportionality_factor(A: Sequence[Poly], C: Sequence[Poly]) -> Poly | None:
    """Single polynomial lam with A_k = lam C_k for every k, or None.

    Indices where C_k = 0 require A_k = 0.
    """
    lam = None
    for a, c in zip(A, C):
        if c.is_zero():
            if not a.is_zero():
                return None
            continue
        q, r = poly_divmod(a, c)
        if not r.is_zero():
            return None
        if lam is None:
            lam = q
        elif q != lam:
            return None
    return lam


def endpoint_factor(params: ModelParams) -> Poly | None:
    """lam with A_k = lam C_k against the tau=0 or tau=1 specialisation."""
    A = coeff_set(params).A
    if params.tau == 0:
        return proportionality_factor(A, ginoe_endpoint_polys(params.n))
    if params.tau == 1:
        C = goe_endpoint_polys(params.n) + [Poly([])] * 3
        return proportionality_factor(A, C)
    raise ValueError("only defined at tau = 0 or 1")


IDENTITIES: dict[str, Callable] = {
    "ode7": verify_ode7,
    "ode3": verify_u_ode,
    "odeV": verify_v_ode,
    "mixed": verify_mixed,
    "uv": verify_u_V,
    "sigma": verify_sigma,
    "ulink": verify_u_link,
}
