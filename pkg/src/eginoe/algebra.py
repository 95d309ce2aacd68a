"""Exact arithmetic: rationals, surd values q*sqrt(r), univariate polynomials.

Rationals are :class:`fractions.Fraction`.  Everything here is immutable.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

# Degree reported for the zero polynomial.
ZERO_DEGREE = -1


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and 'p/q' or decimal strings to a Fraction.

    Floats are rejected: they would silently smuggle binary rounding into
    the exact path.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rational_to_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(text: str) -> Fraction:
    return Fraction(text)


# ---------------------------------------------------------------------------
# combinatorial primitives
# ---------------------------------------------------------------------------

def double_factorial(n: int) -> int:
    if n < -1:
        raise ValueError(f"double factorial undefined for n={n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def pochhammer(a: RationalLike, n: int) -> Fraction:
    """Rising factorial a(a+1)...(a+n-1)."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    a = as_rational(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def catalan(p: int) -> int:
    if p < 0:
        raise ValueError("catalan needs p >= 0")
    return math.comb(2 * p, p) // (p + 1)


# ---------------------------------------------------------------------------
# square-free splitting
# ---------------------------------------------------------------------------

def _square_split(n: int) -> tuple[int, int]:
    """Return (s, f) with n = s**2 * f and f square-free, for n >= 1."""
    if n < 1:
        raise ValueError("need a positive integer")
    square = 1
    free = 1
    # Trial division up to the cube root leaves a cofactor with at most two
    # prime factors, so it is either square-free or a perfect square.
    d = 2
    while d * d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            square *= d ** (e // 2)
            if e % 2:
                free *= d
        d += 1 if d == 2 else 2
    r = math.isqrt(n)
    if r * r == n and n > 1:
        square *= r
    else:
        free *= n
    return square, free


class SurdValue:
    """The exact real number ``coeff * sqrt(radicand)``.

    The radicand is normalised to a square-free positive integer (rational
    radicands p/q are rewritten as sqrt(p*q)/q); zero is stored with
    radicand 1 and may be added to a surd of any radicand.
    """

    __slots__ = ("coeff", "radicand")

    def __init__(self, coeff: RationalLike = 0, radicand: RationalLike = 1):
        coeff = as_rational(coeff)
        radicand = as_rational(radicand)
        if radicand < 0:
            raise ValueError("radicand must be non-negative")
        if coeff == 0 or radicand == 0:
            coeff, radicand = Fraction(0), Fraction(1)
        else:
            num = radicand.numerator * radicand.denominator
            square, free = _square_split(num)
            coeff = coeff * Fraction(square, radicand.denominator)
            radicand = Fraction(free)
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "radicand", radicand)

    def __setattr__(self, name, value):
        raise AttributeError("SurdValue is immutable")

    @classmethod
    def rational(cls, q: RationalLike) -> "SurdValue":
        return cls(q, 1)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def _check_radicand(self, other: "SurdValue") -> Fraction:
        if self.is_zero():
            return other.radicand
        if other.is_zero() or self.radicand == other.radicand:
            return self.radicand
        raise ValueError(
            f"cannot add surds with radicands {self.radicand} and {other.radicand}")

    def __add__(self, other):
        if not isinstance(other, SurdValue):
            if isinstance(other, (int, Fraction)):
                other = SurdValue.rational(other)
            else:
                return NotImplemented
        r = self._check_radicand(other)
        return SurdValue(self.coeff + other.coeff, r)

    __radd__ = __add__

    def __neg__(self):
        return SurdValue(-self.coeff, self.radicand)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SurdValue.rational(other)
        if not isinstance(other, SurdValue):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SurdValue(self.coeff * other, self.radicand)
        if isinstance(other, SurdValue):
            return SurdValue(self.coeff * other.coeff, self.radicand * other.radicand)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("surd division by zero")
            return SurdValue(self.coeff / other, self.radicand)
        if isinstance(other, SurdValue):
            if other.is_zero():
                raise ZeroDivisionError("surd division by zero")
            # 1/(c sqrt r) = sqrt(r) / (c r)
            return self * SurdValue(1 / (other.coeff * other.radicand), other.radicand)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SurdValue.rational(other)
        if not isinstance(other, SurdValue):
            return NotImplemented
        return self.coeff == other.coeff and self.radicand == other.radicand

    def __hash__(self):
        return hash((self.coeff, self.radicand))

    def __float__(self):
        return float(self.coeff) * math.sqrt(float(self.radicand))

    def sign(self) -> int:
        return (self.coeff > 0) - (self.coeff < 0)

    def __repr__(self):
        if self.radicand == 1:
            return f"SurdValue({self.coeff})"
        return f"SurdValue({self.coeff}*sqrt({self.radicand}))"

    def to_json(self) -> dict:
        return {"coeff": rational_to_str(self.coeff), "radicand": rational_to_str(self.radicand)}

    @classmethod
    def from_json(cls, obj: dict) -> "SurdValue":
        return cls(Fraction(obj["coeff"]), Fraction(obj["radicand"]))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Poly:
    """Univariate polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "t"):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1, var: str = "t") -> "Poly":
        return cls([0] * k + [c], var)

    @classmethod
    def const(cls, c: RationalLike, var: str = "t") -> "Poly":
        return cls([c], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def low_order(self) -> int:
        """Index of the lowest nonzero coefficient (ZERO_DEGREE for 0)."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return ZERO_DEGREE

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other], self.var)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] + other[k] for k in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs], self.var)
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Poly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly([1], self.var)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other], self.var)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self, order: int = 1) -> "Poly":
        p = self
        for _ in range(order):
            p = Poly([k * c for k, c in enumerate(p.coeffs)][1:], p.var)
        return p

    def shift_down(self, k: int) -> "Poly":
        """Exact division by var**k; the k lowest coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ArithmeticError(f"{self!r} is not divisible by {self.var}^{k}")
        return Poly(self.coeffs[k:], self.var)

    def divmod_monomial(self, k: int) -> tuple["Poly", "Poly"]:
        return Poly(self.coeffs[k:], self.var), Poly(self.coeffs[:k], self.var)

    def __call__(self, x):
        """Horner evaluation; exact for ints/Fractions, float otherwise."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if isinstance(x, (int, Fraction)) else float(c))
        return acc

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self.coeffs[0::2])

    def substitute_scale(self, a: RationalLike) -> "Poly":
        """p(a*x)."""
        a = as_rational(a)
        return Poly([c * a ** k for k, c in enumerate(self.coeffs)], self.var)

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return f"Poly(0, {self.var})"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}" if k == 0 else f"{c}*{self.var}^{k}")
        return "Poly(" + " + ".join(terms) + ")"

    def to_json(self) -> list[str]:
        return [rational_to_str(c) for c in self.coeffs]


def poly_eval_surd(P: Poly, v: SurdValue) -> SurdValue:
    """Evaluate P at c*sqrt(r) exactly.

    Even powers land on radicand 1, odd powers on r; a result needing both is
    not a SurdValue and is rejected.
    """
    c, r = v.coeff, v.radicand
    even = Fraction(0)
    odd = Fraction(0)
    for k, a in enumerate(P.coeffs):
        if a == 0:
            continue
        term = a * c ** k * r ** (k // 2)
        if k % 2:
            odd += term
        else:
            even += term
    if r == 1:
        return SurdValue(even + odd, 1)
    if even != 0 and odd != 0:
        raise ValueError("mixed-radicand result: polynomial has both parities at a surd point")
    if odd != 0:
        return SurdValue(odd, r)
    return SurdValue(even, 1)


def dot_surd(weights: Sequence[Fraction], values: Sequence[SurdValue]) -> SurdValue:
    """sum(w*v) over surds that share one radicand, accumulated in Fractions."""
    radicand = None
    acc = Fraction(0)
    for w, v in zip(weights, values):
        if w == 0 or v.is_zero():
            continue
        if radicand is None:
            radicand = v.radicand
        elif v.radicand != radicand:
            raise ValueError("mixed radicands in linear combination")
        acc += w * v.coeff
    return SurdValue(acc, radicand if radicand is not None else 1)


def poly_divmod(P: Poly, Q: Poly) -> tuple[Poly, Poly]:
    """Euclidean division P = q*Q + r with deg r < deg Q."""
    if Q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(P.coeffs)
    dq = Q.degree
    lead = Q.coeffs[-1]
    quot = [Fraction(0)] * max(len(rem) - dq, 0)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i] / lead
        if c:
            quot[i - dq] = c
            for j, qc in enumerate(Q.coeffs):
                rem[i - dq + j] -= c * qc
    return Poly(quot, P.var), Poly(rem[:dq], P.var)


def poly_divide_exact(P: Poly, Q: Poly) -> Poly:
    q, r = poly_divmod(P, Q)
    if not r.is_zero():
        raise ArithmeticError("polynomial division is not exact")
    return q
