"""Exact polynomial arithmetic over arbitrary-precision rationals.

Three immutable value types live here and everything else in the package is
built on top of them:

* ``UniPoly``: dense univariate polynomial, coefficient ``i`` is the
  coefficient of ``x**i``.  The zero polynomial is the empty coefficient
  tuple and its ``degree`` is ``None`` (never -1 arithmetic).
* ``BiPoly``: polynomial in ``t`` whose coefficients are ``UniPoly`` in
  ``s``.  Dense in ``t``; this is all the bivariate structure the package
  needs.
* ``RatFun``: reduced ratio of two ``UniPoly`` with a canonical
  denominator (primitive integer coefficients, positive leading
  coefficient), so equality is plain field equality.

All scalars are ``fractions.Fraction``.  Floating point is rejected on
input: every claim checked downstream is an exact sign or coefficient
statement and a tolerance would corrupt it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]


class NotDivisible(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class DegreeTooSmall(ValueError):
    """A framing degree ``n`` was smaller than the polynomial degree."""


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce ``value`` to an exact rational; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact rational required, got {type(value).__name__}")


def format_scalar(value: Fraction) -> str:
    """Render ``a`` or ``a/b`` in decimal digits, the text wire format."""
    return str(value)


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside the triangle (including n < 0)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@dataclass(init=False, frozen=True)
class UniPoly:
    """Dense univariate polynomial over Q, canonical (no trailing zeros)."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> UniPoly:
        return cls(())

    @classmethod
    def one(cls) -> UniPoly:
        return cls((1,))

    @classmethod
    def x(cls) -> UniPoly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: ScalarLike = 1) -> UniPoly:
        if k < 0:
            raise ValueError("monomial exponent must be >= 0")
        return cls((0,) * k + (c,))

    @classmethod
    def constant(cls, c: ScalarLike) -> UniPoly:
        return cls((c,))

    @classmethod
    def from_text(cls, text: str) -> UniPoly:
        """Parse the wire format: whitespace-separated rationals, low to high."""
        return cls(tuple(Fraction(tok) for tok in text.split()))

    @classmethod
    def from_json(cls, items: Iterable[str]) -> UniPoly:
        return cls(tuple(Fraction(item) for item in items))

    # -- inspection ---------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def min_exponent(self) -> int | None:
        """Exponent of the lowest nonzero term, or None for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    # -- ring operations ----------------------------------------------

    def __add__(self, other: UniPoly | ScalarLike) -> UniPoly:
        if not isinstance(other, UniPoly):
            other = UniPoly((as_scalar(other),))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: UniPoly | ScalarLike) -> UniPoly:
        if not isinstance(other, UniPoly):
            other = UniPoly((as_scalar(other),))
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> UniPoly:
        return UniPoly((as_scalar(other),)) - self

    def __mul__(self, other: UniPoly | ScalarLike) -> UniPoly:
        if not isinstance(other, UniPoly):
            c = as_scalar(other)
            return UniPoly(tuple(c * a for a in self.coeffs))
        if self.is_zero() or other.is_zero():
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UniPoly:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus and evaluation ----------------------------------------

    def derivative(self) -> UniPoly:
        return UniPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def evaluate(self, v: ScalarLike) -> Fraction:
        """Exact Horner evaluation."""
        v = as_scalar(v)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def compose(self, inner: UniPoly) -> UniPoly:
        """self(inner(x)) by Horner."""
        acc = UniPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly((c,))
        return acc

    def substitute_power(self, m: int) -> UniPoly:
        """Return f(x**m)."""
        if m < 1:
            raise ValueError("power substitution needs m >= 1")
        if self.is_zero():
            return self
        out = [Fraction(0)] * (m * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            out[m * i] = c
        return UniPoly(out)

    # -- division -------------------------------------------------------

    def __divmod__(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if not isinstance(other, UniPoly):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 1)
        rem = list(self.coeffs)
        dlead = other.coeffs[-1]
        dlen = len(other.coeffs)
        while len(rem) >= dlen:
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < dlen:
                break
            factor = rem[-1] / dlead
            shift = len(rem) - dlen
            q[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            rem.pop()
        return UniPoly(q), UniPoly(rem)

    def exact_div(self, other: UniPoly) -> UniPoly:
        """Quotient when ``other`` divides exactly, else NotDivisible."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise NotDivisible(f"{self!r} is not divisible by {other!r}")
        return q

    def divides(self, other: UniPoly) -> bool:
        if self.is_zero():
            return other.is_zero()
        return divmod(other, self)[1].is_zero()

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        return self * (1 / self.coeffs[-1])

    # -- reversal -------------------------------------------------------

    def reverse(self, n: int) -> UniPoly:
        """Return x**n * f(1/x): the coefficient list reversed in window n+1."""
        deg = self.degree
        if deg is not None and n < deg:
            raise DegreeTooSmall(f"reversal window {n} < degree {deg}")
        out = [Fraction(0)] * (n + 1)
        for i, c in enumerate(self.coeffs):
            out[n - i] = c
        return UniPoly(out)

    # -- scalar structure ------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self = c * (primitive integer polynomial)."""
        if self.is_zero():
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    # -- formatting -------------------------------------------------------

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        return " ".join(format_scalar(c) for c in self.coeffs)

    def to_json(self) -> list[str]:
        return [format_scalar(c) for c in self.coeffs]

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"UniPoly({self.to_text()!r})"


ONE = UniPoly.one()
X = UniPoly.x()
ONE_PLUS_X = UniPoly((1, 1))
ONE_MINUS_X = UniPoly((1, -1))


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, divmod(a, b)[1]
    return a.monic()


def squarefree_part(f: UniPoly) -> UniPoly:
    """f with all root multiplicities flattened to one, made monic."""
    if f.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    if f.degree == 0:
        return UniPoly.one()
    return f.exact_div(poly_gcd(f, f.derivative())).monic()


def f_to_h(f: UniPoly, n: int) -> UniPoly:
    """Change of basis sum(f_i x^i (1-x)^(n-i)), exact."""
    deg = f.degree
    if deg is not None and n < deg:
        raise DegreeTooSmall(f"framing degree {n} < degree {deg}")
    acc = UniPoly.zero()
    for i, c in enumerate(f.coeffs):
        if c:
            acc = acc + UniPoly.monomial(i, c) * ONE_MINUS_X ** (n - i)
    return acc


@dataclass(init=False, frozen=True)
class RatFun:
    """Reduced rational function num/den with a canonical denominator."""

    num: UniPoly
    den: UniPoly

    def __init__(self, num: UniPoly | ScalarLike, den: UniPoly | ScalarLike = 1):
        if not isinstance(num, UniPoly):
            num = UniPoly((as_scalar(num),))
        if not isinstance(den, UniPoly):
            den = UniPoly((as_scalar(den),))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            object.__setattr__(self, "num", UniPoly.zero())
            object.__setattr__(self, "den", UniPoly.one())
            return
        g = poly_gcd(num, den)
        if g.degree:
            num = num.exact_div(g)
            den = den.exact_div(g)
        # Canonical scale: denominator primitive with positive leading coeff.
        scale = den.content()
        if den.leading_coefficient() < 0:
            scale = -scale
        object.__setattr__(self, "num", num * (1 / scale))
        object.__setattr__(self, "den", den * (1 / scale))

    @classmethod
    def from_poly(cls, p: UniPoly) -> RatFun:
        return cls(p, UniPoly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: RatFun) -> RatFun:
        if not isinstance(other, RatFun):
            return NotImplemented
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: RatFun) -> RatFun:
        return self + (-other)

    def __neg__(self) -> RatFun:
        return RatFun(-self.num, self.den)

    def __mul__(self, other: RatFun | UniPoly | ScalarLike) -> RatFun:
        if isinstance(other, RatFun):
            return RatFun(self.num * other.num, self.den * other.den)
        if isinstance(other, UniPoly):
            return RatFun(self.num * other, self.den)
        return RatFun(self.num * as_scalar(other), self.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RatFun) -> RatFun:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def derivative(self) -> RatFun:
        """Formal derivative by the quotient rule, reduced."""
        return RatFun(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RatFun({self.num!r}, {self.den!r})"


def apply_diff_operator(g: RatFun, r: RatFun, n: int) -> RatFun:
    """Apply the operator (g * d/dx) to r, n times."""
    if n < 0:
        raise ValueError("operator power must be >= 0")
    out = r
    for _ in range(n):
        out = g * out.derivative()
    return out


@dataclass(init=False, frozen=True)
class BiPoly:
    """Polynomial in t with UniPoly-in-s coefficients, dense in t."""

    t_coeffs: tuple[UniPoly, ...]

    def __init__(self, t_coeffs: Iterable[UniPoly | ScalarLike] = ()):
        cs = [c if isinstance(c, UniPoly) else UniPoly((as_scalar(c),)) for c in t_coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "t_coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> BiPoly:
        return cls(())

    @classmethod
    def one(cls) -> BiPoly:
        return cls((UniPoly.one(),))

    @classmethod
    def s(cls) -> BiPoly:
        return cls((UniPoly.x(),))

    @classmethod
    def t(cls) -> BiPoly:
        return cls((UniPoly.zero(), UniPoly.one()))

    @classmethod
    def t_monomial(cls, k: int, coeff: UniPoly | ScalarLike = 1) -> BiPoly:
        if not isinstance(coeff, UniPoly):
            coeff = UniPoly((as_scalar(coeff),))
        return cls((UniPoly.zero(),) * k + (coeff,))

    @property
    def t_degree(self) -> int | None:
        return len(self.t_coeffs) - 1 if self.t_coeffs else None

    def is_zero(self) -> bool:
        return not self.t_coeffs

    def coefficient(self, j: int) -> UniPoly:
        if 0 <= j < len(self.t_coeffs):
            return self.t_coeffs[j]
        return UniPoly.zero()

    def __add__(self, other: BiPoly) -> BiPoly:
        if not isinstance(other, BiPoly):
            return NotImplemented
        a, b = self.t_coeffs, other.t_coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = out[j] + c
        return BiPoly(out)

    def __neg__(self) -> BiPoly:
        return BiPoly(tuple(-c for c in self.t_coeffs))

    def __sub__(self, other: BiPoly) -> BiPoly:
        return self + (-other)

    def __mul__(self, other: BiPoly | UniPoly | ScalarLike) -> BiPoly:
        if not isinstance(other, BiPoly):
            if not isinstance(other, UniPoly):
                other = UniPoly((as_scalar(other),))
            return BiPoly(tuple(c * other for c in self.t_coeffs))
        if self.is_zero() or other.is_zero():
            return BiPoly.zero()
        out = [UniPoly.zero()] * (len(self.t_coeffs) + len(other.t_coeffs) - 1)
        for i, a in enumerate(self.t_coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.t_coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BiPoly:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = BiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute_s(self, value: ScalarLike) -> UniPoly:
        """Evaluate every s-coefficient at an exact rational: a UniPoly in t."""
        v = as_scalar(value)
        return UniPoly(tuple(c.evaluate(v) for c in self.t_coeffs))

    def to_json(self) -> dict:
        return {"t_coeffs": [c.to_json() for c in self.t_coeffs]}

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return "; ".join(c.to_text() for c in self.t_coeffs)

    def __repr__(self) -> str:
        return f"BiPoly({[c.to_text() for c in self.t_coeffs]!r})"
