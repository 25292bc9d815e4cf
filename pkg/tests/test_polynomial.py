from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as hs

from gammalab.polynomial import (
    BiPoly,
    DegreeTooSmall,
    NotDivisible,
    RatFun,
    UniPoly,
    apply_diff_operator,
    f_to_h,
    poly_gcd,
)

ONE = UniPoly.one()
X = UniPoly.x()
ONE_PLUS_X = UniPoly([1, 1])
ONE_MINUS_X2 = UniPoly([1, 0, -1])


scalars = hs.fractions(min_value=-30, max_value=30, max_denominator=7)
polys = hs.lists(scalars, max_size=7).map(UniPoly)
small_polys = hs.lists(hs.integers(-9, 9), max_size=6).map(UniPoly)


def test_canonical_form_strips_trailing_zeros():
    assert UniPoly([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert UniPoly([0, 0]).is_zero()
    assert UniPoly([]).degree is None
    assert UniPoly([5]).degree == 0


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        UniPoly([0.5])
    with pytest.raises(TypeError):
        UniPoly([1]).evaluate(0.5)


def test_ring_op_examples():
    assert ONE_PLUS_X * ONE_PLUS_X == UniPoly([1, 2, 1])
    assert ONE_PLUS_X**2 + UniPoly([0, 2]) == UniPoly([1, 4, 1])
    f = UniPoly([3, 0, 7])
    assert UniPoly.zero() + f == f
    assert f - f == UniPoly.zero()
    assert -f == UniPoly([-3, 0, -7])
    assert 2 * f == UniPoly([6, 0, 14])


def test_derivative_examples():
    assert UniPoly([1, 4, 1]).derivative() == UniPoly([4, 2])
    assert UniPoly([9]).derivative().is_zero()
    # d/dx (x + 3x^2 + x^3) = (1 + 4x + x^2) + 2x(1 + x)
    lhs = UniPoly([0, 1, 3, 1]).derivative()
    rhs = UniPoly([1, 4, 1]) + 2 * X * ONE_PLUS_X
    assert lhs == rhs == UniPoly([1, 6, 3])


def test_eval_examples():
    assert UniPoly([1, 57, 302, 302, 57, 1]).evaluate(1) == 720
    assert UniPoly([1, 1, 1]).evaluate(1) == 3  # L_2 at 1
    assert 2 * UniPoly([1, 1, 1]).evaluate(1) == 6
    f = UniPoly([7, -2, 5])
    assert f.evaluate(0) == 7
    assert f.evaluate(Fraction(1, 2)) == Fraction(7) - 1 + Fraction(5, 4)


def test_exact_division_examples():
    quartic = UniPoly([1, 3, 4, 3, 1])
    assert quartic.exact_div(ONE_PLUS_X**2) == UniPoly([1, 1, 1])
    f = UniPoly([2, 5, 1])
    assert f.exact_div(ONE) == f
    with pytest.raises(NotDivisible):
        UniPoly([1, 0, 1]).exact_div(ONE_PLUS_X)


def test_gcd_examples():
    assert poly_gcd(ONE_PLUS_X**2, ONE_PLUS_X * UniPoly([1, 2])) == ONE_PLUS_X
    f = UniPoly([2, 2])
    assert poly_gcd(f, UniPoly.zero()) == ONE_PLUS_X  # made monic
    # even/odd parts of (1+x)^2 (1+x+x^2) are coprime
    assert poly_gcd(UniPoly([1, 4, 1]), UniPoly([3, 3])) == ONE


def test_reverse_examples():
    assert UniPoly([2, 3]).reverse(1) == UniPoly([3, 2])
    sym = UniPoly([1, 4, 1])
    assert sym.reverse(2) == sym
    assert ONE.reverse(3) == UniPoly.monomial(3)
    with pytest.raises(DegreeTooSmall):
        UniPoly([1, 1, 1]).reverse(1)


def test_text_format():
    f = UniPoly([Fraction(1), Fraction(-3, 4), Fraction(2)])
    assert f.to_text() == "1 -3/4 2"
    assert UniPoly.from_text("1 -3/4 2") == f
    assert UniPoly.zero().to_text() == "0"
    assert UniPoly.from_text("0").is_zero()
    assert UniPoly.from_json(f.to_json()) == f


def test_ratfun_examples():
    third = RatFun(ONE, ONE_MINUS_X2) + RatFun(X, ONE_MINUS_X2)
    assert third == RatFun(ONE, UniPoly([1, -1]))
    f = UniPoly([2, 0, 5])
    assert RatFun(f, f) == RatFun(ONE)
    twice = RatFun(2 * UniPoly.monomial(3), ONE_MINUS_X2**3)
    assert RatFun(twice.num, twice.den) == twice  # normalization idempotent


def test_ratfun_canonical_denominator():
    r = RatFun(ONE, UniPoly([Fraction(1, 2), Fraction(-1, 2)]))
    assert r.den.leading_coefficient() > 0
    assert r.den.content() == 1


def test_apply_diff_operator_examples():
    xd = RatFun(X)
    assert apply_diff_operator(xd, RatFun(ONE, UniPoly([1, -1])), 1) == RatFun(
        X, UniPoly([1, -1]) ** 2
    )
    op = RatFun(UniPoly.monomial(2), ONE_MINUS_X2)
    got = apply_diff_operator(op, RatFun(ONE, ONE_MINUS_X2), 1)
    assert got == RatFun(2 * UniPoly.monomial(3), ONE_MINUS_X2**3)
    got = apply_diff_operator(op, RatFun(X, ONE_MINUS_X2), 2)
    assert got == RatFun(2 * UniPoly.monomial(3) * UniPoly([1, 0, 4, 0, 1]), ONE_MINUS_X2**5)


def test_f_to_h_examples():
    assert f_to_h(ONE, 0) == ONE
    assert f_to_h(UniPoly([1, 1]), 1) == ONE
    assert f_to_h(UniPoly([1, 3, 2]), 2) == UniPoly([1, 1])
    with pytest.raises(DegreeTooSmall):
        f_to_h(UniPoly([1, 1, 1]), 1)


def test_bipoly_examples():
    s, t = BiPoly.s(), BiPoly.t()
    a2 = BiPoly.one() + s * t
    assert a2.substitute_s(1) == UniPoly([1, 1])
    assert (s + t) ** 2 - 2 * s * t == s**2 + t**2
    assert a2 * BiPoly.one() == a2
    assert a2.to_json() == {"t_coeffs": [["1"], ["0", "1"]]}


def test_bipoly_substitute_rejects_float():
    with pytest.raises(TypeError):
        (BiPoly.s() * BiPoly.t()).substitute_s(0.5)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=60, deadline=None)
@given(small_polys, hs.integers(0, 4))
def test_reverse_involution(f, extra):
    n = (f.degree if not f.is_zero() else 0) + extra
    assert f.reverse(n).reverse(n) == f


@settings(max_examples=40, deadline=None)
@given(small_polys, small_polys)
def test_divmod_invariant(f, g):
    if g.is_zero():
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


@settings(max_examples=20, deadline=None)
@given(hs.integers(0, 3), hs.integers(0, 3))
def test_operator_composition(m, k):
    op = RatFun(UniPoly.monomial(2), ONE_MINUS_X2)
    r = RatFun(ONE, UniPoly([1, -1]))
    assert apply_diff_operator(op, r, m + k) == apply_diff_operator(
        op, apply_diff_operator(op, r, k), m
    )


@settings(max_examples=60, deadline=None)
@given(small_polys)
def test_text_round_trip(f):
    assert UniPoly.from_text(f.to_text()) == f
