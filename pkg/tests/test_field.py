"""Exact scalar, polynomial and rational function arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polecancel.field import (
    ORDER_INF,
    BiPoly,
    BiRatFunc,
    PoleAtPoint,
    Poly,
    QQi,
    RatFunc,
    ZeroDenominator,
    divide_by_z_minus_u,
    nevanlinna_kernel_entry,
    rational_real_roots,
)

fracs = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 4))
scalars = st.builds(QQi, fracs, fracs)
polys = st.builds(lambda cs: Poly(cs), st.lists(scalars, max_size=4))


@given(scalars, scalars, scalars)
@settings(max_examples=60, deadline=None)
def test_qqi_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == QQi(1)


@given(scalars)
@settings(max_examples=40, deadline=None)
def test_qqi_string_round_trip(a):
    assert QQi.parse(str(a)) == a


def test_qqi_parse_forms():
    assert QQi.parse("3/4") == QQi(Fraction(3, 4))
    assert QQi.parse("-1/2i") == QQi(0, Fraction(-1, 2))
    assert QQi.parse("1/1+2/3i") == QQi(1, Fraction(2, 3))


@given(polys, polys)
@settings(max_examples=40, deadline=None)
def test_poly_divmod(a, b):
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree or r.is_zero()


@given(polys, polys, polys)
@settings(max_examples=40, deadline=None)
def test_poly_gcd_divides(a, b, g):
    a, b = a * g, b * g
    d = a.gcd(b)
    if a.is_zero() and b.is_zero():
        assert d.is_zero()
        return
    assert (a % d).is_zero() and (b % d).is_zero()
    if not g.is_zero():
        assert (d % g).is_zero()


def test_poly_shift_is_taylor():
    p = Poly([1, 2, 3])  # 1 + 2z + 3z^2
    s = p.shift(QQi(1))  # p(z + 1) = 6 + 8z + 3z^2
    assert s == Poly([6, 8, 3])


@given(polys, polys)
@settings(max_examples=40, deadline=None)
def test_ratfunc_canonical(a, b):
    if b.is_zero():
        with pytest.raises(ZeroDenominator):
            RatFunc(a, b)
        return
    f = RatFunc(a, b)
    if f.is_zero():
        assert f.den == Poly([1])
    else:
        assert f.num.gcd(f.den).degree == 0
        assert f.den.leading() == QQi(1)


@given(polys, polys, polys, polys)
@settings(max_examples=40, deadline=None)
def test_ratfunc_add_mul_against_naive(a, b, c, d):
    if b.is_zero() or d.is_zero():
        return
    f, g = RatFunc(a, b), RatFunc(c, d)
    assert (f + g) == RatFunc(a * d + c * b, b * d)
    assert (f * g) == RatFunc(a * c, b * d)


def test_order_at_and_taylor():
    # z^2 / (z - 1/2): order 2 at 0, Taylor -2z^2 - 4z^3 - ...
    f = RatFunc(Poly([0, 0, 1]), Poly([Fraction(-1, 2), 1]))
    assert f.order_at(QQi(0)) == 2
    assert f.taylor(QQi(0), 4) == [QQi(0), QQi(0), QQi(-2), QQi(-4)]
    assert RatFunc(0).order_at(QQi(0)) is ORDER_INF
    with pytest.raises(PoleAtPoint):
        RatFunc(1, Poly.x()).eval(QQi(0))


def test_rational_real_roots():
    # (z - 1/2)^2 (z + 3) z, plus an irrational factor z^2 - 2
    q = Poly([Fraction(-1, 2), 1]) * Poly([Fraction(-1, 2), 1]) * Poly([3, 1]) * Poly.x()
    q = q * Poly([-2, 0, 1])
    roots = dict(rational_real_roots(q))
    assert roots == {Fraction(1, 2): 2, Fraction(-3): 1, Fraction(0): 1}


def test_divide_by_z_minus_u():
    # z^3 - u^3 = (z - u)(z^2 + zu + u^2)
    f = BiPoly({(3, 0): QQi(1), (0, 3): QQi(-1)})
    g = divide_by_z_minus_u(f)
    assert g == BiPoly({(2, 0): QQi(1), (1, 1): QQi(1), (0, 2): QQi(1)})


def test_nevanlinna_kernel_entry_scalar():
    # f = -1/z gives kernel 1/(zu)
    k = nevanlinna_kernel_entry(RatFunc(-1, Poly.x()))
    assert k == BiRatFunc(BiPoly({(0, 0): QQi(1)}), BiPoly({(1, 1): QQi(1)}))
    # Taylor coefficient at a regular point
    assert k.taylor_coeff(QQi(1), QQi(1), 0, 0) == QQi(1)


@given(st.integers(-3, 3), st.integers(-3, 3))
@settings(max_examples=20, deadline=None)
def test_biratfunc_diagonal_consistency(a, b):
    # kernel of f = -1/z evaluated off the poles agrees with the formula
    if a == 0 or b == 0:
        return
    k = nevanlinna_kernel_entry(RatFunc(-1, Poly.x()))
    assert k.num.eval(QQi(a), QQi(b)) / k.den.eval(QQi(a), QQi(b)) == QQi(1) / QQi(a * b)
