from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedral_cm.arith import (
    Cyclotomic,
    MultiPoly,
    RatFunc,
    ZeroInput,
    cyclotomic_poly,
    euler_phi,
    is_square_up_to_constant,
    multivar_gcd,
    squarefree_decomposition,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def cyclo(n):
    return st.lists(small, min_size=euler_phi(n), max_size=euler_phi(n)).map(lambda c: Cyclotomic(n, c))


def poly(names=("X", "Y"), max_deg=3):
    exps = st.tuples(*[st.integers(0, max_deg) for _ in names])
    return st.dictionaries(exps, small, max_size=4).map(lambda t: MultiPoly(names, t))


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8, 12])
def test_zeta_has_order_n(n):
    z = Cyclotomic.zeta(n)
    assert z ** n == Cyclotomic.rational(n, 1)
    assert all(z ** k != Cyclotomic.rational(n, 1) for k in range(1, n))


def test_cyclotomic_polynomials():
    t = MultiPoly.var("t")
    assert cyclotomic_poly(6) == t ** 2 - t + 1
    assert cyclotomic_poly(4) == t ** 2 + 1


@settings(max_examples=60, deadline=None)
@given(cyclo(5), cyclo(5), cyclo(5))
def test_cyclotomic_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if not a.is_zero():
        assert a * a.inverse() == Cyclotomic.rational(5, 1)


@settings(max_examples=40, deadline=None)
@given(cyclo(12))
def test_conjugation_is_an_involutive_automorphism(a):
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).conjugate() == a * a.conjugate()


def test_mixed_orders_embed():
    assert Cyclotomic.zeta(6, 2) == Cyclotomic.zeta(3, 1)
    assert Cyclotomic.zeta(4) * Cyclotomic.zeta(4) == -1


@settings(max_examples=50, deadline=None)
@given(poly(), poly(), poly())
def test_polynomial_ring_laws(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - f).is_zero()


@settings(max_examples=40, deadline=None)
@given(poly(max_deg=2), poly(max_deg=2))
def test_exact_division_recovers_factor(f, g):
    if g.is_zero():
        return
    assert (f * g) / g == f


@settings(max_examples=30, deadline=None)
@given(poly(max_deg=2), poly(max_deg=2), poly(max_deg=2))
def test_gcd_divides_and_contains_common_factor(f, g, h):
    if f.is_zero() or g.is_zero() or h.is_zero():
        return
    G = multivar_gcd(f * h, g * h)
    assert (f * h).divmod(G)[1].is_zero()
    assert (g * h).divmod(G)[1].is_zero()
    assert G.divmod(h)[1].is_zero()


def test_gcd_examples():
    X, Y = MultiPoly.var("X", ("X", "Y")), MultiPoly.var("Y", ("X", "Y"))
    g = multivar_gcd((X - Y) ** 2 * (X + Y), (X - Y) * (X + 2 * Y))
    assert g == (X - Y).monic() or g == (Y - X).monic()


def test_squarefree_decomposition():
    X, Y = MultiPoly.var("X", ("X", "Y")), MultiPoly.var("Y", ("X", "Y"))
    f = (X - Y) ** 3 * (X + Y) ** 2 * X
    parts = squarefree_decomposition(f)
    prod = MultiPoly.const(1, f.vars)
    for g, m in parts:
        prod = prod * g.with_vars(f.vars) ** m
    assert (f / prod).is_constant()
    assert sorted(m for _, m in parts) == [1, 2, 3]


@settings(max_examples=30, deadline=None)
@given(poly(max_deg=2), st.fractions(min_value=1, max_value=9, max_denominator=5))
def test_squares_are_detected(f, c):
    if f.is_zero():
        return
    assert is_square_up_to_constant(f * f * c)
    assert is_square_up_to_constant(RatFunc(f * f, MultiPoly.const(c, f.vars)))


def test_non_squares():
    X, Y = MultiPoly.var("X", ("X", "Y")), MultiPoly.var("Y", ("X", "Y"))
    assert not is_square_up_to_constant(X * Y)
    assert not is_square_up_to_constant(X ** 2 * (X ** 2 + Y ** 2))
    with pytest.raises(ZeroInput):
        is_square_up_to_constant(X - X)


def test_ratfunc_arithmetic_reduces():
    X, Y = MultiPoly.var("X", ("X", "Y")), MultiPoly.var("Y", ("X", "Y"))
    f = RatFunc(X ** 2 - Y ** 2, X - Y)
    assert f.is_polynomial() and f == RatFunc(X + Y)
    g = RatFunc(X, Y) + RatFunc(Y, X)
    assert g == RatFunc(X ** 2 + Y ** 2, X * Y)
    assert (g / g) == 1
    with pytest.raises(ZeroDivisionError):
        RatFunc(X, X - X)
