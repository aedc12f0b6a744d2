from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedral_cm import fixtures
from dihedral_cm.arith import MultiPoly, is_square_up_to_constant
from dihedral_cm.gaudin import (
    ParameterMismatch,
    _split,
    cellular_characters,
    closed_form_check,
    commute,
    conjugation_check,
    gaudin_matrices,
    gaudin_modules,
    linear_scalars,
    regular_reconstruction,
)

a_sym, b_sym = MultiPoly.var("a"), MultiPoly.var("b")


@pytest.mark.parametrize("d", range(3, 9))
def test_direct_sum_matches_closed_forms(d):
    for k in range(1, (d + 1) // 2):
        assert closed_form_check(d, k, a_sym, a_sym), k
        if d % 2 == 0:
            assert closed_form_check(d, k, a_sym, b_sym), k


def test_equal_parameter_example_d3():
    g = gaudin_matrices(3, 1, 1, 1)
    X, Y = MultiPoly.var("X", ("X", "Y")), MultiPoly.var("Y", ("X", "Y"))
    assert g.Dx[0][1] == Y ** 2 and g.Dx[1][0] == X * Y
    assert g.Dx[0][0].is_zero() and g.Dx[1][1].is_zero()


@pytest.mark.parametrize("d", [4, 5, 6, 7])
def test_equal_parameters_dy_is_x_over_y_dx(d):
    for k in range(1, (d + 1) // 2):
        g = gaudin_matrices(d, k, 2, 2)
        for r in range(2):
            for c in range(2):
                X, Y = MultiPoly.var("X", g.Dx[r][c].vars), MultiPoly.var("Y", g.Dx[r][c].vars)
                assert g.Dy[r][c] * Y == g.Dx[r][c] * X


def test_zero_parameters_give_zero_matrices():
    assert gaudin_matrices(5, 2, 0, 0).is_zero()


@pytest.mark.parametrize("d,k,a,b", [(5, 1, 1, 1), (6, 1, 2, 1), (8, 2, 3, -1), (4, 1, 1, 1)])
def test_conjugation_by_diag(d, k, a, b):
    assert conjugation_check(d, k, a, b)


def test_traces_vanish_and_operators_commute():
    for d, a, b in ((6, 2, 1), (7, 1, 1), (8, 1, 0)):
        for k in range(1, (d + 1) // 2):
            g = gaudin_matrices(d, k, a, b)
            assert (g.Dx[0][0] + g.Dx[1][1]).is_zero() and (g.Dy[0][0] + g.Dy[1][1]).is_zero()
            assert commute(g)


def test_odd_d_needs_equal_parameters():
    with pytest.raises(ParameterMismatch):
        cellular_characters(5, 1, 2)


def test_linear_scalars_trivial_character():
    sx, sy = linear_scalars(5, "1_W", 1, 1)
    X = MultiPoly.var("X", sx.vars)
    assert sx == X ** 4


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_cellular_characters_match_table(d):
    for regime in fixtures.regimes_for(d):
        a, b = fixtures.representative(regime)
        got = sorted(sorted(c.multiplicities.items()) for c in cellular_characters(d, a, b))
        want = sorted(sorted(m.items()) for m in fixtures.cellular_reference(d, regime))
        assert got == want, regime


@pytest.mark.parametrize("d", range(3, 9))
def test_regular_character_reconstruction(d):
    for regime in fixtures.regimes_for(d):
        a, b = fixtures.representative(regime)
        assert regular_reconstruction(d, gaudin_modules(d, a, b)), regime


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([4, 5, 6, 7, 8]), st.integers(-3, 3), st.integers(-3, 3))
def test_splitting_criterion_is_coherent(d, a, b):
    if d % 2:
        b = a
    for k in range(1, (d + 1) // 2):
        g = gaudin_matrices(d, k, a, b)
        if g.is_zero():
            continue
        lead = g.Dx if any(not e.is_zero() for row in g.Dx for e in row) else g.Dy
        disc = lead[0][0] * lead[0][0] + lead[0][1] * lead[1][0]
        parts = _split(g, ("X", "Y"))
        assert (parts is not None) == is_square_up_to_constant(disc)


@pytest.mark.parametrize("d", [4, 6, 8])
def test_equal_parameters_two_dim_restrictions_split(d):
    mods = gaudin_modules(d, 1, 1)
    names = [sorted(m.multiplicities) for m in mods]
    chis = [f"chi_{k}" for k in range(1, (d + 1) // 2)]
    assert sorted(["eps_s"] + chis) in names and sorted(["eps_t"] + chis) in names
    assert all(m.dimension == 1 for m in mods)


def test_non_isomorphic_modules_with_equal_character():
    mods = gaudin_modules(4, 1, 0)
    assert len(mods) == 4 and len(cellular_characters(4, 1, 0)) == 3
