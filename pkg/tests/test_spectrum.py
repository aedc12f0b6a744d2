from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedral_cm import fixtures
from dihedral_cm.arith import MultiPoly
from dihedral_cm.cherednik import ParameterMismatch, evaluate_central
from dihedral_cm.spectrum import (
    BudgetExceeded,
    PresentationRelation,
    central_generators,
    compare_fixed_points,
    compare_minimal_polynomial,
    cuspidal_families,
    cuspidality_test,
    decompose_central,
    derive_relations,
    eu_power,
    families_partition,
    fixed_point_presentation,
    lower_powers_independent,
    minimal_polynomial_eu,
    relations_zero_parameter,
    undeformed_relations,
    verify_relation,
)
from dihedral_cm.cherednik import trunc


@pytest.mark.parametrize("d", [3, 4, 5])
def test_derived_relations_hold_on_full_elements(d):
    for rel in derive_relations(d):
        assert verify_relation(d, rel), rel.name


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_zero_parameter_limit(d):
    for r, r0 in zip(relations_zero_parameter(derive_relations(d)), undeformed_relations(d)):
        assert (r.difference() - r0.difference()).is_zero(), r.name


def test_a2_presentation_example():
    rels = {r.name: r for r in derive_relations(3)}
    right = rels["Z_1,1"].right
    key = tuple({"A": 2, "q": 1}.get(v, 0) for v in right.vars)
    # the deformation term of a1^2 is 9 A^2 q
    assert right.terms.get(key) == 9


def test_true_eu_powers_are_used():
    d = 3
    f = trunc(eu_power(d, 2))
    dec = decompose_central(f, d)
    assert dec == MultiPoly.var("eu", dec.vars) ** 2


def test_budget():
    with pytest.raises(BudgetExceeded):
        derive_relations(7)


@pytest.mark.parametrize("d", [3, 4, 6])
def test_minimal_polynomial_matches_reference(d):
    assert compare_minimal_polynomial(d).ok


@pytest.mark.parametrize("d", [3, 4])
def test_minimal_polynomial_annihilates_eu(d):
    f = minimal_polynomial_eu(d)
    expr = MultiPoly(tuple("eu" if v == "t" else v for v in f.vars), f.terms)
    assert evaluate_central(expr, central_generators(d).named(), d).is_zero()
    assert lower_powers_independent(d)


def test_minimal_polynomial_at_the_origin_d3():
    f = minimal_polynomial_eu(3)
    g = f.subs({v: 0 for v in ("q", "r", "Q", "R")})
    t, A = MultiPoly.var("t", g.vars), MultiPoly.var("A", g.vars)
    assert g == (t - 3 * A) * (t + 3 * A) * t ** 4


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_families_match_table(d):
    for regime in fixtures.regimes_for(d):
        a, b = fixtures.representative(regime)
        got = sorted(sorted(F) for F in families_partition(d, a, b))
        assert got == sorted(sorted(F) for F in fixtures.families_reference(d, regime)), regime


def test_family_examples():
    assert sorted(map(sorted, families_partition(6, 2, 1))) == sorted(
        [["1_W"], ["eps_s"], ["eps_t"], ["eps"], ["chi_1", "chi_2"]])
    assert len(families_partition(5, 0, 0)) == 1
    with pytest.raises(ParameterMismatch):
        families_partition(5, 1, 2)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([4, 6]), st.sampled_from(fixtures.REGIMES),
       st.fractions(min_value=-7, max_value=7, max_denominator=5).filter(lambda x: x != 0))
def test_families_scale_invariant(d, regime, lam):
    a, b = fixtures.representative(regime)
    p1 = sorted(map(sorted, families_partition(d, a, b)))
    p2 = sorted(map(sorted, families_partition(d, lam * a, lam * b)))
    assert p1 == p2


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_cuspidal_families_match_table(d):
    for regime in fixtures.regimes_for(d):
        a, b = fixtures.representative(regime)
        got = sorted(sorted(F) for F in cuspidal_families(d, a, b))
        assert got == sorted(sorted(F) for F in fixtures.cuspidal_reference(d, regime)), regime


def test_cuspidality_examples():
    assert cuspidality_test(["eps_s", "eps_t", "chi_1", "chi_2"], 6, 1, 1)
    assert not cuspidality_test(["chi_1"], 4, 1, 0)
    assert not cuspidality_test(["1_W"], 5, 1, 1)


@pytest.mark.parametrize("d,m", [(3, 3), (3, 2), (4, 4), (6, 6)])
def test_fixed_points_match_reference(d, m):
    assert compare_fixed_points(d, m).ok


def test_fixed_points_m1_is_identity():
    fp = fixed_point_presentation(3, 1)
    assert len(fp.generators) == 3 + 4
    assert [r for r in fp.relations] == [r.difference() for r in derive_relations(3)]


def test_fixed_points_d3_m3_generators():
    fp = fixed_point_presentation(3, 3)
    assert sorted(fp.reduced_generators()) == ["R", "eu", "r"]
    assert len(fp.reduced_relations) == 1
