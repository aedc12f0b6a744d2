from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedral_cm.arith import MultiPoly
from dihedral_cm.invariants import (
    NotInvariant,
    VARS,
    basis_labels,
    generator_bidegree,
    generators,
    is_invariant,
    module_decompose,
    partial_fraction_checks,
    recompose,
    reynolds,
    verify_invariant_relations,
    verify_partial_fractions,
    z_degree,
)


@pytest.mark.parametrize("d", range(3, 9))
def test_generators_are_invariant(d):
    for name, f in generators(d).named().items():
        assert is_invariant(d, f), name


@pytest.mark.parametrize("d", range(3, 9))
def test_undeformed_relations_hold(d):
    results = verify_invariant_relations(d)
    assert results and all(ok for _, ok in results)


@pytest.mark.parametrize("d", range(3, 13))
def test_partial_fractions(d):
    for k in range(1, d + 1):
        assert verify_partial_fractions(d, k), (d, k)


def test_partial_fraction_count_even_case():
    assert len(partial_fraction_checks(6, 1)) == 5
    assert len(partial_fraction_checks(5, 1)) == 2


def test_degrees():
    assert generator_bidegree(5, "a2") == (3, 2)
    assert z_degree(5, "a2") == -1
    assert z_degree(6, "R") == 6 and z_degree(6, "q") == -2
    assert basis_labels(3) == ["1", "eu^1", "eu^2", "eu^3", "a1", "a2"]


monomial = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 6), st.dictionaries(monomial, st.integers(-3, 3), min_size=1, max_size=3))
def test_module_decompose_round_trip(d, terms):
    f = reynolds(d, MultiPoly(VARS, terms))
    if f.is_zero():
        return
    dec = module_decompose(f, d)
    assert recompose(dec, d) == f


def test_module_decompose_rejects_non_invariants():
    x = MultiPoly.var("x", VARS)
    with pytest.raises(NotInvariant):
        module_decompose(x, 4)


def test_decomposition_is_linear_in_the_basis():
    d = 4
    g = generators(d)
    f = g.a0[1] * g.a0[3]
    dec = module_decompose(f, d)
    for e, _ in dec.terms.items():
        powers = dict(zip(dec.vars, e))
        n_a = sum(p for v, p in powers.items() if v.startswith("a") and v[1:].isdigit())
        assert n_a <= 1 and (n_a == 0 or powers.get("eu", 0) == 0)
