from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dihedral_cm.dihedral import (
    GroupElement,
    NotSubgroup,
    conjugacy_classes,
    elements,
    index2_subgroup,
    induce_from_index2,
    inner_product,
    iota_permutation,
    irr_characters,
    mat_mul,
    regular_character,
    rho,
    sub_regular,
    sub_sign,
    sub_trivial,
    tau_action,
)

D_VALUES = [3, 4, 5, 6, 7, 8]


@pytest.mark.parametrize("d", D_VALUES)
def test_presentation_of_the_group(d):
    s, t = GroupElement.reflection(d, 0), GroupElement.reflection(d, 1)
    assert (s * s).is_identity() and (t * t).is_identity()
    assert ((s * t) ** d).is_identity()
    assert all(not ((s * t) ** k).is_identity() for k in range(1, d))


@given(st.integers(3, 9), st.data())
def test_group_law_is_associative(d, data):
    g, h, k = (GroupElement.from_code(d, data.draw(st.integers(0, 2 * d - 1))) for _ in range(3))
    assert (g * h) * k == g * (h * k)
    assert (g * g.inverse()).is_identity()


@pytest.mark.parametrize("d", D_VALUES)
def test_rho_is_a_representation(d):
    for k in range(1, (d + 1) // 2):
        for g, h in product(elements(d), repeat=2):
            assert mat_mul(rho(d, k, g), rho(d, k, h)) == rho(d, k, g * h)


@pytest.mark.parametrize("d", D_VALUES)
def test_irreducible_characters(d):
    chars = irr_characters(d)
    assert len(chars) == ((d + 3) // 2 if d % 2 else d // 2 + 3)
    assert len(chars) == len(conjugacy_classes(d))
    for c1, c2 in product(chars, repeat=2):
        assert inner_product(c1, c2) == (1 if c1 is c2 else 0)
    assert sum(c.degree ** 2 for c in chars) == 2 * d
    assert regular_character(d) == {c.name: c.degree for c in chars}


@pytest.mark.parametrize("d", [4, 6, 8])
def test_induction_from_index_two_subgroup(d):
    assert len(index2_subgroup(d)) == d
    assert induce_from_index2(d, sub_trivial(d)) == {"1_W": 1, "eps_t": 1}
    assert induce_from_index2(d, sub_sign(d)) == {"eps": 1, "eps_s": 1}
    reg = induce_from_index2(d, sub_regular(d))
    assert reg == regular_character(d)


def test_odd_d_has_no_index_two_reflection_subgroup():
    with pytest.raises(NotSubgroup):
        index2_subgroup(5)


@pytest.mark.parametrize("d", [4, 6])
def test_tau_swaps_the_two_sign_characters(d):
    names = {c.name: tau_action(c).name for c in irr_characters(d)}
    assert names["eps_s"] == "eps_t" and names["eps_t"] == "eps_s"
    assert names["1_W"] == "1_W" and names["eps"] == "eps"


@pytest.mark.parametrize("d", [3, 5, 7, 9])
def test_translation_permutations_odd_d(d):
    s, one, c = GroupElement.reflection(d, 0), GroupElement.identity(d), GroupElement.rotation(d)
    assert iota_permutation(s, one).parity() == 1
    assert iota_permutation(c, c).cycle_type() == (d,) + (1,) * d
