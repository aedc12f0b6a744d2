from __future__ import annotations

from fractions import Fraction

import pytest

from dihedral_cm.cuspidal import (
    MorphismFailure,
    NotCuspidalPoint,
    antisymmetry_check,
    expected_weights,
    lie_structure,
    relations_in_square,
    verify_aleph,
)
from dihedral_cm import fixtures


@pytest.mark.parametrize("d,a,b", [(4, 1, 1), (6, 2, 1), (6, 1, 1), (5, 1, 1), (4, 1, -1), (6, 1, 0)])
def test_lie_axioms(d, a, b):
    lie = lie_structure(d, a, b)
    assert len(lie.basis) == d + 4
    assert lie.is_antisymmetric()
    assert lie.jacobi_holds()
    assert lie.ad_eu_weights() == {k: Fraction(v) for k, v in expected_weights(d).items()}
    assert relations_in_square(d, a, b)


def test_qQ_linearizes_to_eu():
    lie = lie_structure(4, 1, 1)
    assert lie.bracket(lie.unit("q"), lie.unit("Q")) == lie.unit("eu")
    assert lie.bracket(lie.unit("eu"), lie.unit("q")) == [-2 * x for x in lie.unit("q")]


def test_independent_antisymmetry():
    assert antisymmetry_check(4, 1, 1)
    assert antisymmetry_check(6, 2, 1)


def test_no_cuspidal_point():
    with pytest.raises(NotCuspidalPoint):
        lie_structure(3, 1, 1)
    with pytest.raises(NotCuspidalPoint):
        lie_structure(4, 1, 0)


@pytest.mark.parametrize("lam", [1, 2, Fraction(-1, 3)])
def test_sl3(lam):
    report = verify_aleph(4, lam, lam)
    assert report.ok, report.checks


@pytest.mark.parametrize("a,b", [(2, 1), (4, 2), (1, 0), (0, 1), (3, -1)])
def test_sp4(a, b):
    report = verify_aleph(6, a, b)
    assert report.ok, report.checks


@pytest.mark.parametrize("a,b", [(1, 1), (1, -1), (2, 2), (2, -2)])
def test_degenerate_point(a, b):
    report = verify_aleph(6, a, b)
    names = [n for n, _, _ in report.checks]
    assert "kernel" in names and report.ok, report.checks


def test_wrong_image_is_reported(monkeypatch):
    images = fixtures.aleph_images(4, 1, 1)
    broken = dict(images)
    broken["q"] = [[2 * x for x in row] for row in images["q"]]
    monkeypatch.setattr(fixtures, "aleph_images", lambda d, a, b: broken)
    with pytest.raises(MorphismFailure) as info:
        verify_aleph(4, 1, 1)
    assert "q" in info.value.pair
    assert not verify_aleph(4, 1, 1, strict=False).ok


def test_d4_requires_equal_parameters():
    with pytest.raises(ValueError):
        verify_aleph(4, 1, -1)
