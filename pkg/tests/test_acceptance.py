"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS`` or ``criterion N: FAIL`` line
(visible with ``pytest -s``) and asserts the outcome.
"""
from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest

from dihedral_cm import fixtures
from dihedral_cm.arith import MultiPoly
from dihedral_cm.cherednik import (
    is_central,
    multiply_by_central,
    pbw_multiply,
    poisson_bracket,
    trunc,
    trunc_inverse,
)
from dihedral_cm.cuspidal import MorphismFailure, verify_aleph
from dihedral_cm.dihedral import GroupElement, code_is_reflection, iota_permutation
from dihedral_cm.gaudin import cellular_characters, gaudin_modules, regular_reconstruction
from dihedral_cm.invariants import (
    VARS,
    generators,
    module_decompose,
    recompose,
    reynolds,
    verify_invariant_relations,
    verify_partial_fractions,
)
from dihedral_cm.spectrum import (
    central_generators,
    compare_fixed_points,
    compare_minimal_polynomial,
    compare_omega,
    compare_presentation,
    cuspidal_families,
    cuspidality_test,
    families_partition,
    lower_powers_independent,
)

from helpers import random_pbw


def _report(n: int, failures: list) -> None:
    print(f"\ncriterion {n}: {'PASS' if not failures else 'FAIL'}")
    for f in failures:
        print(f"  {f}")
    assert not failures, failures


def test_criterion_01_partial_fractions():
    start = time.perf_counter()
    failures = [(d, k) for d in range(3, 13) for k in range(1, d + 1) if not verify_partial_fractions(d, k)]
    elapsed = time.perf_counter() - start
    if elapsed >= 5:
        failures.append(f"runtime {elapsed:.1f} s")
    _report(1, failures)


def test_criterion_02_invariant_presentation():
    failures = []
    rng = random.Random(2)
    for d in range(3, 9):
        failures += [(d, name) for name, ok in verify_invariant_relations(d) if not ok]
        done = 0
        while done < 200:
            terms = {tuple(rng.randint(0, 3) for _ in VARS): rng.randint(-3, 3) or 1
                     for _ in range(rng.randint(1, 3))}
            f = reynolds(d, MultiPoly(VARS, terms))
            if f.is_zero():
                continue
            done += 1
            if recompose(module_decompose(f, d), d) != f:
                failures.append((d, "round trip", f.to_str()))
    _report(2, failures)


def test_criterion_03_pbw_engine():
    failures = []
    for d in (3, 4, 6):
        rng = random.Random(100 + d)
        for n in range(100):
            u, v, w = (random_pbw(rng, d) for _ in range(3))
            if pbw_multiply(pbw_multiply(u, v), w) != pbw_multiply(u, pbw_multiply(v, w)):
                failures.append((d, "associativity", n))
    for d in (3, 4, 5, 6):
        named = generators(d).named()
        if len(named) != d + 4:
            failures.append((d, "generator count", len(named)))
        for name, f in named.items():
            z = trunc_inverse(f, d)
            if not (trunc(z) - f).is_zero():
                failures.append((d, "trunc of lift", name))
            if not is_central(z):
                failures.append((d, "not central", name))
    _report(3, failures)


def test_criterion_04_centre_presentations():
    failures = []
    for d in (3, 4, 6):
        failures += [(d, c.name, c.detail) for c in compare_presentation(d) if not c.ok]
    _report(4, failures)


def test_criterion_05_minimal_polynomials():
    failures = []
    for d in (3, 4, 6):
        c = compare_minimal_polynomial(d)
        if not c.ok:
            failures.append((d, c.detail))
        if not lower_powers_independent(d):
            failures.append((d, "lower powers of eu are dependent"))
    _report(5, failures)


def test_criterion_06_poisson_anchor():
    failures = []
    for d in (3, 4, 6):
        g = central_generators(d)
        q, Q, eu = g.q, g.Q, g.eu
        if poisson_bracket(q, Q) != eu:
            failures.append((d, "{q, Q} != eu"))
        if poisson_bracket(q, Q) != -poisson_bracket(Q, q):
            failures.append((d, "antisymmetry"))
        lhs = poisson_bracket(q, multiply_by_central(Q, eu))
        rhs = multiply_by_central(poisson_bracket(q, Q), eu) + multiply_by_central(poisson_bracket(q, eu), Q)
        if lhs != rhs:
            failures.append((d, "Leibniz"))
        jac = (poisson_bracket(q, poisson_bracket(Q, eu)) + poisson_bracket(Q, poisson_bracket(eu, q))
               + poisson_bracket(eu, poisson_bracket(q, Q)))
        if not jac.is_zero():
            failures.append((d, "Jacobi"))
    _report(6, failures)


def test_criterion_07_families():
    failures = []
    for d in (3, 4, 5, 6):
        for regime in fixtures.regimes_for(d):
            a, b = fixtures.representative(regime)
            got = sorted(sorted(F) for F in families_partition(d, a, b))
            want = sorted(sorted(F) for F in fixtures.families_reference(d, regime))
            if got != want:
                failures.append((d, regime, got, want))
        failures += [(d, c.name, c.detail) for c in compare_omega(d) if not c.ok]
    _report(7, failures)


def test_criterion_08_cellular_characters():
    failures = []
    for d in (3, 4, 5, 6):
        for regime in fixtures.regimes_for(d):
            a, b = fixtures.representative(regime)
            got = sorted(sorted(c.multiplicities.items()) for c in cellular_characters(d, a, b))
            want = sorted(sorted(m.items()) for m in fixtures.cellular_reference(d, regime))
            if got != want:
                failures.append((d, regime, got, want))
            if not regular_reconstruction(d, gaudin_modules(d, a, b)):
                failures.append((d, regime, "regular character"))
    _report(8, failures)


def test_criterion_09_cuspidal_families():
    failures = []
    for d in (3, 4, 5, 6):
        for regime in fixtures.regimes_for(d):
            a, b = fixtures.representative(regime)
            got = sorted(sorted(F) for F in cuspidal_families(d, a, b))
            want = sorted(sorted(F) for F in fixtures.cuspidal_reference(d, regime))
            if got != want:
                failures.append((d, regime, got, want))
            for F in families_partition(d, a, b):
                if len(F) == 1 and cuspidality_test(F, d, a, b):
                    failures.append((d, regime, "singleton is cuspidal", F))
    # d = 4 with ab = 0 has no cuspidal family, d = 6 with ab = 0 does
    for a, b in ((1, 0), (0, 1)):
        if cuspidal_families(4, a, b):
            failures.append((4, (a, b), "unexpected cuspidal family"))
        if not cuspidal_families(6, a, b):
            failures.append((6, (a, b), "missing cuspidal family"))
    _report(9, failures)


def test_criterion_10_fixed_points():
    failures = []
    cases = fixtures.fixed_point_cases()
    for need in ((3, 3), (5, 5), (3, 2), (4, 4), (6, 6)):
        if need not in cases:
            failures.append((need, "no reference data"))
    for d, m in cases:
        c = compare_fixed_points(d, m)
        if not c.ok:
            failures.append((d, m, c.detail))
    _report(10, failures)


def test_criterion_11_lie_algebras():
    failures = []
    try:
        r = verify_aleph(4, 1, 1)
        morphism = next(detail for name, _, detail in r.checks if name == "morphism")
        if not r.ok or not morphism.startswith("28 pairs"):
            failures.append(("d=4", r.checks))
        r = verify_aleph(6, 2, 1)
        if not r.ok:
            failures.append(("d=6 (2,1)", r.checks))
        r = verify_aleph(6, 1, 1)
        names = {name for name, _, _ in r.checks}
        if not r.ok or not {"kernel", "kernel commutative", "ad eu weights"} <= names:
            failures.append(("d=6 (1,1)", r.checks))
    except MorphismFailure as exc:
        failures.append(("morphism", exc.pair))
    _report(11, failures)


def test_criterion_12_permutation_premises():
    failures = []
    for d in (3, 5, 7, 9):
        s, one, c = GroupElement.reflection(d, 0), GroupElement.identity(d), GroupElement.rotation(d)
        if iota_permutation(s, one).parity() != 1:
            failures.append((d, "iota(s, 1) is even"))
        perm = iota_permutation(c, c)
        fixed = [w for w in range(2 * d) if perm.images[w] == w]
        moving = [cyc for cyc in perm.cycles() if len(cyc) > 1]
        if sorted(fixed) != [w for w in range(2 * d) if not code_is_reflection(d, w)]:
            failures.append((d, "fixed points", fixed))
        if len(moving) != 1 or sorted(moving[0]) != [w for w in range(2 * d) if code_is_reflection(d, w)]:
            failures.append((d, "reflection cycle", moving))
    _report(12, failures)
