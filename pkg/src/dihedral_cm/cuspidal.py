"""Lie algebras on the cotangent space at cuspidal points.

At a cuspidal point every generator g - Omega_F(g) lies in the maximal ideal m
and {m, m} is contained in m, so the Poisson bracket descends to m/m^2.  When
Omega_F vanishes on all generators, the class of {g_i, g_j} in m/m^2 is the
degree-one part of its expression in the generators.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from . import fixtures
from .linalg import determinant, nullspace, rank
from .spectrum import (
    _check_params,
    central_character,
    cuspidal_families,
    derive_relations,
    generator_bracket,
    generator_names,
)

__all__ = [
    "CotangentLie",
    "AlephReport",
    "NotCuspidalPoint",
    "MorphismFailure",
    "lie_structure",
    "verify_aleph",
]

Vector = List[Fraction]
Mat = List[List[Fraction]]


class NotCuspidalPoint(ValueError):
    """No cuspidal family, or a generator does not vanish at the cuspidal point."""


class MorphismFailure(ArithmeticError):
    def __init__(self, pair: Tuple[str, str], detail: str = "") -> None:
        super().__init__(f"bracket of {pair[0]}, {pair[1]} is not preserved {detail}".strip())
        self.pair = pair


def _linear_part(expr, basis: Sequence[str], a: Fraction, b: Fraction) -> Tuple[Fraction, Vector]:
    """Constant term and degree-one coefficients in the generators after A, B -> a, b."""
    f = expr.subs({v: x for v, x in (("A", a), ("B", b)) if v in expr.vars})
    const = Fraction(0)
    vec = [Fraction(0)] * len(basis)
    for e, c in f.terms.items():
        deg = sum(e)
        if deg == 0:
            const += Fraction(c)
        elif deg == 1:
            vec[basis.index(f.vars[e.index(1)])] += Fraction(c)
    return const, vec


@dataclass
class CotangentLie:
    d: int
    a: Fraction
    b: Fraction
    family: Tuple[str, ...]
    point: Dict[str, Fraction]
    basis: List[str]
    brackets: Dict[Tuple[int, int], Vector] = field(repr=False)

    def bracket(self, u: Vector, v: Vector) -> Vector:
        n = len(self.basis)
        out = [Fraction(0)] * n
        for i in range(n):
            if not u[i]:
                continue
            for j in range(n):
                if not v[j] or i == j:
                    continue
                c = u[i] * v[j]
                for k, x in enumerate(self.brackets[(i, j)]):
                    if x:
                        out[k] += c * x
        return out

    def unit(self, name: str) -> Vector:
        v = [Fraction(0)] * len(self.basis)
        v[self.basis.index(name)] = Fraction(1)
        return v

    def is_antisymmetric(self) -> bool:
        n = len(self.basis)
        return all(self.brackets[(i, j)] == [-x for x in self.brackets[(j, i)]]
                   for i in range(n) for j in range(n) if i != j)

    def jacobi_holds(self) -> bool:
        n = len(self.basis)
        units = [self.unit(g) for g in self.basis]
        for i, j, k in combinations(range(n), 3):
            t1 = self.bracket(units[i], self.bracket(units[j], units[k]))
            t2 = self.bracket(units[j], self.bracket(units[k], units[i]))
            t3 = self.bracket(units[k], self.bracket(units[i], units[j]))
            if any(x + y + z for x, y, z in zip(t1, t2, t3)):
                return False
        return True

    def ad_eu_weights(self) -> Optional[Dict[str, Fraction]]:
        """Eigenvalue of ad(eu) on each basis vector, or None if ad(eu) is not diagonal."""
        eu = self.unit("eu")
        out = {}
        for g in self.basis:
            img = self.bracket(eu, self.unit(g))
            k = self.basis.index(g)
            if any(x for j, x in enumerate(img) if j != k):
                return None
            out[g] = img[k]
        return out


def expected_weights(d: int) -> Dict[str, int]:
    """Z-degrees of the generators: q -2, Q 2, r -d, R d, eu 0, a_i 2i - d."""
    out = {"q": -2, "r": -d, "Q": 2, "R": d, "eu": 0}
    out.update({f"a{i}": 2 * i - d for i in range(1, d)})
    return out


def lie_structure(d: int, a, b, family: Optional[Sequence[str]] = None) -> CotangentLie:
    """Structure constants of m/m^2 at the cuspidal point of (d, a, b)."""
    a, b = _check_params(d, a, b)
    if family is None:
        fams = cuspidal_families(d, a, b)
        if not fams:
            raise NotCuspidalPoint(f"no cuspidal family for d={d}, (a, b)=({a}, {b})")
        family = fams[0]
    family = tuple(family)
    point = central_character(d, family[0], a, b)
    nonzero = {g: v for g, v in point.items() if v != 0}
    if nonzero:
        raise NotCuspidalPoint(f"generators not vanishing at the cuspidal point: {sorted(nonzero)}")
    basis = generator_names(d)
    brackets: Dict[Tuple[int, int], Vector] = {}
    for i, j in combinations(range(len(basis)), 2):
        const, vec = _linear_part(generator_bracket(d, basis[i], basis[j]), basis, a, b)
        if const:
            raise NotCuspidalPoint(f"{{{basis[i]}, {basis[j]}}} does not vanish at the point")
        brackets[(i, j)] = vec
        brackets[(j, i)] = [-x for x in vec]
    return CotangentLie(d, a, b, family, point, basis, brackets)


def relations_in_square(d: int, a, b) -> bool:
    """Every relation has zero linear part at the origin, so the generators are a basis of m/m^2."""
    a, b = _check_params(d, a, b)
    basis = generator_names(d)
    for rel in derive_relations(d):
        const, vec = _linear_part(rel.difference(), basis, a, b)
        if const or any(vec):
            return False
    return True


def antisymmetry_check(d: int, a, b) -> bool:
    """{u, v} + {v, u} = 0 with both orders computed independently."""
    a, b = _check_params(d, a, b)
    basis = generator_names(d)
    for u, v in combinations(basis, 2):
        f = generator_bracket(d, u, v) + generator_bracket(d, v, u)
        if not f.subs({k: x for k, x in (("A", a), ("B", b)) if k in f.vars}).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# the maps to matrices

def _mat_mul(m1: Mat, m2: Mat) -> Mat:
    n = len(m1)
    return [[sum((m1[i][k] * m2[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def _commutator(m1: Mat, m2: Mat) -> Mat:
    p, q = _mat_mul(m1, m2), _mat_mul(m2, m1)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(p, q)]


def _combine(images: Dict[str, Mat], basis: Sequence[str], vec: Vector) -> Mat:
    n = len(next(iter(images.values())))
    out = [[Fraction(0)] * n for _ in range(n)]
    for g, c in zip(basis, vec):
        if c:
            for i in range(n):
                for j in range(n):
                    out[i][j] += c * images[g][i][j]
    return out


def _flat(m: Mat) -> Vector:
    return [x for row in m for x in row]


@dataclass
class AlephReport:
    d: int
    a: Fraction
    b: Fraction
    checks: List[Tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)


def _symplectic_forms(mats: Sequence[Mat]) -> List[Vector]:
    """Antisymmetric J with M^T J + J M = 0 for every M, as flattened vectors."""
    n = len(mats[0])
    idx = lambda i, j: i * n + j
    rows = []
    for i in range(n):
        for j in range(i, n):
            row = [Fraction(0)] * (n * n)
            row[idx(i, j)] += 1
            row[idx(j, i)] += 1
            rows.append(row)
    for M in mats:
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    row[idx(k, j)] += M[k][i]  # (M^T J)_ij = sum_k M_ki J_kj
                    row[idx(i, k)] += M[k][j]  # (J M)_ij = sum_k J_ik M_kj
                rows.append(row)
    return nullspace(rows, n * n)


def verify_aleph(d: int, a, b, strict: bool = True) -> AlephReport:
    """Check the transcribed maps m/m^2 -> gl_n against the computed brackets.

    With ``strict`` a broken bracket raises MorphismFailure naming the pair.
    """
    a, b = _check_params(d, a, b)
    if d not in (4, 6):
        raise ValueError("matrix realizations are available for d = 4 and d = 6")
    if d == 4 and a != b:
        raise ValueError("d = 4 requires a = b")
    lie = lie_structure(d, a, b)
    images = fixtures.aleph_images(d, a, b)
    basis = lie.basis
    report = AlephReport(d, a, b)

    failures = []
    for u, v in combinations(basis, 2):
        lhs = _combine(images, basis, lie.bracket(lie.unit(u), lie.unit(v)))
        rhs = _commutator(images[u], images[v])
        if lhs != rhs:
            failures.append((u, v))
    if failures and strict:
        raise MorphismFailure(failures[0])
    report.add("morphism", not failures, f"{len(list(combinations(basis, 2)))} pairs"
               + (f", failing {failures}" if failures else ""))

    flats = [_flat(images[g]) for g in basis]
    rk = rank(flats)
    n = len(images[basis[0]])
    if d == 4:
        traces = all(sum(images[g][i][i] for i in range(n)) == 0 for g in basis)
        report.add("rank", rk == 8 and a != 0, f"rank {rk}")
        report.add("trace zero", traces)
    elif a * a != b * b:
        report.add("rank", rk == 10, f"rank {rk}")
        forms = _symplectic_forms([images[g] for g in basis])
        ok = len(forms) == 1
        detail = f"{len(forms)}-dimensional space of invariant forms"
        if ok:
            J = [forms[0][i * n:(i + 1) * n] for i in range(n)]
            ok = determinant(J) != 0
            detail += ", nondegenerate" if ok else ", degenerate"
        report.add("symplectic form", ok, detail)
    elif a != 0:
        _check_degenerate(lie, images, report)
    else:
        report.add("regime", False, "a = b = 0 has no cuspidal matrix realization")
    return report


def _check_degenerate(lie: CotangentLie, images: Dict[str, Mat], report: AlephReport) -> None:
    basis = lie.basis
    flats = [_flat(images[g]) for g in basis]
    # kernel of the linear map sum_g c_g image(g)
    cols = [[flats[g][k] for g in range(len(basis))] for k in range(len(flats[0]))]
    kernel = nullspace(cols, len(basis))
    expected = ["r", "R"] + [g for g in basis if g.startswith("a")]
    support = {basis[i] for v in kernel for i, x in enumerate(v) if x}
    ok = len(kernel) == 7 and support <= set(expected)
    report.add("kernel", ok, f"dimension {len(kernel)}, spanned by {sorted(support)}")
    image_rank = rank(flats)
    span_rank = rank([flats[basis.index(g)] for g in ("q", "Q", "eu")])
    report.add("image", image_rank == 3 and span_rank == 3, f"rank {image_rank}")
    comm = all(not any(lie.bracket(u, v)) for u, v in combinations(kernel, 2))
    report.add("kernel commutative", comm)
    weights = lie.ad_eu_weights()
    kw = sorted(weights[g] for g in expected) if weights else None
    report.add("ad eu weights", kw == list(range(-6, 7, 2)), ", ".join(str(w) for w in kw) if kw else "not diagonal")
    if weights:
        by_weight = {weights[g]: g for g in expected}
        ok = True
        for w in range(-6, 6, 2):
            img = lie.bracket(lie.unit("Q"), lie.unit(by_weight[w]))
            if not img[basis.index(by_weight[w + 2])] or any(
                    x for j, x in enumerate(img) if basis[j] != by_weight[w + 2]):
                ok = False
        report.add("raising operator", ok, "ad Q maps each weight space onto the next")
