"""The centre Z of the generic rational Cherednik algebra at t = 0.

Central generators are lifted from the invariant ring with ``trunc_inverse``.
Since Trunc is P-linear and injective on Z, identities between central elements
are checked and derived on their truncations.  The only subtlety is that the
basis element ``eu^k`` means the k-th power of the central Euler element, whose
truncation differs from eu0^k by parameter terms; ``decompose_central`` accounts
for that.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .arith import MultiPoly, merge_vars
from .cherednik import (
    PBWElement,
    ParameterMismatch,
    evaluate_central,
    multiply_by_central,
    omega,
    poisson_bracket_trunc,
    trunc,
    trunc_inverse,
)
from .dihedral import Character, irr_characters
from .linalg import determinant, solve_sparse
from .invariants import (
    gen_vars,
    generators,
    module_decompose,
    relation_label,
    relation_names,
    relation_rhs0,
    z_degree,
)

__all__ = [
    "BudgetExceeded",
    "CentralGenerators",
    "PresentationRelation",
    "FixedPointPresentation",
    "central_generators",
    "eu_power",
    "decompose_central",
    "derive_relations",
    "verify_relation",
    "minimal_polynomial_eu",
    "omega",
    "omega_table",
    "families_partition",
    "cuspidality_test",
    "fixed_point_presentation",
    "generator_names",
    "ParameterMismatch",
]

MAX_D = 6


class BudgetExceeded(RuntimeError):
    """The requested computation is outside the supported range of d."""


def generator_names(d: int) -> List[str]:
    return ["q", "r", "Q", "R", "eu"] + [f"a{i}" for i in range(1, d)]


@dataclass
class CentralGenerators:
    d: int
    q: PBWElement
    r: PBWElement
    Q: PBWElement
    R: PBWElement
    eu: PBWElement
    a: Dict[int, PBWElement]

    def named(self) -> Dict[str, PBWElement]:
        out = {"q": self.q, "r": self.r, "Q": self.Q, "R": self.R, "eu": self.eu}
        for i, z in self.a.items():
            out[f"a{i}"] = z
        return out


_STORE = None


def set_generator_store(store) -> None:
    """Use ``store`` (with get(d, name) / put(d, name, element)) for central lifts."""
    global _STORE
    _STORE = store
    central_generators.cache_clear()


def _lift(d: int, name: str, f: MultiPoly) -> PBWElement:
    if _STORE is not None:
        hit = _STORE.get(d, name)
        if hit is not None:
            return hit
    z = trunc_inverse(f, d)
    if _STORE is not None:
        _STORE.put(d, name, z)
    return z


@lru_cache(maxsize=None)
def central_generators(d: int) -> CentralGenerators:
    g = generators(d)
    a = {i: _lift(d, f"a{i}", g.a0[i]) for i in range(1, d)}
    return CentralGenerators(
        d,
        PBWElement.from_poly(d, g.q),
        PBWElement.from_poly(d, g.r),
        PBWElement.from_poly(d, g.Q),
        PBWElement.from_poly(d, g.R),
        _lift(d, "eu", g.eu0),
        a,
    )


@lru_cache(maxsize=None)
def eu_power(d: int, k: int) -> PBWElement:
    if k == 0:
        return PBWElement.scalar(d, 1)
    eu = central_generators(d).eu
    if k == 1:
        return eu
    return multiply_by_central(eu_power(d, k - 1), eu)


@lru_cache(maxsize=None)
def _eu0_power_expansion(d: int, k: int) -> MultiPoly:
    """eu0^k written in terms of genuine central powers eu^j."""
    names = gen_vars(d, ("A", "B"))
    top = MultiPoly.var("eu", names) ** k
    if k < 2:
        return top
    eu0 = generators(d).eu0
    correction = trunc(eu_power(d, k)) - eu0 ** k
    if correction.is_zero():
        return top
    return top - decompose_central(correction, d)


def decompose_central(f: MultiPoly, d: int) -> MultiPoly:
    """Express trunc(z) = f as a P[A, B]-combination of central basis elements.

    The returned polynomial in q, r, Q, R, eu, a_i, A, B evaluates (with eu^k the
    k-th power of the central Euler element) to the unique central z with
    trunc(z) = f.
    """
    raw = module_decompose(f, d)
    names = merge_vars(gen_vars(d, ("A", "B")), raw.vars)
    raw = raw.with_vars(names)
    ie = names.index("eu")
    out = MultiPoly(names, {})
    for e, c in raw.terms.items():
        k = e[ie]
        if k < 2:
            out = out + MultiPoly(names, {e: c})
            continue
        rest = list(e)
        rest[ie] = 0
        coef = MultiPoly(names, {tuple(rest): c})
        out = out + coef * _eu0_power_expansion(d, k).with_vars(names)
    return out


# ---------------------------------------------------------------------------
# relations

@dataclass
class PresentationRelation:
    name: str
    left: MultiPoly
    right: MultiPoly

    def difference(self) -> MultiPoly:
        names = merge_vars(self.left.vars, self.right.vars)
        return self.left.with_vars(names) - self.right.with_vars(names)

    def to_str(self) -> str:
        return f"{self.left.to_str()} = {self.right.to_str()}"


def _check_budget(d: int) -> None:
    if d < 3:
        raise ValueError("d must be at least 3")
    if d > MAX_D:
        raise BudgetExceeded(f"d = {d} is beyond the supported range (d <= {MAX_D})")


def _relation_left(d: int, i: int, j: Optional[int]) -> Tuple[MultiPoly, PBWElement, PBWElement]:
    gens = central_generators(d)
    names = gen_vars(d, ("A", "B"))
    if j is None:
        return MultiPoly.var("eu", names) * MultiPoly.var(f"a{i}", names), gens.eu, gens.a[i]
    return MultiPoly.var(f"a{i}", names) * MultiPoly.var(f"a{j}", names), gens.a[i], gens.a[j]


@lru_cache(maxsize=None)
def _derive_one(d: int, i: int, j: Optional[int]) -> PresentationRelation:
    left, z1, z2 = _relation_left(d, i, j)
    prod = multiply_by_central(z1, z2, project=0)
    right = decompose_central(trunc(prod), d)
    return PresentationRelation(relation_label(i, j), left, right)


def derive_relations(d: int, verify: bool = False) -> List[PresentationRelation]:
    """Deformed relations (Z_i), (Z_{i,j}) of the centre, one per c=0 relation.

    Each right side is the unique P[A, B]-combination of {1, eu, ..., eu^d, a_i}
    equal to the left side in Z.  With ``verify`` every relation is also checked
    on full PBW elements.
    """
    _check_budget(d)
    out = [_derive_one(d, i, j) for i, j in relation_names(d)]
    if verify:
        for rel in out:
            if not verify_relation(d, rel):
                raise ArithmeticError(f"derived relation {rel.name} does not hold")
    return out


def verify_relation(d: int, rel: PresentationRelation, full: bool = True) -> bool:
    """Check that a relation holds in Z.

    With ``full`` both sides are evaluated as PBW elements; otherwise only their
    truncations are compared (equivalent, as Trunc is injective on Z).
    """
    gens = central_generators(d).named()
    diff = rel.difference()
    if full:
        return evaluate_central(diff, gens, d).is_zero()
    return trunc(evaluate_central_trunc(diff, d)).is_zero()


def evaluate_central_trunc(expr: MultiPoly, d: int) -> PBWElement:
    """Identity component of a polynomial in central generators."""
    gens = central_generators(d).named()
    result = PBWElement.zero(d)
    for e, c in expr.terms.items():
        factors: List[PBWElement] = []
        params = {}
        for v, p in zip(expr.vars, e):
            if not p:
                continue
            if v in ("A", "B"):
                params[v] = p
            else:
                factors.extend([gens[v]] * p)
        term = PBWElement.from_poly(d, MultiPoly.monomial(("A", "B"), params, c))
        for k, z in enumerate(factors):
            term = multiply_by_central(term, z, project=0 if k == len(factors) - 1 else None)
        result = result + term
    return result


def relations_zero_parameter(rels: Sequence[PresentationRelation]) -> List[PresentationRelation]:
    out = []
    for rel in rels:
        sub = {"A": 0, "B": 0}
        out.append(PresentationRelation(rel.name, rel.left.subs(sub), rel.right.subs(sub)))
    return out


def undeformed_relations(d: int) -> List[PresentationRelation]:
    names = gen_vars(d, ())
    sym = {v: MultiPoly.var(v, names) for v in names}
    out = []
    for i, j in relation_names(d):
        left = sym["eu"] * sym[f"a{i}"] if j is None else sym[f"a{i}"] * sym[f"a{j}"]
        out.append(PresentationRelation(relation_label(i, j), left, relation_rhs0(d, i, j, sym)))
    return out


# ---------------------------------------------------------------------------
# minimal polynomial of eu

def _p_param_monomials(d: int, m: int) -> List[Dict[str, int]]:
    """Monomials in q, r, Q, R, A, B of bidegree (m, m)."""
    out = []
    for s in range(m + 1):
        rest = m - s
        for bq in range(rest // 2 + 1):
            left = rest - 2 * bq
            if left % d:
                continue
            br = left // d
            for bQ in range(rest // 2 + 1):
                left2 = rest - 2 * bQ
                if left2 % d:
                    continue
                bR = left2 // d
                for i in range(s + 1):
                    out.append({"q": bq, "r": br, "Q": bQ, "R": bR, "A": i, "B": s - i})
    return out


def _split_basis(dec: MultiPoly, d: int) -> Dict[str, MultiPoly]:
    """Coordinates of a decomposition along the labels 1, eu^k, a_i."""
    names = merge_vars(gen_vars(d, ("A", "B")), dec.vars)
    dec = dec.with_vars(names)
    coord_vars = ("q", "r", "Q", "R", "A", "B")
    idx = [names.index(v) for v in coord_vars]
    ie = names.index("eu")
    ia = {i: names.index(f"a{i}") for i in range(1, d)}
    out: Dict[str, Dict] = {}
    for e, c in dec.terms.items():
        label = "1"
        if e[ie]:
            label = f"eu^{e[ie]}"
        for i, k in ia.items():
            if e[k]:
                label = f"a{i}"
        key = tuple(e[k] for k in idx)
        out.setdefault(label, {})[key] = c
    return {k: MultiPoly(coord_vars, v) for k, v in out.items()}


@lru_cache(maxsize=None)
def eu_power_coordinates(d: int, k: int) -> Dict[str, MultiPoly]:
    return _split_basis(decompose_central(trunc(eu_power(d, k)), d), d)


def minimal_polynomial_eu(d: int, var: str = "t") -> MultiPoly:
    """Monic minimal polynomial of eu over P[A, B].

    Z is free of rank 2d over P, and 1, eu, ..., eu^(2d-1) are P-linearly
    independent (see ``lower_powers_independent``), so the minimal polynomial
    has degree 2d.  Its coefficients c_k are bi-homogeneous of bidegree
    (2d-k, 2d-k); they are found by an exact linear solve over Q on the
    coordinates of eu^k in the free basis.
    """
    _check_budget(d)
    n = 2 * d
    coords = [eu_power_coordinates(d, k) for k in range(n + 1)]
    unknowns = []
    for k in range(n):
        for mono in _p_param_monomials(d, n - k):
            unknowns.append((k, tuple(sorted(mono.items()))))
    coord_vars = ("q", "r", "Q", "R", "A", "B")
    equations: Dict[Tuple[str, Tuple[int, ...]], Dict] = {}
    for (k, mono) in unknowns:
        m = MultiPoly.monomial(coord_vars, dict(mono))
        for label, poly in coords[k].items():
            for e, c in (poly * m).terms.items():
                equations.setdefault((label, e), {})
                eq = equations[(label, e)]
                eq[(k, mono)] = eq.get((k, mono), 0) + c
    rhs_map: Dict[Tuple[str, Tuple[int, ...]], object] = {}
    for label, poly in coords[n].items():
        for e, c in poly.terms.items():
            rhs_map[(label, e)] = c
            equations.setdefault((label, e), {})
    keys = list(equations)
    sol = solve_sparse([equations[k] for k in keys], [rhs_map.get(k, 0) for k in keys], unknowns)
    names = ("t",) if var == "t" else (var,)
    names = merge_vars(names, coord_vars)
    t = MultiPoly.var(var, names)
    out = t ** n
    for (k, mono), v in sol.items():
        if v:
            out = out - MultiPoly.monomial(names, dict(mono), v) * t ** k
    return out.trim_vars()


def lower_powers_independent(d: int, point: Optional[Mapping[str, Fraction]] = None) -> bool:
    """1, eu, ..., eu^(2d-1) are P-linearly independent.

    The 2d x 2d coordinate matrix is evaluated at a rational point; a nonzero
    determinant there certifies a nonzero determinant over Frac(P[A, B]).
    """
    n = 2 * d
    if point is None:
        point = {"q": Fraction(2), "r": Fraction(3), "Q": Fraction(5), "R": Fraction(7),
                 "A": Fraction(11), "B": Fraction(13) if d % 2 == 0 else Fraction(11)}
    labels = ["1"] + [f"eu^{k}" for k in range(1, d + 1)] + [f"a{i}" for i in range(1, d)]
    rows = []
    for k in range(n):
        c = eu_power_coordinates(d, k)
        rows.append([c[l].subs(point).constant_value() if l in c else 0 for l in labels])
    return determinant(rows) != 0


# ---------------------------------------------------------------------------
# central characters and Calogero-Moser families

def omega_table(d: int, element: str = "eu") -> Dict[str, MultiPoly]:
    """Omega_chi of a central generator for every irreducible character, in A, B."""
    z = central_generators(d).named()[element]
    return {chi.name: omega(chi, z) for chi in irr_characters(d)}


@lru_cache(maxsize=None)
def _omega_all(d: int) -> Dict[str, Dict[str, MultiPoly]]:
    gens = central_generators(d).named()
    return {chi.name: {g: omega(chi, z) for g, z in gens.items()} for chi in irr_characters(d)}


def _check_params(d: int, a, b) -> Tuple[Fraction, Fraction]:
    a, b = Fraction(a), Fraction(b)
    if d % 2 and a != b:
        raise ParameterMismatch("for odd d the parameters must satisfy a = b")
    return a, b


def _at(f: MultiPoly, a: Fraction, b: Fraction):
    v = f.subs({k: val for k, val in (("A", a), ("B", b)) if k in f.vars})
    c = v.constant_value()
    return c


def central_character(d: int, chi_name: str, a, b) -> Dict[str, Fraction]:
    """Values Omega_chi(g) at (a, b) for all generators g."""
    a, b = _check_params(d, a, b)
    return {g: _at(v, a, b) for g, v in _omega_all(d)[chi_name].items()}


def families_partition(d: int, a, b) -> List[Tuple[str, ...]]:
    """Blocks of Irr(W) under equality of Omega_chi(eu) at (a, b)."""
    a, b = _check_params(d, a, b)
    blocks: Dict[object, List[str]] = {}
    for chi in irr_characters(d):
        val = _at(omega_table_cached(d)[chi.name], a, b)
        blocks.setdefault(val, []).append(chi.name)
    return [tuple(v) for v in blocks.values()]


@lru_cache(maxsize=None)
def omega_table_cached(d: int) -> Dict[str, MultiPoly]:
    return omega_table(d)


# ---------------------------------------------------------------------------
# Poisson brackets of generators and cuspidality

@lru_cache(maxsize=None)
def generator_bracket(d: int, g1: str, g2: str) -> MultiPoly:
    """{g1, g2} as a P[A, B]-combination of the central basis."""
    gens = central_generators(d).named()
    return decompose_central(poisson_bracket_trunc(gens[g1], gens[g2]), d)


def bracket_table(d: int) -> Dict[Tuple[str, str], MultiPoly]:
    names = generator_names(d)
    return {(u, v): generator_bracket(d, u, v) for k, u in enumerate(names) for v in names[k + 1:]}


def evaluate_at(expr: MultiPoly, values: Mapping[str, object], a, b):
    vals = dict(values)
    vals["A"], vals["B"] = Fraction(a), Fraction(b)
    return expr.subs({k: v for k, v in vals.items() if k in expr.vars}).constant_value()


def cuspidality_test(family: Sequence, d: int, a, b) -> bool:
    """True iff the maximal ideal of the family's point is a Poisson ideal.

    With m generated by g - Omega_F(g), it suffices that Omega_F({g_i, g_j})
    vanishes for every pair of generators.
    """
    a, b = _check_params(d, a, b)
    names = [getattr(c, "name", c) for c in family]
    if not names:
        raise ValueError("empty family")
    point = central_character(d, names[0], a, b)
    for other in names[1:]:
        if central_character(d, other, a, b) != point:
            raise ValueError("characters do not lie in one family")
    for (u, v), br in bracket_table(d).items():
        if evaluate_at(br, point, a, b) != 0:
            return False
    return True


def cuspidal_families(d: int, a, b) -> List[Tuple[str, ...]]:
    return [F for F in families_partition(d, a, b) if cuspidality_test(F, d, a, b)]


# ---------------------------------------------------------------------------
# fixed points of mu_m

@dataclass
class FixedPointPresentation:
    """Generators of Z-degree divisible by m and the residual relations.

    ``eliminated`` maps a surviving generator g to a polynomial h in the other
    survivors such that (g - h)^2 lies in the residual ideal; on the reduced
    fixed-point variety g is therefore a function of the rest, and
    ``reduced_relations`` is the presentation with g substituted.
    """

    d: int
    m: int
    generators: List[Tuple[str, int]]
    relations: List[MultiPoly]
    eliminated: Dict[str, MultiPoly] = field(default_factory=dict)
    reduced_relations: List[MultiPoly] = field(default_factory=list)

    def generator_names(self) -> List[str]:
        return [g for g, _ in self.generators]

    def reduced_generators(self) -> List[str]:
        return [g for g, _ in self.generators if g not in self.eliminated]


def _prune(rels: List[MultiPoly], gens: Sequence[str]) -> List[MultiPoly]:
    from .symbolic import ideal_contains, proportional

    uniq: List[MultiPoly] = []
    for r in rels:
        if r.is_zero() or any(proportional(r, u) for u in uniq):
            continue
        uniq.append(r)
    # drop residuals that lie in the ideal of the others, largest first
    order = sorted(range(len(uniq)), key=lambda k: (-len(uniq[k].terms), k))
    keep = set(range(len(uniq)))
    for k in order:
        others = [uniq[j] for j in keep if j != k]
        if others and ideal_contains(others, uniq[k], list(gens) + ["A", "B"]):
            keep.discard(k)
    return [uniq[k] for k in sorted(keep)]


def _linear_factors(rel: MultiPoly, candidates: Sequence[str]) -> List[Tuple[str, MultiPoly]]:
    """Factors of rel of the form g - h with g in candidates and h free of g."""
    import sympy

    from .symbolic import from_sympy, to_sympy

    out = []
    _, factors = sympy.factor_list(to_sympy(rel))
    for fac, _ in factors:
        f = from_sympy(fac)
        for g in candidates:
            if g not in f.vars or f.degree(g) != 1:
                continue
            parts = f.coefficients_in(g)
            lead = parts.get(1)
            if lead is None or not lead.is_constant():
                continue
            h = -parts.get(0, MultiPoly((), {})) / lead.constant_value()
            out.append((g, h))
    return out


def _eliminate(rels: List[MultiPoly], survivors: Sequence[str]) -> Tuple[Dict[str, MultiPoly], List[MultiPoly]]:
    from .symbolic import ideal_contains

    gens = list(survivors) + ["A", "B"]
    eliminated: Dict[str, MultiPoly] = {}
    current = list(rels)
    candidates = [g for g in survivors if g.startswith("a")]
    changed = True
    while changed:
        changed = False
        for rel in current:
            for g, h in _linear_factors(rel, [c for c in candidates if c not in eliminated]):
                if h.used_vars() and g in h.used_vars():
                    continue
                diff = MultiPoly.var(g) - h
                if ideal_contains(current, diff * diff, gens):
                    eliminated[g] = h
                    current = [r.subs({g: h}) if g in r.vars else r for r in current]
                    current = _prune([r for r in current if not r.is_zero()],
                                     [v for v in survivors if v not in eliminated])
                    changed = True
                    break
            if changed:
                break
    return eliminated, current


def fixed_point_presentation(d: int, m: int, prune: Optional[bool] = None) -> FixedPointPresentation:
    """Presentation of the mu_m-fixed subvariety obtained from the derived relations.

    Generators of Z-degree not divisible by m are set to zero; the surviving
    relations are simplified and, when ``prune`` (default: some generator was
    killed), redundant ones are removed by ideal membership and generators that
    are functions of the others on the reduced locus are eliminated.
    """
    _check_budget(d)
    if m < 1:
        raise ValueError("m must be positive")
    names = generator_names(d)
    survivors = [(g, z_degree(d, g)) for g in names if z_degree(d, g) % m == 0]
    killed = {g: 0 for g in names if z_degree(d, g) % m}
    rels = []
    for rel in derive_relations(d):
        diff = rel.difference()
        res = diff.subs({k: v for k, v in killed.items() if k in diff.vars}) if killed else diff
        if not res.is_zero():
            rels.append(res)
    if prune is None:
        prune = bool(killed)
    eliminated: Dict[str, MultiPoly] = {}
    reduced = rels
    if prune:
        rels = _prune(rels, [g for g, _ in survivors])
        eliminated, reduced = _eliminate(rels, [g for g, _ in survivors])
    return FixedPointPresentation(d, m, survivors, rels, eliminated, list(reduced))


# ---------------------------------------------------------------------------
# comparison with the transcribed reference data

@dataclass
class Comparison:
    name: str
    ok: bool
    detail: str = ""


def compare_presentation(d: int) -> List[Comparison]:
    """Each reference relation must equal a derived one up to a rational scalar,
    and every derived relation must be matched."""
    from . import fixtures
    from .symbolic import proportional

    derived = derive_relations(d)
    diffs = [r.difference() for r in derived]
    used = set()
    out = []
    for k, ref in enumerate(fixtures.presentation_relations(d)):
        hit = next((j for j, df in enumerate(diffs) if j not in used and proportional(df, ref)), None)
        if hit is None:
            out.append(Comparison(f"reference relation {k + 1}", False, "no derived relation matches"))
        else:
            used.add(hit)
            out.append(Comparison(f"reference relation {k + 1}", True, derived[hit].name))
    for j, rel in enumerate(derived):
        if j not in used:
            out.append(Comparison(f"derived {rel.name}", False, "not in the reference list"))
    expected = {3: 5, 4: 10, 6: 20}.get(d)
    if expected is not None:
        n = len(fixtures.presentation_relations(d))
        out.append(Comparison("relation count", n == expected and len(derived) == expected,
                              f"reference lists {n}, derived {len(derived)}, expected {expected}"))
    return out


def compare_minimal_polynomial(d: int) -> Comparison:
    from . import fixtures

    mine = minimal_polynomial_eu(d)
    ref = fixtures.minimal_polynomial(d)
    diff = mine - ref
    return Comparison(f"minimal polynomial d={d}", diff.is_zero(),
                      "" if diff.is_zero() else f"difference {diff.to_str()}")


def compare_fixed_points(d: int, m: int) -> Comparison:
    from . import fixtures
    from .symbolic import ideals_equal

    ref = fixtures.fixed_point_reference(d, m)
    if ref is None:
        raise KeyError(f"no reference fixed-point presentation for (d, m) = ({d}, {m})")
    gens, rels = ref
    fp = fixed_point_presentation(d, m)
    mine_gens = fp.reduced_generators()
    if sorted(mine_gens) != sorted(gens):
        return Comparison(f"fixed points d={d} m={m}", False,
                          f"generators {mine_gens} vs reference {gens}")
    ok = ideals_equal(fp.reduced_relations, rels, list(gens) + ["A", "B"])
    detail = f"{len(fp.reduced_relations)} residual(s) vs {len(rels)} reference"
    if fp.eliminated:
        detail += "; eliminated " + ", ".join(f"{g} = {h.to_str()}" for g, h in fp.eliminated.items())
    return Comparison(f"fixed points d={d} m={m}", ok, detail)


def compare_omega(d: int) -> List[Comparison]:
    """Symbolic Omega_chi(eu) against the reference lists."""
    from . import fixtures

    ref = fixtures.omega_reference(d)
    out = []
    for name, f in omega_table(d).items():
        mine = _rename(f, {"A": "a", "B": "b"})
        if d % 2:
            mine = mine.subs({"b": MultiPoly.var("a")}) if "b" in mine.vars else mine
        target = ref[name]
        ok = (mine - target).is_zero()
        out.append(Comparison(f"Omega_{name}(eu)", ok, f"computed {mine.to_str()}, listed {target.to_str()}"))
    return out


def _rename(f: MultiPoly, mapping: Mapping[str, str]) -> MultiPoly:
    return MultiPoly(tuple(mapping.get(v, v) for v in f.vars), f.terms)
