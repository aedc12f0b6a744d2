"""Invariants of W_d acting on C[V x V*] at parameter zero.

Polynomials live in X, Y (coordinates on V, the V*-side of the bigrading)
and x, y (the V-side).  Bidegree is (degree in x,y ; degree in X,Y).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import Cyclotomic, MultiPoly, cyclo_field, merge_vars
from .dihedral import code_inv

VARS = ("X", "Y", "x", "y")
PARAMS = ("A", "B", "t")
GEN_SYMBOLS_P = ("q", "r", "Q", "R")


class NotInvariant(ValueError):
    """Raised when a polynomial is not W-invariant."""


class NoSolution(ArithmeticError):
    """Raised when a module decomposition fails (internal error)."""


def _v(name: str) -> MultiPoly:
    return MultiPoly.var(name, VARS)


# ---------------------------------------------------------------------------
# generators

@dataclass(frozen=True)
class InvariantGenerators:
    d: int
    q: MultiPoly
    r: MultiPoly
    Q: MultiPoly
    R: MultiPoly
    eu0: MultiPoly
    a0: Tuple[MultiPoly, ...]  # a0[0] = r, ..., a0[d] = R

    def named(self) -> Dict[str, MultiPoly]:
        out = {"q": self.q, "r": self.r, "Q": self.Q, "R": self.R, "eu": self.eu0}
        for i in range(1, self.d):
            out[f"a{i}"] = self.a0[i]
        return out


@lru_cache(maxsize=None)
def generators(d: int) -> InvariantGenerators:
    X, Y, x, y = (_v(n) for n in VARS)
    a0 = tuple(x ** (d - i) * Y ** i + y ** (d - i) * X ** i for i in range(d + 1))
    return InvariantGenerators(d, x * y, x ** d + y ** d, X * Y, X ** d + Y ** d, x * X + y * Y, a0)


def generator_bidegree(d: int, name: str) -> Tuple[int, int]:
    if name == "q":
        return (2, 0)
    if name == "r":
        return (d, 0)
    if name == "Q":
        return (0, 2)
    if name == "R":
        return (0, d)
    if name == "eu":
        return (1, 1)
    if name.startswith("a"):
        i = int(name[1:])
        return (d - i, i)
    if name in ("A", "B", "t"):
        return (1, 1)
    raise KeyError(name)


def z_degree(d: int, name: str) -> int:
    """Z-degree: X, Y count +1 and x, y count -1."""
    m, n = generator_bidegree(d, name)
    return n - m


def bidegrees(f: MultiPoly) -> set:
    """Set of bidegrees of the terms of f, parameters A, B, t counting (1,1)."""
    out = set()
    idx = {v: k for k, v in enumerate(f.vars)}
    for e in f.terms:
        m = n = 0
        for v, p in zip(f.vars, e):
            if not p:
                continue
            if v in ("x", "y"):
                m += p
            elif v in ("X", "Y"):
                n += p
            elif v in PARAMS:
                m += p
                n += p
        out.add((m, n))
    return out


# ---------------------------------------------------------------------------
# group action on polynomials

def act(d: int, g: int, f: MultiPoly) -> MultiPoly:
    """Action of the element with code g on a polynomial in X, Y, x, y.

    c^j: X -> z^-j X, Y -> z^j Y, x -> z^j x, y -> z^-j y.
    s_i: X -> z^i Y, Y -> z^-i X, x -> z^-i y, y -> z^i x.
    """
    vs = f.vars
    iX, iY, ix, iy = (vs.index(v) if v in vs else None for v in VARS)
    out = {}
    for e, c in f.terms.items():
        a = e[iX] if iX is not None else 0
        b = e[iY] if iY is not None else 0
        cc = e[ix] if ix is not None else 0
        ee = e[iy] if iy is not None else 0
        if g < d:
            k = g * (-a + b + cc - ee)
            ne = e
        else:
            i = g - d
            k = i * (a - b - cc + ee)
            ne = list(e)
            if iX is not None:
                ne[iX] = b
            if iY is not None:
                ne[iY] = a
            if ix is not None:
                ne[ix] = ee
            if iy is not None:
                ne[iy] = cc
            ne = tuple(ne)
        k %= d
        coeff = c if k == 0 else c * Cyclotomic.zeta(d, k)
        out[ne] = out.get(ne, 0) + coeff
    return MultiPoly(vs, out)


def is_invariant(d: int, f: MultiPoly) -> bool:
    """Invariance under the generators s = s_0 and t = s_1."""
    return act(d, d, f) == f and act(d, d + 1, f) == f


def reynolds(d: int, f: MultiPoly) -> MultiPoly:
    acc = MultiPoly(f.vars, {})
    for g in range(2 * d):
        acc = acc + act(d, g, f)
    return acc * Fraction(1, 2 * d)


def tau_act(d: int, f: MultiPoly) -> MultiPoly:
    """tau = [[0, xi], [xi^-1, 0]]: x -> xi^-1 y, y -> xi x, X -> xi Y, Y -> xi^-1 X."""
    n = 2 * d
    vs = f.vars
    iX, iY, ix, iy = (vs.index(v) if v in vs else None for v in VARS)
    out = {}
    for e, c in f.terms.items():
        a = e[iX] if iX is not None else 0
        b = e[iY] if iY is not None else 0
        cc = e[ix] if ix is not None else 0
        ee = e[iy] if iy is not None else 0
        k = (a - b - cc + ee) % n
        ne = list(e)
        if iX is not None:
            ne[iX] = b
        if iY is not None:
            ne[iY] = a
        if ix is not None:
            ne[ix] = ee
        if iy is not None:
            ne[iy] = cc
        ne = tuple(ne)
        out[ne] = out.get(ne, 0) + c * Cyclotomic.zeta(n, k)
    return MultiPoly(vs, out)


# ---------------------------------------------------------------------------
# partial fractions

def _linear_products(roots: Sequence[Cyclotomic]) -> Tuple[MultiPoly, List[MultiPoly]]:
    """prod_i (X - rho_i Y) and the products omitting each factor."""
    X, Y = MultiPoly.var("X", ("X", "Y")), MultiPoly.var("Y", ("X", "Y"))
    factors = [X - Y * rho for rho in roots]
    n = len(factors)
    prefix = [MultiPoly.const(1, ("X", "Y"))]
    for f in factors:
        prefix.append(prefix[-1] * f)
    suffix = [MultiPoly.const(1, ("X", "Y"))] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] * factors[i]
    return prefix[n], [prefix[i] * suffix[i + 1] for i in range(n)]


@lru_cache(maxsize=None)
def _family(d: int, kind: str):
    z = lambda k: Cyclotomic.zeta(d, k)
    if kind == "odd":
        roots = [z(i) for i in range(d)]
    elif kind == "even0":
        roots = [z(2 * i) for i in range(d // 2)]
    else:
        roots = [z(2 * i + 1) for i in range(d // 2)]
    return roots, _linear_products(roots)


def partial_fraction_checks(d: int, k: int) -> Dict[str, bool]:
    """Each applicable identity, checked after clearing denominators.

    For sum_i c_i / (X - rho_i Y) = N / D the check is prod_i (X - rho_i Y) = D
    and sum_i c_i prod_{j != i} (X - rho_j Y) = N.
    """
    XY = ("X", "Y")
    X, Y = MultiPoly.var("X", XY), MultiPoly.var("Y", XY)
    one = MultiPoly.const(1, XY)
    z = lambda m: Cyclotomic.zeta(d, m)
    out: Dict[str, bool] = {}

    def check(kind, coeffs, D, N):
        roots, (full, omit) = _family(d, kind)
        lhs = MultiPoly(XY, {})
        for c, p in zip(coeffs, omit):
            lhs = lhs + p * c
        return full == D and lhs == N

    if 1 <= k <= d:
        # Y = 1 specialization of the homogeneous identity
        roots, (full, omit) = _family(d, "odd")
        lhs1 = MultiPoly(XY, {})
        for i, p in enumerate(omit):
            lhs1 = lhs1 + p.subs({"Y": 1}).with_vars(XY) * z(k * i)
        out["sum z^(ki)/(X - z^i) = d X^(k-1)/(X^d - 1)"] = (
            full.subs({"Y": 1}).with_vars(XY) == X ** d - 1 and lhs1 == X ** (k - 1) * d)
        out["sum z^(ki)/(X - z^i Y) = d X^(k-1) Y^(d-k)/(X^d - Y^d)"] = check(
            "odd", [z(k * i) for i in range(d)], X ** d - Y ** d, X ** (k - 1) * Y ** (d - k) * d)
    if d % 2 == 0:
        e = d // 2
        if 1 <= k <= e:
            out["sum z^(2ki)/(X - z^(2i) Y) = e X^(k-1) Y^(e-k)/(X^e - Y^e)"] = check(
                "even0", [z(2 * k * i) for i in range(e)], X ** e - Y ** e, X ** (k - 1) * Y ** (e - k) * e)
            out["sum z^(k(2i+1))/(X - z^(2i+1) Y) = -e X^(k-1) Y^(e-k)/(X^e + Y^e)"] = check(
                "even1", [z(k * (2 * i + 1)) for i in range(e)], X ** e + Y ** e, X ** (k - 1) * Y ** (e - k) * (-e))
            out["sum z^(-(k-1)(2i+1))/(X - z^(2i+1) Y) = e X^(e-k) Y^(k-1)/(X^e + Y^e)"] = check(
                "even1", [z(-(k - 1) * (2 * i + 1)) for i in range(e)], X ** e + Y ** e, X ** (e - k) * Y ** (k - 1) * e)
    del one
    return out


def verify_partial_fractions(d: int, k: int) -> bool:
    checks = partial_fraction_checks(d, k)
    return bool(checks) and all(checks.values())


# ---------------------------------------------------------------------------
# power sums of the Euler element

@dataclass(frozen=True)
class EulerPowerTable:
    d: int
    n: Dict[Tuple[int, int], int] = field(repr=False)

    def coefficients(self, i: int) -> Dict[int, int]:
        return {j: self.n[(i, j)] for j in range(i // 2 + 1) if (i, j) in self.n}


@lru_cache(maxsize=None)
def _power_sum_coeffs(i: int) -> Tuple[Tuple[int, int], ...]:
    """eu0^(i) = sum_j n_ij (qQ)^j eu0^(i-2j), for i >= 1, as ((j, n_ij), ...)."""
    if i == 0:
        raise ValueError("eu0^(0) = 2 is a constant")
    # eu0^i = sum_{j < i/2} C(i,j) (qQ)^j eu0^(i-2j) + [i even] C(i,i/2) (qQ)^(i/2)
    res: Dict[int, int] = {0: 1}  # start from eu0^i
    for j in range(1, (i + 1) // 2):
        if 2 * j == i:
            continue
        sub = _power_sum_coeffs(i - 2 * j)
        for jj, c in sub:
            res[j + jj] = res.get(j + jj, 0) - comb(i, j) * c
    if i % 2 == 0:
        res[i // 2] = res.get(i // 2, 0) - comb(i, i // 2)
    return tuple(sorted((j, c) for j, c in res.items() if c))


def euler_power_table(d: int) -> EulerPowerTable:
    n = {}
    for i in range(1, 2 * d + 1):
        for j, c in _power_sum_coeffs(i):
            n[(i, j)] = c
        for j in range(i // 2 + 1):
            n.setdefault((i, j), 0)
    table = EulerPowerTable(d, n)
    g = generators(d)
    X, Y, x, y = (_v(v) for v in VARS)
    qQ = g.q * g.Q
    for i in range(1, 2 * d + 1):
        lhs = (x * X) ** i + (y * Y) ** i
        rhs = MultiPoly(VARS, {})
        for j, c in table.coefficients(i).items():
            rhs = rhs + qQ ** j * g.eu0 ** (i - 2 * j) * c
        if lhs != rhs:
            raise AssertionError(f"power-sum table wrong at i={i}")
    return table


def power_sum_poly(i: int, qQ, eu):
    """eu^(i) expressed through qQ and eu (any ring elements supporting + and *)."""
    if i == 0:
        return 2
    acc = None
    for j, c in _power_sum_coeffs(i):
        term = (qQ ** j if j else 1) * (eu ** (i - 2 * j) if i - 2 * j else 1) * c
        acc = term if acc is None else acc + term
    return acc


# ---------------------------------------------------------------------------
# relations at parameter zero

def relation_rhs0(d: int, i: int, j: Optional[int], sym: Dict[str, object]):
    """Right-hand side of (Z_i^0) or (Z_{i,j}^0) in terms of the ring elements ``sym``.

    ``sym`` maps q, r, Q, R, eu, a1..a(d-1) to elements of any commutative ring;
    a0 = r and ad = R.
    """
    def a(k):
        if k == 0:
            return sym["r"]
        if k == d:
            return sym["R"]
        return sym[f"a{k}"]

    q, r, Q, R, eu = sym["q"], sym["r"], sym["Q"], sym["R"], sym["eu"]
    qQ = q * Q
    if j is None:
        return q * a(i + 1) + Q * a(i - 1)
    head = q ** (d - j) * Q ** i * power_sum_poly(j - i, qQ, eu)
    s = i + j
    if s < d:
        tail = r * a(s) - q ** (d - s) * power_sum_poly(s, qQ, eu)
    elif s == d:
        tail = r * R - power_sum_poly(d, qQ, eu)
    else:
        tail = R * a(s - d) - Q ** (s - d) * power_sum_poly(2 * d - s, qQ, eu)
    return head + tail


def relation_lhs(d: int, i: int, j: Optional[int], sym: Dict[str, object]):
    if j is None:
        return sym["eu"] * sym[f"a{i}"]
    return sym[f"a{i}"] * sym[f"a{j}"]


def relation_names(d: int) -> List[Tuple[int, Optional[int]]]:
    out: List[Tuple[int, Optional[int]]] = [(i, None) for i in range(1, d)]
    out += [(i, j) for i in range(1, d) for j in range(i, d)]
    return out


def relation_label(i: int, j: Optional[int]) -> str:
    return f"Z_{i}" if j is None else f"Z_{i},{j}"


def verify_invariant_relations(d: int) -> List[Tuple[str, bool]]:
    g = generators(d)
    sym = g.named()
    out = []
    for i, j in relation_names(d):
        ok = (relation_lhs(d, i, j, sym) - relation_rhs0(d, i, j, sym)).is_zero()
        out.append((relation_label(i, j), ok))
    return out


# ---------------------------------------------------------------------------
# free module decomposition over P = C[q, r, Q, R]

def basis_labels(d: int) -> List[str]:
    return ["1"] + [f"eu^{k}" for k in range(1, d + 1)] + [f"a{i}" for i in range(1, d)]


def _basis_bidegree(d: int, label: str) -> Tuple[int, int]:
    if label == "1":
        return (0, 0)
    if label.startswith("eu^"):
        k = int(label[3:])
        return (k, k)
    i = int(label[1:])
    return (d - i, i)


@lru_cache(maxsize=None)
def _basis_poly(d: int, label: str) -> MultiPoly:
    g = generators(d)
    if label == "1":
        return MultiPoly.const(1, VARS)
    if label.startswith("eu^"):
        return g.eu0 ** int(label[3:])
    return g.a0[int(label[1:])]


def _p_monomials(d: int, m: int, n: int) -> List[Tuple[int, int, int, int]]:
    """Exponents (q, r, Q, R) of P-monomials of bidegree (m, n)."""
    out = []
    for br in range(m // d + 1):
        rest = m - d * br
        if rest % 2:
            continue
        bq = rest // 2
        for bR in range(n // d + 1):
            rest2 = n - d * bR
            if rest2 % 2:
                continue
            out.append((bq, br, rest2 // 2, bR))
    return out


@lru_cache(maxsize=None)
def _p_mono_poly(d: int, e: Tuple[int, int, int, int]) -> MultiPoly:
    g = generators(d)
    return g.q ** e[0] * g.r ** e[1] * g.Q ** e[2] * g.R ** e[3]


class _BidegreeSolver:
    """Cached left inverse for the P-basis expansion of one bidegree."""

    def __init__(self, d: int, m: int, n: int) -> None:
        from sympy.polys.domains import QQ
        from sympy.polys.matrices import DomainMatrix

        self.d, self.m, self.n = d, m, n
        cols = []
        for label in basis_labels(d):
            bm, bn = _basis_bidegree(d, label)
            if bm > m or bn > n:
                continue
            for pe in _p_monomials(d, m - bm, n - bn):
                cols.append((pe, label))
        self.cols = cols
        polys = [_p_mono_poly(d, pe) * _basis_poly(d, label) for pe, label in cols]
        rows: Dict[Tuple[int, ...], int] = {}
        for p in polys:
            for e in p.terms:
                rows.setdefault(e, len(rows))
        self.rows = rows
        self.polys = polys
        nr, nc = len(rows), len(cols)
        if nc == 0:
            self.pivots = []
            self.inv = None
            return
        # find nc independent rows via rref of the transpose
        mt = [[QQ(0)] * nr for _ in range(nc)]
        for c, p in enumerate(polys):
            for e, v in p.terms.items():
                mt[c][rows[e]] = QQ(int(v)) if isinstance(v, int) else QQ(v.numerator, v.denominator)
        M_t = DomainMatrix(mt, (nc, nr), QQ)
        _, piv = M_t.rref()
        if len(piv) != nc:
            raise NoSolution(f"P-basis products are dependent in bidegree {(m, n)}")
        self.pivots = list(piv)
        sub = DomainMatrix([[mt[c][r] for c in range(nc)] for r in self.pivots], (nc, nc), QQ)
        inv = sub.inv().to_Matrix()
        self.inv = [[Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(nc)] for i in range(nc)]
        self.row_keys = [None] * nr
        for e, k in rows.items():
            self.row_keys[k] = e

    def solve(self, f: MultiPoly) -> List[Fraction]:
        """Coefficients for a rational polynomial f in X, Y, x, y of this bidegree."""
        nc = len(self.cols)
        for e in f.terms:
            if e not in self.rows:
                raise NotInvariant(f"monomial {e} not in the span of the P-basis")
        if nc == 0:
            if f.terms:
                raise NotInvariant("nonzero component with empty P-basis")
            return []
        keys = self.row_keys
        rhs = [f.terms.get(keys[r], 0) for r in self.pivots]
        sol = []
        for i in range(nc):
            acc = 0
            row = self.inv[i]
            for j, v in enumerate(rhs):
                if v:
                    acc += row[j] * v
            sol.append(acc)
        # residual
        check: Dict[Tuple[int, ...], object] = {}
        for c, coef in enumerate(sol):
            if coef:
                for e, v in self.polys[c].terms.items():
                    check[e] = check.get(e, 0) + coef * v
        for e in set(check) | set(f.terms):
            if check.get(e, 0) != f.terms.get(e, 0):
                raise NotInvariant("polynomial is not in the span of the P-basis")
        return sol


@lru_cache(maxsize=None)
def _solver(d: int, m: int, n: int) -> _BidegreeSolver:
    return _BidegreeSolver(d, m, n)


def _split_components(f: MultiPoly) -> Dict[int, MultiPoly]:
    """Split coefficients along the power basis of the cyclotomic field."""
    comps: Dict[int, Dict] = {}
    for e, c in f.terms.items():
        if isinstance(c, Cyclotomic):
            for k, v in enumerate(c.c):
                if v:
                    comps.setdefault(k, {})[e] = v
        else:
            comps.setdefault(0, {})[e] = c
    return {k: MultiPoly(f.vars, t) for k, t in comps.items()}


def gen_vars(d: int, extra: Sequence[str] = ()) -> Tuple[str, ...]:
    names = ["q", "r", "Q", "R", "eu"] + [f"a{i}" for i in range(1, d)]
    return merge_vars(names, extra)


def module_decompose(f: MultiPoly, d: int, check_invariance: bool = True) -> MultiPoly:
    """Write a W-invariant polynomial as sum_b p_b * b over the P-basis.

    The result is a MultiPoly in q, r, Q, R, eu, a1..a(d-1) (and any parameter
    variables of f) which is linear in the basis {1, eu, ..., eu^d, a1, ...}.
    Coefficients in Q(zeta) are handled component by component.
    """
    extra = tuple(v for v in f.vars if v not in VARS)
    if check_invariance:
        fv = f.with_vars(merge_vars(f.vars, VARS))
        if not is_invariant(d, fv):
            raise NotInvariant("input is not W-invariant")
    out_vars = gen_vars(d, extra)
    gv = {v: k for k, v in enumerate(out_vars)}
    f = f.with_vars(merge_vars(f.vars, VARS))
    idx_main = [f.vars.index(v) for v in VARS]
    idx_extra = [f.vars.index(v) for v in extra]
    # group by parameter monomial and bidegree
    groups: Dict[Tuple[Tuple[int, ...], int, int], Dict] = {}
    for e, c in f.terms.items():
        pe = tuple(e[k] for k in idx_extra)
        me = tuple(e[k] for k in idx_main)
        m, n = me[2] + me[3], me[0] + me[1]
        groups.setdefault((pe, m, n), {})[me] = c
    acc: Dict[Tuple[int, ...], object] = {}
    for (pe, m, n), terms in groups.items():
        solver = _solver(d, m, n)
        for k, comp in _split_components(MultiPoly(VARS, terms)).items():
            sol = solver.solve(comp)
            zk = Cyclotomic.zeta(d, k) if k else 1
            for (qe, label), coef in zip(solver.cols, sol):
                if not coef:
                    continue
                ex = [0] * len(out_vars)
                ex[gv["q"]], ex[gv["r"]], ex[gv["Q"]], ex[gv["R"]] = qe
                if label.startswith("eu^"):
                    ex[gv["eu"]] = int(label[3:])
                elif label != "1":
                    ex[gv[label]] = 1
                for v, p in zip(extra, pe):
                    ex[gv[v]] += p
                key = tuple(ex)
                acc[key] = acc.get(key, 0) + coef * zk
    return MultiPoly(out_vars, acc)


def recompose(dec: MultiPoly, d: int) -> MultiPoly:
    """Evaluate a polynomial in generator symbols at the parameter-zero generators."""
    g = generators(d).named()
    vals = {k: v for k, v in g.items() if k in dec.vars}
    return dec.subs(vals)
