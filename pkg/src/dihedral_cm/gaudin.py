"""Cellular characters through the Gaudin operators.

For a reflection s_i with root X - z^i Y the rescaled Gaudin operators are

    D_x' = (1/d) sum_i c_i P_i s_i,    D_y' = (1/d) sum_i c_i z^i P_i s_i,

with P_i = (X^d - Y^d) / (X - z^i Y) = sum_m z^(im) X^(d-1-m) Y^m and c_i = a
for even i, b for odd i.  Both are polynomial, so every module below is
described by pairs of polynomial matrices over Q[X, Y].

A one-dimensional simple module is identified by its eigenvalue pair; the
eigenvalues of a split two-dimensional restriction may involve the square root
of a rational constant, stored as ``sqrt(kappa) * (gx, gy)`` with kappa a
squarefree integer.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import factorint

from .arith import Cyclotomic, MultiPoly, RatFunc, merge_vars, squarefree_decomposition
from .cherednik import ParameterMismatch
from .dihedral import GroupElement, irr_characters, regular_character

Param = Union[int, Fraction, MultiPoly]
Matrix = Tuple[Tuple[MultiPoly, MultiPoly], Tuple[MultiPoly, MultiPoly]]

__all__ = [
    "GaudinMatrices",
    "CellularCharacter",
    "gaudin_matrices",
    "closed_form",
    "closed_form_check",
    "conjugation_check",
    "linear_scalars",
    "cellular_characters",
    "gaudin_modules",
    "regular_reconstruction",
    "ParameterMismatch",
]


# ---------------------------------------------------------------------------
# parameters

def _is_symbolic(v) -> bool:
    return isinstance(v, MultiPoly) and not v.is_constant()


def _norm_param(v) -> Param:
    if isinstance(v, MultiPoly):
        return Fraction(v.constant_value()) if v.is_constant() else v
    return Fraction(v)


def _params(d: int, a, b) -> Tuple[Param, Param]:
    a, b = _norm_param(a), _norm_param(b)
    if d % 2:
        if _is_symbolic(a) or _is_symbolic(b):
            if not (isinstance(a, MultiPoly) and isinstance(b, MultiPoly) and a == b):
                raise ParameterMismatch("odd d requires a = b")
        elif a != b:
            raise ParameterMismatch("odd d requires a = b")
    return a, b


def _param_vars(*vals) -> Tuple[str, ...]:
    names: List[str] = ["X", "Y"]
    for v in vals:
        if isinstance(v, MultiPoly):
            names.extend(v.used_vars())
    return merge_vars(names)


def _lift(v, names) -> MultiPoly:
    if isinstance(v, MultiPoly):
        return v.trim_vars().with_vars(names)
    return MultiPoly.const(v, names)


# ---------------------------------------------------------------------------
# matrices

@dataclass(frozen=True)
class GaudinMatrices:
    d: int
    k: int
    Dx: Matrix
    Dy: Matrix

    def is_zero(self) -> bool:
        return all(e.is_zero() for m in (self.Dx, self.Dy) for row in m for e in row)


def _partial_fraction_numerator(d: int, i: int, names) -> MultiPoly:
    """(X^d - Y^d) / (X - z^i Y) as a polynomial with cyclotomic coefficients."""
    terms = {}
    ix, iy = names.index("X"), names.index("Y")
    for m in range(d):
        e = [0] * len(names)
        e[ix], e[iy] = d - 1 - m, m
        terms[tuple(e)] = Cyclotomic.zeta(d, i * m)
    return MultiPoly(names, terms)


def _mat_zero(names) -> List[List[MultiPoly]]:
    z = MultiPoly(names, {})
    return [[z, z], [z, z]]


def _freeze(m) -> Matrix:
    out = []
    for row in m:
        r = []
        for e in row:
            if not e.is_rational():
                raise ArithmeticError("Gaudin matrix entry is not rational")
            r.append(e)
        out.append(tuple(r))
    return tuple(out)


def _sum_operators(d: int, a: Param, b: Param, rep) -> Tuple[Matrix, Matrix]:
    """Direct summation over i in Z/dZ; ``rep(i)`` gives the 2x2 image of s_i."""
    names = _param_vars(a, b)
    A, B = _lift(a, names), _lift(b, names)
    dx, dy = _mat_zero(names), _mat_zero(names)
    inv_d = Fraction(1, d)
    for i in range(d):
        c = A if i % 2 == 0 else B
        p = _partial_fraction_numerator(d, i, names) * c * inv_d
        py = p * Cyclotomic.zeta(d, i)
        s = rep(i)
        for r in range(2):
            for col in range(2):
                if not s[r][col].is_zero():
                    dx[r][col] = dx[r][col] + p * s[r][col]
                    dy[r][col] = dy[r][col] + py * s[r][col]
    return _freeze(dx), _freeze(dy)


def gaudin_matrices(d: int, k: int, a, b) -> GaudinMatrices:
    """rho_k(D_x'), rho_k(D_y') by summing the defining formulas over all reflections."""
    if not 1 <= k < d / 2:
        raise ValueError(f"chi_{k} is not a two-dimensional character of W_{d}")
    a, b = _params(d, a, b)
    rep = lambda i: GroupElement.reflection(d, i).matrix(k)
    dx, dy = _sum_operators(d, a, b, rep)
    return GaudinMatrices(d, k, dx, dy)


@lru_cache(maxsize=None)
def _gaudin_cached(d: int, k: int, a: Fraction, b: Fraction) -> GaudinMatrices:
    return gaudin_matrices(d, k, a, b)


def linear_scalars(d: int, name: str, a, b) -> Tuple[MultiPoly, MultiPoly]:
    """Scalars by which D_x', D_y' act on the one-dimensional module of a linear character."""
    a, b = _params(d, a, b)
    chi = next(ch for ch in irr_characters(d) if ch.name == name)
    if chi.degree != 1:
        raise ValueError(f"{name} is not a linear character")
    one = Cyclotomic.rational(d, 0)

    def rep(i):
        v = chi(GroupElement.reflection(d, i))
        return ((v, one), (one, one))

    dx, dy = _sum_operators(d, a, b, rep)
    return dx[0][0], dy[0][0]


# ---------------------------------------------------------------------------
# closed forms

def _mono(names, x: int, y: int, coeff=1) -> MultiPoly:
    return MultiPoly.monomial(names, {"X": x, "Y": y}, coeff)


def closed_form(d: int, k: int, a, b) -> Tuple[Matrix, Optional[Matrix]]:
    """Printed closed forms: (Dx, Dy) for a = b, (Dx, None) for even d otherwise."""
    a, b = _params(d, a, b)
    names = _param_vars(a, b)
    A, B = _lift(a, names), _lift(b, names)
    zero = MultiPoly(names, {})
    if A == B:
        dx = ((zero, A * _mono(names, k - 1, d - k)), (A * _mono(names, d - k - 1, k), zero))
        dy = ((zero, A * _mono(names, k, d - k - 1)), (A * _mono(names, d - k, k - 1), zero))
        return dx, dy
    if d % 2:
        raise ParameterMismatch("odd d requires a = b")
    e = d // 2
    Xe, Ye = _mono(names, e, 0), _mono(names, 0, e)
    half = Fraction(1, 2)
    top = _mono(names, k - 1, e - k) * ((A - B) * Xe + (A + B) * Ye) * half
    bottom = _mono(names, e - k - 1, k) * ((A + B) * Xe + (A - B) * Ye) * half
    return ((zero, top), (bottom, zero)), None


def closed_form_check(d: int, k: int, a, b) -> bool:
    g = gaudin_matrices(d, k, a, b)
    dx, dy = closed_form(d, k, a, b)
    if not _mat_eq(g.Dx, dx):
        return False
    return dy is None or _mat_eq(g.Dy, dy)


def _mat_eq(m1, m2) -> bool:
    return all((m1[r][c] - m2[r][c]).is_zero() for r in range(2) for c in range(2))


def conjugation_check(d: int, k: int, a, b) -> bool:
    """M rho_k(D) M^-1 = rho_(k+1)(D) for D = D_x', D_y' and M = diag(X, Y)."""
    if not k + 1 < d / 2:
        return True
    g1, g2 = gaudin_matrices(d, k, a, b), gaudin_matrices(d, k + 1, a, b)
    names = g1.Dx[0][0].vars
    X, Y = RatFunc(_mono(names, 1, 0)), RatFunc(_mono(names, 0, 1))
    M = ((X, RatFunc(MultiPoly(names, {}))), (RatFunc(MultiPoly(names, {})), Y))
    Minv = ((1 / X, M[0][1]), (M[1][0], 1 / Y))
    for m1, m2 in ((g1.Dx, g2.Dx), (g1.Dy, g2.Dy)):
        conj = _rmul(_rmul(M, [[RatFunc(e) for e in row] for row in m1]), Minv)
        if not all(conj[r][c] == RatFunc(m2[r][c]) for r in range(2) for c in range(2)):
            return False
    return True


def _rmul(m1, m2):
    return [[m1[r][0] * m2[0][c] + m1[r][1] * m2[1][c] for c in range(2)] for r in range(2)]


def commute(g: GaudinMatrices) -> bool:
    p = _rmul(g.Dx, g.Dy)
    q = _rmul(g.Dy, g.Dx)
    return all((p[r][c] - q[r][c]).is_zero() for r in range(2) for c in range(2))


# ---------------------------------------------------------------------------
# simple modules

def _squarefree_rational(c: Fraction) -> Tuple[int, Fraction]:
    """c = kappa * s^2 with kappa a squarefree integer and s rational."""
    c = Fraction(c)
    if c == 0:
        raise ValueError("zero has no squarefree part")
    n = c.numerator * c.denominator
    kappa, s2 = (-1 if n < 0 else 1), 1
    for p, m in factorint(abs(n)).items():
        if m % 2:
            kappa *= p
        s2 *= p ** (m // 2)
    # c = n / den^2 = kappa * s2^2 / den^2
    return kappa, Fraction(s2, c.denominator)


def _sqrt(f: MultiPoly) -> Optional[Tuple[int, MultiPoly]]:
    """f = kappa * h^2 with kappa squarefree integer, or None if f is not a square up to a constant."""
    f = f.trim_vars()
    if f.is_constant():
        kappa, s = _squarefree_rational(Fraction(f.constant_value()))
        return kappa, MultiPoly.const(s, f.vars)
    h = MultiPoly.const(1, f.vars)
    for g, m in squarefree_decomposition(f):
        if m % 2:
            return None
        h = h * g.with_vars(f.vars) ** (m // 2)
    c = f / (h * h)
    if not c.is_constant():
        raise ArithmeticError("squarefree decomposition did not account for all factors")
    kappa, s = _squarefree_rational(Fraction(c.constant_value()))
    return kappa, h * s


@dataclass(frozen=True)
class LineModule:
    """One-dimensional simple module: D_x' -> sqrt(kappa) gx, D_y' -> sqrt(kappa) gy."""

    kappa: int
    gx: RatFunc
    gy: RatFunc

    def key(self):
        return (self.kappa, self.gx, self.gy)

    def negate(self) -> "LineModule":
        return LineModule(self.kappa, -self.gx, -self.gy)


def _as_ratfunc(f: MultiPoly, names) -> RatFunc:
    return RatFunc(f.trim_vars().with_vars(names))


def _split(g: GaudinMatrices, names) -> Optional[Tuple[LineModule, LineModule]]:
    """Eigen-decomposition of a trace-zero commuting pair, or None if no common line exists."""
    zero = RatFunc(MultiPoly(names, {}))
    if g.is_zero():
        line = LineModule(1, zero, zero)
        return line, line
    lead, other, lead_is_x = (g.Dx, g.Dy, True) if not all(e.is_zero() for row in g.Dx for e in row) \
        else (g.Dy, g.Dx, False)
    u, p = lead[0][0], lead[0][1]
    r = lead[1][0]
    disc = u * u + p * r  # = -det of a trace-zero matrix
    if disc.is_zero():
        # nilpotent and nonzero: a single invariant line, the restriction is not semisimple
        raise ArithmeticError("nilpotent Gaudin operator")
    root = _sqrt(disc)
    if root is None:
        return None
    kappa, h = root
    lam = _as_ratfunc(h, names)
    # other = beta * lead (commuting trace-zero pair, lead not scalar)
    R = lambda e: _as_ratfunc(e, names)
    pos = [(rr, cc) for rr in range(2) for cc in range(2) if not lead[rr][cc].is_zero()][0]
    beta = R(other[pos[0]][pos[1]]) / R(lead[pos[0]][pos[1]])
    for rr in range(2):
        for cc in range(2):
            if not (R(other[rr][cc]) - beta * R(lead[rr][cc])).is_zero():
                raise ArithmeticError("Gaudin operators are not proportional")
    if lead_is_x:
        plus = LineModule(kappa, lam, beta * lam)
    else:
        plus = LineModule(kappa, zero, lam)
    return plus, plus.negate()


def _iso_two_dim(g1: GaudinMatrices, g2: GaudinMatrices, names) -> bool:
    """Existence of an invertible T with T D(g1) = D(g2) T for both operators."""
    R = lambda e: _as_ratfunc(e, names)
    rows: List[List[RatFunc]] = []
    # unknowns t00, t01, t10, t11
    for m1, m2 in ((g1.Dx, g2.Dx), (g1.Dy, g2.Dy)):
        for r in range(2):
            for c in range(2):
                row = [R(MultiPoly(names, {}))] * 4
                # (T m1)[r][c] = sum_j t[r][j] m1[j][c]
                for j in range(2):
                    row[2 * r + j] = row[2 * r + j] + R(m1[j][c])
                # (m2 T)[r][c] = sum_j m2[r][j] t[j][c]
                for j in range(2):
                    row[2 * j + c] = row[2 * j + c] - R(m2[r][j])
                rows.append(row)
    basis = _nullspace_ratfunc(rows, 4, names)
    if not basis:
        return False
    for weights in ([1] + [0] * (len(basis) - 1), list(range(1, len(basis) + 1)), [3 ** j for j in range(len(basis))]):
        t = [sum((w * v[j] for w, v in zip(weights, basis)), R(MultiPoly(names, {}))) for j in range(4)]
        if not (t[0] * t[3] - t[1] * t[2]).is_zero():
            return True
    return False


def _nullspace_ratfunc(rows: List[List[RatFunc]], n: int, names) -> List[List[RatFunc]]:
    rows = [list(r) for r in rows]
    pivots: List[int] = []
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(rows)) if not rows[i][col].is_zero()), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    one = RatFunc(MultiPoly.const(1, names))
    zero = RatFunc(MultiPoly(names, {}))
    out = []
    for free in (c for c in range(n) if c not in pivots):
        v = [zero] * n
        v[free] = one
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][free]
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# cellular characters

@dataclass(frozen=True)
class CellularCharacter:
    multiplicities: Dict[str, int]
    dimension: int  # dimension of the simple Gaudin module over the function field

    def degree(self, d: int) -> int:
        deg = {ch.name: ch.degree for ch in irr_characters(d)}
        return sum(m * deg[n] for n, m in self.multiplicities.items())

    def label(self) -> str:
        return " + ".join(n if m == 1 else f"{m} {n}" for n, m in self.multiplicities.items())


def _rational_params(d: int, a, b) -> Tuple[Fraction, Fraction]:
    a, b = _params(d, a, b)
    if _is_symbolic(a) or _is_symbolic(b):
        raise ValueError("cellular characters need rational parameters; name a regime and use its representative")
    return Fraction(a), Fraction(b)


def simple_constituents(d: int, a, b) -> Tuple[List[object], Dict[str, List[int]]]:
    """Simple Gaudin modules and, per irreducible character, the indices of its constituents."""
    a, b = _rational_params(d, a, b)
    names = ("X", "Y")
    classes: List[object] = []  # LineModule keys or GaudinMatrices of two-dim simples
    lines: Dict[object, int] = {}
    comp: Dict[str, List[int]] = {}

    def line_index(m: LineModule) -> int:
        key = m.key()
        if key not in lines:
            lines[key] = len(classes)
            classes.append(m)
        return lines[key]

    for ch in irr_characters(d):
        if ch.degree == 1:
            sx, sy = linear_scalars(d, ch.name, a, b)
            comp[ch.name] = [line_index(LineModule(1, _as_ratfunc(sx, names), _as_ratfunc(sy, names)))]
            continue
        k = int(ch.name.split("_")[1])
        g = _gaudin_cached(d, k, a, b)
        if not commute(g):
            raise ArithmeticError(f"Gaudin operators do not commute on {ch.name}")
        parts = _split(g, names)
        if parts is not None:
            comp[ch.name] = [line_index(parts[0]), line_index(parts[1])]
            continue
        for idx, cls in enumerate(classes):
            if isinstance(cls, GaudinMatrices) and _iso_two_dim(cls, g, names):
                comp[ch.name] = [idx]
                break
        else:
            classes.append(g)
            comp[ch.name] = [len(classes) - 1]
    return classes, comp


def gaudin_modules(d: int, a, b) -> List[CellularCharacter]:
    """gamma_L = sum_chi [E_chi restricted : L] chi, one entry per simple Gaudin module L."""
    classes, comp = simple_constituents(d, a, b)
    out = []
    for idx, cls in enumerate(classes):
        mult: Dict[str, int] = {}
        for ch in irr_characters(d):
            n = comp[ch.name].count(idx)
            if n:
                mult[ch.name] = n
        dim = 1 if isinstance(cls, LineModule) else 2
        out.append(CellularCharacter(mult, dim))
    return out


def cellular_characters(d: int, a, b) -> List[CellularCharacter]:
    """Distinct cellular characters.

    Non-isomorphic simple modules may share gamma_L (e.g. the two lines of chi_1
    for d = 4, b = 0); the character set lists such a gamma once.
    """
    out: List[CellularCharacter] = []
    for cell in gaudin_modules(d, a, b):
        if all(cell.multiplicities != o.multiplicities for o in out):
            out.append(cell)
    return out


def regular_reconstruction(d: int, modules: Sequence[CellularCharacter]) -> bool:
    """sum_L dim(L) gamma_L over the simple modules of gaudin_modules equals the regular character."""
    total: Dict[str, int] = {}
    for cell in modules:
        for n, m in cell.multiplicities.items():
            total[n] = total.get(n, 0) + cell.dimension * m
    return total == regular_character(d)
