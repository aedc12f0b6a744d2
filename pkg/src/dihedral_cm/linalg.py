"""Exact rational linear algebra helpers (sympy DomainMatrix over QQ)."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix


def _qq(v) -> object:
    v = Fraction(v)
    return QQ(v.numerator, v.denominator)


def _frac(v) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


def to_domain(rows: Sequence[Sequence[object]]) -> DomainMatrix:
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    return DomainMatrix([[_qq(v) for v in row] for row in rows], (nr, nc), QQ)


def rank(rows: Sequence[Sequence[object]]) -> int:
    if not rows or not rows[0]:
        return 0
    return to_domain(rows).rank()


def nullspace(rows: Sequence[Sequence[object]], ncols: Optional[int] = None) -> List[List[Fraction]]:
    """Basis of {v : M v = 0}."""
    if not rows:
        n = ncols or 0
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    M = to_domain(rows)
    ns = M.nullspace()
    return [[_frac(v) for v in row] for row in ns.to_list()]


class Inconsistent(ArithmeticError):
    pass


class Underdetermined(ArithmeticError):
    pass


def solve_sparse(equations: Sequence[Dict[Hashable, object]], rhs: Sequence[object],
                 unknowns: Sequence[Hashable]) -> Dict[Hashable, Fraction]:
    """Unique solution of sum_u eq[u] * val[u] = rhs for each equation."""
    index = {u: k for k, u in enumerate(unknowns)}
    n = len(unknowns)
    rows = []
    for eq, b in zip(equations, rhs):
        row = [QQ(0)] * (n + 1)
        for u, v in eq.items():
            row[index[u]] += _qq(v)
        row[n] = _qq(b)
        rows.append(row)
    if not rows:
        if n:
            raise Underdetermined("no equations")
        return {}
    M = DomainMatrix(rows, (len(rows), n + 1), QQ)
    R, piv = M.rref()
    if n in piv:
        raise Inconsistent("linear system has no solution")
    if len(piv) < n:
        raise Underdetermined("linear system has a positive-dimensional solution space")
    dense = R.to_list()
    return {unknowns[c]: _frac(dense[k][n]) for k, c in enumerate(piv)}


def determinant(rows: Sequence[Sequence[object]]) -> Fraction:
    return _frac(to_domain(rows).det())
