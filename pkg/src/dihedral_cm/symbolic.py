"""Conversion between MultiPoly and sympy, and ideal comparisons.

sympy is used for parsing transcribed formulas and for Groebner bases; all
algebra on the Cherednik side stays in-package.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from .arith import Cyclotomic, MultiPoly, merge_vars

_TRANSFORMS = standard_transformations + (convert_xor, implicit_multiplication_application)


def _coeff_to_sympy(c):
    if isinstance(c, Cyclotomic):
        if not c.is_rational():
            raise ValueError("only rational coefficients can be converted")
        c = c.to_rational()
    c = Fraction(c)
    return sympy.Rational(c.numerator, c.denominator)


def to_sympy(f: MultiPoly) -> sympy.Expr:
    syms = [sympy.Symbol(v) for v in f.vars]
    out = sympy.Integer(0)
    for e, c in f.terms.items():
        term = _coeff_to_sympy(c)
        for s, p in zip(syms, e):
            if p:
                term = term * s ** p
        out += term
    return out


def from_sympy(expr, variables: Optional[Sequence[str]] = None) -> MultiPoly:
    expr = sympy.expand(sympy.sympify(expr))
    names = sorted(str(s) for s in expr.free_symbols)
    names = merge_vars(variables or (), names) if variables is not None else merge_vars(names)
    if not names:
        c = sympy.Rational(expr)
        return MultiPoly.const(Fraction(int(c.p), int(c.q)), ())
    syms = [sympy.Symbol(v) for v in names]
    poly = sympy.Poly(expr, *syms, domain="QQ")
    terms = {}
    for mon, c in poly.terms():
        c = sympy.Rational(c)
        terms[tuple(mon)] = Fraction(int(c.p), int(c.q))
    return MultiPoly(names, terms)


def parse_polynomial(text: str, variables: Optional[Sequence[str]] = None) -> MultiPoly:
    """Parse a formula such as ``"q a2 + r Q - 2(A^2-B^2) q"``."""
    local = {v: sympy.Symbol(v) for v in (variables or ())}
    for v in ("q", "r", "Q", "R", "eu", "A", "B", "t", "a", "b", "e", "u", "v"):
        local.setdefault(v, sympy.Symbol(v))
    for i in range(1, 12):
        local.setdefault(f"a{i}", sympy.Symbol(f"a{i}"))
    expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMS, evaluate=True)
    return from_sympy(expr, variables)


def parse_relation(text: str, variables: Optional[Sequence[str]] = None) -> MultiPoly:
    """``"lhs = rhs"`` -> lhs - rhs; a bare expression is returned as is."""
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        return parse_polynomial(lhs, variables) - parse_polynomial(rhs, variables)
    return parse_polynomial(text, variables)


def proportional(f: MultiPoly, g: MultiPoly) -> bool:
    """f = lambda * g for a nonzero rational lambda (or both zero)."""
    names = merge_vars(f.vars, g.vars)
    f, g = f.with_vars(names), g.with_vars(names)
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    if set(f.terms) != set(g.terms):
        return False
    e0 = next(iter(f.terms))
    lam = f.terms[e0] / g.terms[e0]
    return all(f.terms[e] == lam * g.terms[e] for e in f.terms)


def _gb(polys: Sequence[MultiPoly], gens: Sequence[str]):
    syms = [sympy.Symbol(v) for v in gens]
    exprs = [to_sympy(p) for p in polys if not p.is_zero()]
    if not exprs:
        return None, syms
    return sympy.groebner(exprs, *syms, order="grevlex", domain="QQ"), syms


def all_vars(polys: Iterable[MultiPoly], extra: Sequence[str] = ()) -> List[str]:
    names: List[str] = list(extra)
    for p in polys:
        names.extend(p.used_vars())
    return list(merge_vars(names))


def ideal_contains(generators: Sequence[MultiPoly], f: MultiPoly, gens: Optional[Sequence[str]] = None) -> bool:
    if f.is_zero():
        return True
    gens = list(gens) if gens else all_vars(list(generators) + [f])
    G, syms = _gb(generators, gens)
    if G is None:
        return False
    return G.contains(to_sympy(f))


def ideals_equal(first: Sequence[MultiPoly], second: Sequence[MultiPoly],
                 gens: Optional[Sequence[str]] = None) -> bool:
    gens = list(gens) if gens else all_vars(list(first) + list(second))
    G1, _ = _gb(first, gens)
    G2, _ = _gb(second, gens)
    if G1 is None or G2 is None:
        return G1 is None and G2 is None
    return all(G1.contains(g) for g in G2.exprs) and all(G2.contains(g) for g in G1.exprs)


def factor_str(f: MultiPoly) -> str:
    return str(sympy.factor(to_sympy(f)))
