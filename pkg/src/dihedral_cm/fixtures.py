"""Transcribed reference data: presentations, minimal polynomials, fixed points,
family / cellular / cuspidal tables and the cotangent Lie algebra maps.

The data files live in ``dihedral_cm/data`` as JSON with formula strings;
this module parses them into MultiPoly objects and expands table tokens for a
given d.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Optional, Tuple

from .arith import MultiPoly
from .symbolic import parse_polynomial, parse_relation

REGIMES = ("zero", "b_zero", "a_zero", "equal", "opposite", "generic")


@lru_cache(maxsize=None)
def load(name: str) -> dict:
    text = resources.files("dihedral_cm").joinpath("data", name).read_text(encoding="utf-8")
    return json.loads(text)


def presentation_relations(d: int) -> List[MultiPoly]:
    """Transcribed relations as left - right."""
    data = load("presentations.json")["presentations"].get(str(d))
    if data is None:
        raise KeyError(f"no reference presentation for d = {d}")
    return [parse_relation(s) for s in data["relations"]]


def presentation_strings(d: int) -> List[str]:
    return list(load("presentations.json")["presentations"][str(d)]["relations"])


def minimal_polynomial(d: int) -> MultiPoly:
    """Reference minimal polynomial of eu in the variable t."""
    data = load("presentations.json")["minimal_polynomials"][str(d)]
    f = parse_polynomial(data["polynomial"])
    if data["variable"] == "T":
        f = f.subs({"T": MultiPoly.var("t") ** 2})
    return f


def fixed_point_reference(d: int, m: int) -> Optional[Tuple[List[str], List[MultiPoly]]]:
    for entry in load("presentations.json")["fixed_points"]:
        if entry["d"] == d and entry["m"] == m:
            return list(entry["generators"]), [parse_relation(s) for s in entry["relations"]]
    return None


def fixed_point_cases() -> List[Tuple[int, int]]:
    return [(e["d"], e["m"]) for e in load("presentations.json")["fixed_points"]]


# ---------------------------------------------------------------------------
# tables

def two_dim_names(d: int) -> List[str]:
    return [f"chi_{k}" for k in range(1, (d + 1) // 2)]


def half(d: int) -> int:
    """e with d = 2e (even) or d = 2e - 1 (odd)."""
    return d // 2 if d % 2 == 0 else (d + 1) // 2


def classify_regime(d: int, a, b) -> str:
    a, b = Fraction(a), Fraction(b)
    if d % 2 and a != b:
        raise ValueError("odd d requires a = b")
    if a == 0 and b == 0:
        return "zero"
    if b == 0:
        return "b_zero"
    if a == 0:
        return "a_zero"
    if a == b:
        return "equal"
    if a == -b:
        return "opposite"
    return "generic"


def regimes_for(d: int) -> List[str]:
    return ["zero", "equal"] if d % 2 else list(REGIMES)


def representative(regime: str) -> Tuple[Fraction, Fraction]:
    a, b = load("tables.json")["representatives"][regime]
    return Fraction(a), Fraction(b)


def _expand(tokens, d: int) -> List[str]:
    out: List[str] = []
    for t in tokens:
        if t == "CHI":
            out.extend(two_dim_names(d))
        else:
            out.append(t)
    return out


def _parity(d: int) -> str:
    return "odd" if d % 2 else "even"


def families_reference(d: int, regime: str) -> List[frozenset]:
    cells = load("tables.json")["families"][_parity(d)][regime]
    return [frozenset(_expand(c, d)) for c in cells]


def cellular_reference(d: int, regime: str) -> List[Dict[str, int]]:
    """Cellular characters as multiplicity maps."""
    from .dihedral import irr_characters

    cells = load("tables.json")["cellular"][_parity(d)][regime]
    out = []
    for cell in cells:
        mult: Dict[str, int] = {}
        for t in cell:
            if t == "REG":
                for chi in irr_characters(d):
                    mult[chi.name] = mult.get(chi.name, 0) + chi.degree
            else:
                for n in _expand([t], d):
                    mult[n] = mult.get(n, 0) + 1
        out.append(mult)
    return out


def cuspidal_reference(d: int, regime: str) -> List[frozenset]:
    cell = load("tables.json")["cuspidal"][_parity(d)].get(regime)
    if cell is None or half(d) < cell["min_e"]:
        return []
    return [frozenset(_expand(cell["family"], d))]


def omega_reference(d: int) -> Dict[str, MultiPoly]:
    """Reference Omega_chi(eu) as polynomials in a, b (A, B renamed to a, b)."""
    table = load("tables.json")["omega_eu"][_parity(d)]
    e = half(d)
    out = {}
    for key, text in table.items():
        f = parse_polynomial(text).subs({v: val for v, val in (("d", d), ("e", e))
                                         if v in parse_polynomial(text).vars})
        for n in _expand([key], d):
            out[n] = f
    return out


# ---------------------------------------------------------------------------
# cotangent Lie algebra maps

def aleph_images(d: int, a, b) -> Dict[str, List[List[Fraction]]]:
    data = load("aleph.json")[str(d)]
    a, b = Fraction(a), Fraction(b)
    out = {}
    for name, entry in data["images"].items():
        s = parse_polynomial(entry["scalar"])
        val = s.subs({v: x for v, x in (("a", a), ("b", b)) if v in s.vars}).constant_value()
        out[name] = [[Fraction(val) * Fraction(x) for x in row] for row in entry["matrix"]]
    return out


def aleph_size(d: int) -> int:
    return int(load("aleph.json")[str(d)]["size"])


# ---------------------------------------------------------------------------
# exponent-vector dump

def dump_exponent_form() -> dict:
    """All polynomial fixtures re-emitted as {vars, terms: [[exps], "p/q"]}."""

    def enc(f: MultiPoly) -> dict:
        f = f.trim_vars()
        return {"vars": list(f.vars),
                "terms": [[list(e), str(Fraction(c))] for e, c in sorted(f.terms.items())]}

    out: dict = {"presentations": {}, "minimal_polynomials": {}, "fixed_points": []}
    for d in load("presentations.json")["presentations"]:
        out["presentations"][d] = [enc(r) for r in presentation_relations(int(d))]
    for d in load("presentations.json")["minimal_polynomials"]:
        out["minimal_polynomials"][d] = enc(minimal_polynomial(int(d)))
    for d, m in fixed_point_cases():
        gens, rels = fixed_point_reference(d, m)
        out["fixed_points"].append({"d": d, "m": m, "generators": gens, "relations": [enc(r) for r in rels]})
    return out
