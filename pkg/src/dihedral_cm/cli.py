"""Command-line interface.

Every command produces a RunReport: a list of named checks with status
pass / fail / skipped and, on failure, a witness string.  Exit codes: 0 when
no check failed, 1 when one did, 2 for usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from . import fixtures


# ---------------------------------------------------------------------------
# reports

@dataclass
class Check:
    name: str
    status: str  # "pass", "fail" or "skipped"
    witness: str = ""


@dataclass
class RunReport:
    command: str
    parameters: Dict[str, object]
    checks: List[Check] = field(default_factory=list)
    result: object = None
    timing: float = 0.0

    def add(self, name: str, ok: Optional[bool], witness: str = "") -> None:
        status = "skipped" if ok is None else ("pass" if ok else "fail")
        self.checks.append(Check(name, status, witness))

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.checks)

    def to_json(self) -> dict:
        return {"command": self.command, "parameters": self.parameters,
                "checks": [asdict(c) for c in self.checks], "result": self.result,
                "timing": self.timing}

    @classmethod
    def from_json(cls, data: dict) -> "RunReport":
        return cls(data["command"], dict(data["parameters"]),
                   [Check(**c) for c in data["checks"]], data.get("result"), data.get("timing", 0.0))

    def to_text(self) -> str:
        lines = [f"{self.command} {' '.join(f'{k}={v}' for k, v in self.parameters.items())}".rstrip()]
        if self.result is not None:
            lines.extend(_text_result(self.result))
        for c in self.checks:
            line = f"  [{c.status}] {c.name}"
            if c.witness:
                line += f": {c.witness}"
            lines.append(line)
        n_fail = sum(c.status == "fail" for c in self.checks)
        lines.append(f"{len(self.checks)} checks, {n_fail} failed")
        return "\n".join(lines)


def _text_result(result, indent: str = "  ") -> List[str]:
    if isinstance(result, dict):
        out = []
        for k, v in result.items():
            if isinstance(v, (dict, list)):
                out.append(f"{indent}{k}:")
                out.extend(_text_result(v, indent + "  "))
            else:
                out.append(f"{indent}{k}: {v}")
        return out
    if isinstance(result, list):
        out = []
        for v in result:
            if isinstance(v, (dict, list)):
                out.extend(_text_result(v, indent + "  "))
            else:
                out.append(f"{indent}{v}")
        return out
    return [f"{indent}{result}"]


# ---------------------------------------------------------------------------
# argument types

def rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational 'p/q': {text!r}")


def _fmt(v) -> str:
    return str(Fraction(v))


def _block(names: Sequence[str]) -> str:
    return "{" + ", ".join(names) + "}"


def _regime(d: int, a: Fraction, b: Fraction) -> str:
    return fixtures.classify_regime(d, a, b)


def _parameters(args, *names) -> Dict[str, object]:
    out = {}
    for n in names:
        v = getattr(args, n)
        out[n] = _fmt(v) if isinstance(v, Fraction) else v
    return out


def _resolve_params(args) -> None:
    """With --symbolic and --regime, run at the regime's representative parameters."""
    if getattr(args, "symbolic", False):
        if not args.regime:
            raise UsageError("--symbolic needs --regime to decide the genericity conditions")
        args.a, args.b = fixtures.representative(args.regime)
    if args.a is None or args.b is None:
        raise UsageError("parameters --a and --b are required (or --symbolic --regime NAME)")


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# commands

def cmd_invariants(args) -> RunReport:
    from .invariants import generators, verify_invariant_relations

    rep = RunReport("invariants", _parameters(args, "d", "action"))
    if args.action == "generators":
        rep.result = {k: v.to_str() for k, v in generators(args.d).named().items()}
        return rep
    for name, ok in verify_invariant_relations(args.d):
        rep.add(f"({name}) at c = 0", ok)
    return rep


def cmd_partial_fractions(args) -> RunReport:
    from .invariants import partial_fraction_checks

    rep = RunReport("partial-fractions", _parameters(args, "d", "k"))
    ks = [args.k] if args.k else range(1, args.d + 1)
    for k in ks:
        for name, ok in partial_fraction_checks(args.d, k).items():
            rep.add(f"k={k}: {name}", ok)
    return rep


def cmd_centre(args) -> RunReport:
    from . import spectrum

    d = args.d
    rep = RunReport("centre", _parameters(args, "d", "action"))
    if args.action == "derive":
        rels = spectrum.derive_relations(d)
        rep.result = [f"({r.name}) {r.to_str()}" for r in rels]
    elif args.action == "verify":
        rels = spectrum.derive_relations(d)
        for r in rels:
            rep.add(f"({r.name}) holds in the Cherednik algebra", spectrum.verify_relation(d, r))
        zero = spectrum.relations_zero_parameter(rels)
        for r, r0 in zip(zero, spectrum.undeformed_relations(d)):
            rep.add(f"({r.name}) at A = B = 0 is the undeformed relation",
                    (r.difference() - r0.difference()).is_zero())
        if str(d) in fixtures.load("presentations.json")["presentations"]:
            for c in spectrum.compare_presentation(d):
                rep.add(c.name, c.ok, "" if c.ok else c.detail)
    else:
        f = spectrum.minimal_polynomial_eu(d)
        rep.result = {"minimal polynomial": f.to_str()}
        if str(d) in fixtures.load("presentations.json")["minimal_polynomials"]:
            c = spectrum.compare_minimal_polynomial(d)
            rep.add("equals the reference polynomial", c.ok, c.detail)
        rep.add("1, eu, ..., eu^(2d-1) are P-linearly independent", spectrum.lower_powers_independent(d))
    return rep


def cmd_families(args) -> RunReport:
    from . import spectrum

    _resolve_params(args)
    d, a, b = args.d, args.a, args.b
    rep = RunReport("families", _parameters(args, "d", "a", "b"))
    part = spectrum.families_partition(d, a, b)
    regime = _regime(d, a, b)
    rep.result = {"regime": regime, "families": [_block(F) for F in part]}
    if args.symbolic:
        rep.result["Omega(eu)"] = {k: v.to_str() for k, v in spectrum.omega_table(d).items()}
    ref = fixtures.families_reference(d, regime)
    got = sorted(sorted(F) for F in part)
    want = sorted(sorted(F) for F in ref)
    rep.add("partition matches the reference table", got == want, "" if got == want else f"expected {want}")
    return rep


def cmd_cuspidal(args) -> RunReport:
    from . import spectrum

    _resolve_params(args)
    d, a, b = args.d, args.a, args.b
    rep = RunReport("cuspidal", _parameters(args, "d", "a", "b"))
    regime = _regime(d, a, b)
    if args.family:
        rep.result = {"family": _block(args.family),
                      "cuspidal": spectrum.cuspidality_test(args.family, d, a, b)}
        return rep
    fams = spectrum.cuspidal_families(d, a, b)
    rep.result = {"regime": regime, "cuspidal families": [_block(F) for F in fams]}
    want = sorted(sorted(F) for F in fixtures.cuspidal_reference(d, regime))
    got = sorted(sorted(F) for F in fams)
    rep.add("cuspidal families match the reference table", got == want, "" if got == want else f"expected {want}")
    return rep


def cmd_cellular(args) -> RunReport:
    from . import gaudin
    from .arith import MultiPoly

    d = args.d
    symbolic_checks = []
    if args.symbolic:
        a_sym = MultiPoly.var("a")
        b_sym = a_sym if d % 2 else MultiPoly.var("b")
        for k in range(1, (d + 1) // 2):
            symbolic_checks.append((f"chi_{k}: direct sum equals closed form (a = b)",
                                    gaudin.closed_form_check(d, k, a_sym, a_sym)))
            if d % 2 == 0:
                symbolic_checks.append((f"chi_{k}: direct sum equals closed form (generic a, b)",
                                        gaudin.closed_form_check(d, k, a_sym, b_sym)))
    _resolve_params(args)
    a, b = args.a, args.b
    rep = RunReport("cellular", _parameters(args, "d", "a", "b"))
    for name, ok in symbolic_checks:
        rep.add(name, ok)
    regime = _regime(d, a, b)
    cells = gaudin.cellular_characters(d, a, b)
    modules = gaudin.gaudin_modules(d, a, b)
    rep.result = {"regime": regime, "cellular characters": [c.label() for c in cells]}
    want = sorted(sorted(m.items()) for m in fixtures.cellular_reference(d, regime))
    got = sorted(sorted(c.multiplicities.items()) for c in cells)
    rep.add("cellular characters match the reference table", got == want, "" if got == want else f"expected {want}")
    rep.add("simple modules reconstruct the regular character", gaudin.regular_reconstruction(d, modules))
    for k in range(1, (d + 1) // 2):
        rep.add(f"diag(X, Y) conjugates chi_{k} to chi_{k + 1}", gaudin.conjugation_check(d, k, a, b)
                if k + 1 < d / 2 else None)
    return rep


def cmd_fixed_points(args) -> RunReport:
    from . import spectrum

    d, m = args.d, args.m
    rep = RunReport("fixed-points", _parameters(args, "d", "m"))
    fp = spectrum.fixed_point_presentation(d, m)
    rep.result = {"generators": fp.reduced_generators(),
                  "relations": [r.to_str() for r in fp.reduced_relations]}
    if fp.eliminated:
        rep.result["eliminated"] = {g: h.to_str() for g, h in fp.eliminated.items()}
    if fixtures.fixed_point_reference(d, m) is not None:
        c = spectrum.compare_fixed_points(d, m)
        rep.add(c.name, c.ok, c.detail)
    return rep


def cmd_lie(args) -> RunReport:
    from . import cuspidal

    d, a, b = args.d, args.a, args.b
    rep = RunReport("lie", _parameters(args, "d", "a", "b", "action"))
    lie = cuspidal.lie_structure(d, a, b)
    rep.add("antisymmetry", lie.is_antisymmetric())
    rep.add("Jacobi identity", lie.jacobi_holds())
    weights = lie.ad_eu_weights()
    rep.add("ad eu is diagonal with the Z-degrees as eigenvalues",
            weights == {k: Fraction(v) for k, v in cuspidal.expected_weights(d).items()})
    if args.action == "structure":
        table = {}
        for i, u in enumerate(lie.basis):
            for j in range(i + 1, len(lie.basis)):
                vec = lie.brackets[(i, j)]
                terms = [f"{_fmt(c)} {lie.basis[k]}" for k, c in enumerate(vec) if c]
                if terms:
                    table[f"{{{u}, {lie.basis[j]}}}"] = " + ".join(terms)
        rep.result = {"family": _block(lie.family), "brackets": table}
        return rep
    report = cuspidal.verify_aleph(d, a, b, strict=False)
    rep.result = {"family": _block(lie.family)}
    for name, ok, detail in report.checks:
        rep.add(name, ok, detail)
    return rep


def cmd_cache(args) -> RunReport:
    rep = RunReport("cache", {"action": args.action, "directory": str(args.store.directory)})
    if args.action == "inspect":
        from .cache import convention_hash

        rep.result = {"convention": convention_hash(), "entries": args.store.entries()}
    else:
        rep.result = {"removed": args.store.clear()}
    return rep


def cmd_fixtures(args) -> RunReport:
    rep = RunReport("fixtures", {"action": args.action})
    rep.result = fixtures.dump_exponent_form()
    return rep


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dihedral-cm",
                                description="Exact computations for rational Cherednik algebras of dihedral groups.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cache-dir", type=Path, default=None,
                   help="directory for cached central lifts (default: $DIHEDRAL_CM_CACHE or ~/.cache/dihedral_cm)")
    p.add_argument("--no-cache", action="store_true", help="do not read or write cached lifts")
    sub = p.add_subparsers(dest="command", required=True)

    def with_d(sp, default=None):
        sp.add_argument("--d", type=int, required=default is None, default=default)

    def with_params(sp, required=True):
        sp.add_argument("--a", type=rational, default=None)
        sp.add_argument("--b", type=rational, default=None)
        sp.add_argument("--symbolic", action="store_true",
                        help="keep a, b symbolic where possible; needs --regime for regime-dependent output")
        sp.add_argument("--regime", choices=fixtures.REGIMES, default=None)

    sp = sub.add_parser("invariants", help="invariant generators and the undeformed relations")
    with_d(sp)
    sp.add_argument("action", choices=("verify", "generators"), nargs="?", default="verify")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("partial-fractions", help="partial fraction identities over Q(zeta_d)")
    with_d(sp)
    sp.add_argument("--k", type=int, default=None)
    sp.set_defaults(func=cmd_partial_fractions)

    sp = sub.add_parser("centre", help="presentation of the centre")
    with_d(sp)
    sp.add_argument("action", choices=("derive", "verify", "min-poly"))
    sp.set_defaults(func=cmd_centre)

    sp = sub.add_parser("families", help="Calogero-Moser families")
    with_d(sp)
    with_params(sp)
    sp.set_defaults(func=cmd_families)

    sp = sub.add_parser("cuspidal", help="cuspidal families")
    with_d(sp)
    with_params(sp)
    sp.add_argument("--family", nargs="+", default=None, help="character names, e.g. chi_1 chi_2")
    sp.set_defaults(func=cmd_cuspidal)

    sp = sub.add_parser("cellular", help="cellular characters via the Gaudin operators")
    with_d(sp)
    with_params(sp)
    sp.set_defaults(func=cmd_cellular)

    sp = sub.add_parser("fixed-points", help="presentation of the mu_m-fixed points")
    with_d(sp)
    sp.add_argument("--m", type=int, required=True)
    sp.set_defaults(func=cmd_fixed_points)

    sp = sub.add_parser("lie", help="Lie algebra on the cotangent space at the cuspidal point")
    with_d(sp)
    sp.add_argument("--a", type=rational, required=True)
    sp.add_argument("--b", type=rational, required=True)
    sp.add_argument("action", choices=("structure", "verify-aleph"), nargs="?", default="structure")
    sp.set_defaults(func=cmd_lie)

    sp = sub.add_parser("cache", help="inspect or clear the cache of central lifts")
    sp.add_argument("action", choices=("inspect", "clear"))
    sp.set_defaults(func=cmd_cache)

    sp = sub.add_parser("fixtures", help="reference data in exponent-vector form")
    sp.add_argument("action", choices=("dump",))
    sp.set_defaults(func=cmd_fixtures)
    return p


def run(argv: Optional[Sequence[str]] = None) -> tuple:
    """Parse and execute; returns (report or None, exit code, output format)."""
    from .cache import CentralCache
    from .cherednik import ParameterMismatch
    from .spectrum import BudgetExceeded, set_generator_store

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return None, int(exc.code or 0), "text"
    args.store = CentralCache(args.cache_dir)
    set_generator_store(None if args.no_cache else args.store)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except (UsageError, ParameterMismatch, BudgetExceeded, ValueError, KeyError) as exc:
        print(f"dihedral-cm: error: {exc}", file=sys.stderr)
        return None, 2, args.format
    report.timing = round(time.perf_counter() - start, 3)
    return report, (1 if report.failed else 0), args.format


def main(argv: Optional[Sequence[str]] = None) -> int:
    report, code, fmt = run(argv)
    if report is not None:
        if fmt == "json":
            print(json.dumps(report.to_json(), indent=2, sort_keys=True, default=str))
        else:
            print(report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
