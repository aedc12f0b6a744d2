"""Exact arithmetic: cyclotomic numbers, sparse multivariate polynomials,
rational functions, gcd and squarefree/squareness tests.

Rationals are stdlib ``Fraction``.  Cyclotomic numbers are residues modulo
the n-th cyclotomic polynomial in the power basis 1, z, ..., z^(phi(n)-1).
Polynomial coefficients may be ``int``, ``Fraction`` or ``Cyclotomic``; all
three mix through the usual operators.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Rational = Union[int, Fraction]


class ZeroInput(ValueError):
    """Raised when an operation needs a nonzero argument."""


# ---------------------------------------------------------------------------
# cyclotomic polynomials and fields

@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> Tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]  # t^n - 1
    for m in range(1, n):
        if n % m == 0:
            num = _int_poly_exact_div(num, list(cyclotomic_coeffs(m)))
    return tuple(num)


def _int_poly_exact_div(num: list, den: list) -> list:
    num = list(num)
    dq = len(num) - len(den)
    out = [0] * (dq + 1)
    lead = den[-1]
    for k in range(dq, -1, -1):
        c = num[k + len(den) - 1]
        if c % lead:
            raise ArithmeticError("inexact division")
        c //= lead
        out[k] = c
        if c:
            for i, dc in enumerate(den):
                num[k + i] -= c * dc
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact division")
    return out


def cyclotomic_poly(n: int, var: str = "t") -> "MultiPoly":
    """Phi_n as a monic MultiPoly in one variable."""
    co = cyclotomic_coeffs(n)
    return MultiPoly((var,), {(k,): c for k, c in enumerate(co) if c})


def euler_phi(n: int) -> int:
    return len(cyclotomic_coeffs(n)) - 1


class _CycloField:
    """Tables for Q(zeta_n): reduction of zeta^k to the power basis."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.phi = euler_phi(n)
        phi_co = cyclotomic_coeffs(n)
        # reduce[k] = coefficient vector of zeta^k, 0 <= k < 2*phi (covers products)
        # and also zeta^k for 0 <= k < n (group powers)
        top = max(2 * self.phi, n)
        red = []
        for k in range(top):
            if k < self.phi:
                v = [0] * self.phi
                v[k] = 1
            else:
                prev = red[k - 1]
                # multiply prev by zeta: shift, then reduce the zeta^phi term
                v = [0] + prev[:-1]
                carry = prev[-1]
                if carry:
                    for i in range(self.phi):
                        v[i] -= carry * phi_co[i]
            red.append(v)
        self.red = red
        self.pow = [tuple(red[k]) for k in range(n)]

    def mul(self, a: Sequence, b: Sequence) -> tuple:
        phi = self.phi
        acc = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        acc[i + j] += ai * bj
        out = acc[:phi]
        red = self.red
        for k in range(phi, 2 * phi - 1):
            ck = acc[k]
            if ck:
                rk = red[k]
                for i in range(phi):
                    if rk[i]:
                        out[i] += ck * rk[i]
        return tuple(out)


@lru_cache(maxsize=None)
def cyclo_field(n: int) -> _CycloField:
    return _CycloField(n)


def _norm_rat(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Cyclotomic:
    """An element of Q(zeta_n) in the power basis."""

    __slots__ = ("n", "c")

    def __init__(self, n: int, coeffs: Iterable[Rational]) -> None:
        F = cyclo_field(n)
        c = tuple(_norm_rat(Fraction(x)) if isinstance(x, Fraction) else x for x in coeffs)
        if len(c) != F.phi:
            raise ValueError("coefficient vector has wrong length")
        self.n = n
        self.c = c

    @classmethod
    def _raw(cls, n: int, c: tuple) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.n = n
        obj.c = c
        return obj

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyclotomic":
        return cls._raw(n, cyclo_field(n).pow[k % n])

    @classmethod
    def rational(cls, n: int, q: Rational) -> "Cyclotomic":
        phi = cyclo_field(n).phi
        return cls._raw(n, (_norm_rat(Fraction(q)),) + (0,) * (phi - 1))

    # coercion -----------------------------------------------------------
    def _coerce(self, other) -> Tuple["Cyclotomic", "Cyclotomic"]:
        if isinstance(other, Cyclotomic):
            if other.n == self.n:
                return self, other
            m = self.n * other.n // igcd(self.n, other.n)
            return self.embed(m), other.embed(m)
        if isinstance(other, (int, Fraction)):
            return self, Cyclotomic.rational(self.n, other)
        raise TypeError(f"cannot combine Cyclotomic with {type(other).__name__}")

    def embed(self, m: int) -> "Cyclotomic":
        """Image in Q(zeta_m) for a multiple m of n (zeta_n -> zeta_m^(m/n))."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError("target order must be a multiple")
        step = m // self.n
        F = cyclo_field(m)
        out = [0] * F.phi
        for k, ck in enumerate(self.c):
            if ck:
                v = F.pow[(k * step) % m]
                for i, vi in enumerate(v):
                    if vi:
                        out[i] += ck * vi
        return Cyclotomic._raw(m, tuple(_norm_rat(x) if isinstance(x, Fraction) else x for x in out))

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic._raw(a.n, tuple(_norm_rat(x + y) for x, y in zip(a.c, b.c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.n, tuple(-x for x in self.c))

    def __sub__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic._raw(a.n, tuple(_norm_rat(x - y) for x, y in zip(a.c, b.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self.n, tuple(_norm_rat(x * other) for x in self.c))
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        prod = cyclo_field(a.n).mul(a.c, b.c)
        return Cyclotomic._raw(a.n, tuple(_norm_rat(x) if isinstance(x, Fraction) else x for x in prod))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in Q[t] between self and Phi_n
        n = self.n
        phi_co = [Fraction(x) for x in cyclotomic_coeffs(n)]
        a = _trim([Fraction(x) for x in self.c])
        r0, r1 = phi_co, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] != 0:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _trim(_qpoly_sub(s0, _qpoly_mul(q, s1)))
            if len(r1) == 1 and r1[0] == 0:
                break
        # r0 is a nonzero constant gcd
        g = r0[0]
        inv = [x / g for x in s0]
        phi = cyclo_field(n).phi
        inv = inv + [Fraction(0)] * (phi - len(inv))
        return Cyclotomic._raw(n, tuple(_norm_rat(x) for x in inv[:phi]))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic._raw(self.n, tuple(_norm_rat(Fraction(x) / other) for x in self.c))
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic.rational(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "Cyclotomic":
        """Image under zeta -> zeta^-1 (complex conjugation)."""
        F = cyclo_field(self.n)
        out = [0] * F.phi
        for k, ck in enumerate(self.c):
            if ck:
                v = F.pow[(-k) % self.n]
                for i, vi in enumerate(v):
                    if vi:
                        out[i] += ck * vi
        return Cyclotomic._raw(self.n, tuple(_norm_rat(x) if isinstance(x, Fraction) else x for x in out))

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_rational(self) -> Rational:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.c[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.c[0] == other
        if isinstance(other, Cyclotomic):
            a, b = self._coerce(other)
            return a.c == b.c
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.c[0])
        return hash((self.n, self.c))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        parts = []
        for k, ck in enumerate(self.c):
            if ck:
                parts.append(f"{ck}" if k == 0 else f"{ck}*z{self.n}^{k}")
        return "(" + (" + ".join(parts) if parts else "0") + ")"


def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p if p else [Fraction(0)]


def _qpoly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _qpoly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _qpoly_divmod(a: list, b: list) -> Tuple[list, list]:
    a = list(a)
    b = _trim(list(b))
    if len(a) < len(b):
        return [Fraction(0)], _trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for i, bc in enumerate(b):
                a[k + i] -= c * bc
    return _trim(q), _trim(a[: len(b) - 1] or [Fraction(0)])


def coeff_is_zero(c) -> bool:
    if isinstance(c, Cyclotomic):
        return c.is_zero()
    return c == 0


def coeff_inverse(c):
    if isinstance(c, Cyclotomic):
        return c.inverse()
    return Fraction(1) / c


def coeff_simplify(c):
    """Collapse rational Cyclotomic values to int/Fraction."""
    if isinstance(c, Cyclotomic) and c.is_rational():
        return c.c[0]
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


# ---------------------------------------------------------------------------
# variable ordering

_BASE_ORDER = ("X", "Y", "x", "y", "A", "B", "t")
_GEN_ORDER = ("q", "r", "Q", "R", "eu")


def var_rank(name: str) -> tuple:
    """Sort key realizing the global variable order.

    X, Y, x, y, A, B, t, then the generator symbols q, r, Q, R, eu, a1, a2, ...,
    then anything else alphabetically.
    """
    if name in _BASE_ORDER:
        return (0, _BASE_ORDER.index(name), "")
    if name in _GEN_ORDER:
        return (1, _GEN_ORDER.index(name), "")
    if name.startswith("a") and name[1:].isdigit():
        return (1, len(_GEN_ORDER) + int(name[1:]), "")
    return (2, 0, name)


def merge_vars(*var_lists: Sequence[str]) -> Tuple[str, ...]:
    names = set()
    for vl in var_lists:
        names.update(vl)
    return tuple(sorted(names, key=var_rank))


# ---------------------------------------------------------------------------
# sparse multivariate polynomials

Exps = Tuple[int, ...]


class MultiPoly:
    """Sparse polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exps, object] | None = None) -> None:
        self.vars = tuple(variables)
        clean: Dict[Exps, object] = {}
        if terms:
            nv = len(self.vars)
            for e, c in terms.items():
                if len(e) != nv:
                    raise ValueError("exponent length does not match variables")
                if not coeff_is_zero(c):
                    clean[tuple(e)] = coeff_simplify(c)
        self.terms = clean

    @classmethod
    def _raw(cls, variables: Tuple[str, ...], terms: Dict[Exps, object]) -> "MultiPoly":
        obj = object.__new__(cls)
        obj.vars = variables
        obj.terms = terms
        return obj

    # constructors -------------------------------------------------------
    @classmethod
    def const(cls, c, variables: Sequence[str] = ()) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str] | None = None) -> "MultiPoly":
        variables = tuple(variables) if variables is not None else (name,)
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls(variables, {tuple(e): 1})

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Mapping[str, int], coeff=1) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {tuple(exps.get(v, 0) for v in variables): coeff})

    # variable handling --------------------------------------------------
    def with_vars(self, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        if variables == self.vars:
            return self
        idx = []
        for v in self.vars:
            if v in variables:
                idx.append(variables.index(v))
            else:
                idx.append(None)
        out = {}
        n = len(variables)
        for e, c in self.terms.items():
            ne = [0] * n
            for k, p in enumerate(e):
                if p:
                    j = idx[k]
                    if j is None:
                        raise ValueError(f"variable {self.vars[k]} is used but missing from target")
                    ne[j] = p
            out[tuple(ne)] = c
        return MultiPoly._raw(variables, out)

    def used_vars(self) -> Tuple[str, ...]:
        used = [False] * len(self.vars)
        for e in self.terms:
            for k, p in enumerate(e):
                if p:
                    used[k] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    def trim_vars(self) -> "MultiPoly":
        return self.with_vars(self.used_vars())

    def _unify(self, other: "MultiPoly") -> Tuple["MultiPoly", "MultiPoly"]:
        if self.vars == other.vars:
            return self, other
        vs = merge_vars(self.vars, other.vars)
        return self.with_vars(vs), other.with_vars(vs)

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.const(other, self.vars)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (MultiPoly, int, Fraction, Cyclotomic)):
            return NotImplemented
        a, b = self._unify(self._lift(other))
        out = dict(a.terms)
        for e, c in b.terms.items():
            if e in out:
                s = out[e] + c
                if coeff_is_zero(s):
                    del out[e]
                else:
                    out[e] = coeff_simplify(s)
            else:
                out[e] = c
        return MultiPoly._raw(a.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (MultiPoly, int, Fraction, Cyclotomic)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            if coeff_is_zero(other):
                return MultiPoly._raw(self.vars, {})
            return MultiPoly._raw(self.vars, {e: coeff_simplify(c * other) for e, c in self.terms.items()
                                               if not coeff_is_zero(c * other)})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._unify(other)
        out: Dict[Exps, object] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(p + q for p, q in zip(e1, e2))
                if e in out:
                    out[e] = out[e] + c1 * c2
                else:
                    out[e] = c1 * c2
        return MultiPoly._raw(a.vars, {e: coeff_simplify(c) for e, c in out.items() if not coeff_is_zero(c)})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            inv = coeff_inverse(other)
            return self * inv
        if isinstance(other, MultiPoly):
            q, r = self.divmod(other)
            if not r.is_zero():
                raise ArithmeticError("inexact polynomial division")
            return q
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = MultiPoly.const(other, self.vars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._unify(other)
        if len(a.terms) != len(b.terms):
            return False
        for e, c in a.terms.items():
            d = b.terms.get(e)
            if d is None or not coeff_is_zero(c - d):
                return False
        return True

    def __hash__(self) -> int:
        p = self.trim_vars()
        return hash((p.vars, frozenset((e, hash(c)) for e, c in p.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # queries ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError("not a constant")
        return next(iter(self.terms.values()))

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        k = self.vars.index(var)
        return max(e[k] for e in self.terms)

    def leading(self) -> Tuple[Exps, object]:
        """Leading (exponents, coefficient) under graded lex order."""
        if not self.terms:
            raise ZeroInput("zero polynomial has no leading term")
        e = max(self.terms, key=lambda x: (sum(x), x))
        return e, self.terms[e]

    def coefficients_in(self, var: str) -> Dict[int, "MultiPoly"]:
        """Coefficients as a polynomial in ``var`` (other variables kept)."""
        if var not in self.vars:
            return {0: self} if self.terms else {}
        k = self.vars.index(var)
        rest = self.vars[:k] + self.vars[k + 1:]
        out: Dict[int, Dict[Exps, object]] = {}
        for e, c in self.terms.items():
            out.setdefault(e[k], {})[e[:k] + e[k + 1:]] = c
        return {p: MultiPoly._raw(rest, t) for p, t in out.items()}

    def diff(self, var: str) -> "MultiPoly":
        if var not in self.vars:
            return MultiPoly._raw(self.vars, {})
        k = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                ne = e[:k] + (e[k] - 1,) + e[k + 1:]
                out[ne] = coeff_simplify(c * e[k])
        return MultiPoly._raw(self.vars, out)

    def subs(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute constants or MultiPolys for variables."""
        keep = tuple(v for v in self.vars if v not in values)
        target_vars = list(keep)
        for val in values.values():
            if isinstance(val, MultiPoly):
                target_vars.extend(val.vars)
        target = merge_vars(target_vars)
        result = MultiPoly._raw(target, {})
        cache: Dict[Tuple[str, int], MultiPoly] = {}

        def power(name: str, p: int) -> MultiPoly:
            key = (name, p)
            if key not in cache:
                val = values[name]
                if isinstance(val, MultiPoly):
                    cache[key] = val.with_vars(target) ** p
                else:
                    cache[key] = MultiPoly.const(val ** p if p else 1, target)
            return cache[key]

        acc: Dict[Exps, object] = {}
        for e, c in self.terms.items():
            mono = {}
            term = None
            for v, p in zip(self.vars, e):
                if v in values:
                    if p:
                        f = power(v, p)
                        term = f if term is None else term * f
                else:
                    mono[v] = p
            base_e = tuple(mono.get(v, 0) for v in target)
            if term is None:
                acc[base_e] = acc.get(base_e, 0) + c
            else:
                for te, tc in term.terms.items():
                    ne = tuple(a + b for a, b in zip(base_e, te))
                    acc[ne] = acc.get(ne, 0) + c * tc
        return MultiPoly(target, acc)

    def map_coeffs(self, fn) -> "MultiPoly":
        return MultiPoly(self.vars, {e: fn(c) for e, c in self.terms.items()})

    def divmod(self, other: "MultiPoly") -> Tuple["MultiPoly", "MultiPoly"]:
        """Multivariate division by one polynomial (graded lex leading terms)."""
        a, b = self._unify(other)
        if b.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        le, lc = b.leading()
        inv = coeff_inverse(lc)
        rem = dict(a.terms)
        quo: Dict[Exps, object] = {}
        out_rem: Dict[Exps, object] = {}
        bterms = list(b.terms.items())
        key = lambda x: (sum(x), x)
        while rem:
            e = max(rem, key=key)
            c = rem[e]
            if all(p >= q for p, q in zip(e, le)):
                qe = tuple(p - q for p, q in zip(e, le))
                qc = c * inv
                quo[qe] = coeff_simplify(quo.get(qe, 0) + qc)
                for be, bc in bterms:
                    ne = tuple(p + q for p, q in zip(qe, be))
                    v = rem.get(ne, 0) - qc * bc
                    if coeff_is_zero(v):
                        rem.pop(ne, None)
                    else:
                        rem[ne] = v
            else:
                out_rem[e] = c
                del rem[e]
        return MultiPoly(a.vars, quo), MultiPoly(a.vars, out_rem)

    def is_rational(self) -> bool:
        return all(not isinstance(c, Cyclotomic) for c in self.terms.values())

    def monic(self) -> "MultiPoly":
        if self.is_zero():
            return self
        _, lc = self.leading()
        return self * coeff_inverse(lc)

    def __iter__(self) -> Iterator[Tuple[Exps, object]]:
        return iter(self.terms.items())

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_str()})"

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda x: (sum(x), x), reverse=True):
            c = self.terms[e]
            mono = "*".join(v if p == 1 else f"{v}**{p}" for v, p in zip(self.vars, e) if p)
            if not mono:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def poly_vars(*names: str) -> Tuple[MultiPoly, ...]:
    vs = merge_vars(names)
    return tuple(MultiPoly.var(n, vs) for n in names)


# ---------------------------------------------------------------------------
# gcd (recursive primitive pseudo-remainder sequences)

def _const_one(vars_: Tuple[str, ...]) -> MultiPoly:
    return MultiPoly.const(1, vars_)


def _prem(f: Dict[int, MultiPoly], g: Dict[int, MultiPoly]) -> Dict[int, MultiPoly]:
    """Pseudo-remainder of univariate polys with polynomial coefficients."""
    dg = max(g)
    lg = g[dg]
    r = dict(f)
    while r and max(r) >= dg:
        dr = max(r)
        lr = r[dr]
        shift = dr - dg
        new: Dict[int, MultiPoly] = {}
        for k, c in r.items():
            new[k] = c * lg
        for k, c in g.items():
            kk = k + shift
            new[kk] = new.get(kk, MultiPoly._raw(lg.vars, {})) - lr * c
        r = {k: c for k, c in new.items() if not c.is_zero()}
    return r


def _content(coeffs: Iterable[MultiPoly], vars_: Tuple[str, ...]) -> MultiPoly:
    g = None
    for c in coeffs:
        g = c if g is None else _gcd(g, c)
        if g.is_constant():
            return _const_one(vars_)
    return g if g is not None else _const_one(vars_)


def _to_univ(f: MultiPoly, var: str) -> Dict[int, MultiPoly]:
    return f.coefficients_in(var)


def _from_univ(u: Mapping[int, MultiPoly], var: str, vars_: Tuple[str, ...]) -> MultiPoly:
    out = MultiPoly._raw(vars_, {})
    x = MultiPoly.var(var, vars_)
    for k, c in u.items():
        out = out + c.with_vars(vars_) * x ** k
    return out


def _gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Gcd up to a unit; f, g share the same variable tuple."""
    vars_ = f.vars
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    if f.is_constant() or g.is_constant():
        return _const_one(vars_)
    used = merge_vars(f.used_vars(), g.used_vars())
    var = used[0]
    k = vars_.index(var)
    rest = vars_[:k] + vars_[k + 1:]
    uf, ug = _to_univ(f, var), _to_univ(g, var)
    cf = _content(uf.values(), rest)
    cg = _content(ug.values(), rest)
    c = _gcd(cf, cg)
    pf = {e: (v / cf) for e, v in uf.items()}
    pg = {e: (v / cg) for e, v in ug.items()}
    if max(pf) < max(pg):
        pf, pg = pg, pf
    while pg and max(pg) > 0:
        r = _prem(pf, pg)
        if not r:
            break
        cr = _content(r.values(), rest)
        pf, pg = pg, {e: v / cr for e, v in r.items()}
    else:
        if pg:
            # pg is a nonzero constant in var: the primitive gcd is trivial
            return c.with_vars(vars_)
    # pg divides pf: gcd is primitive part of pg
    cpg = _content(pg.values(), rest)
    pg = {e: v / cpg for e, v in pg.items()}
    return _from_univ(pg, var, vars_) * c.with_vars(vars_)


def multivar_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Monic gcd (leading coefficient 1 under graded lex)."""
    f, g = f._unify(g)
    if f.is_zero() and g.is_zero():
        return f
    return _gcd(f, g).monic()


# ---------------------------------------------------------------------------
# squarefree decomposition and squareness

def _squarefree_parts_univ(f: MultiPoly, var: str) -> list:
    """Yun's algorithm for a polynomial primitive in ``var`` (positive degree).

    Returns [(factor, multiplicity), ...] with squarefree, pairwise coprime factors.
    """
    df = f.diff(var)
    a0 = multivar_gcd(f, df)
    b = f / a0
    c = df / a0
    d = c - b.diff(var)
    out = []
    i = 1
    while not b.is_constant():
        a = multivar_gcd(b, d)
        if not a.is_constant():
            out.append((a, i))
        b = b / a
        c = d / a
        d = c - b.diff(var)
        i += 1
    return out


def squarefree_decomposition(f: MultiPoly) -> list:
    """Factors (g_i, m_i) with f = const * prod g_i^m_i, each g_i squarefree."""
    if f.is_zero():
        raise ZeroInput("squarefree decomposition of zero")
    f = f.trim_vars()
    if f.is_constant():
        return []
    var = f.vars[0]
    rest = f.vars[1:]
    u = f.coefficients_in(var)
    cont = _content(u.values(), rest)
    prim = f / cont.with_vars(f.vars)
    out = []
    if not cont.is_constant():
        out.extend(squarefree_decomposition(cont))
    if prim.degree(var) > 0:
        out.extend(_squarefree_parts_univ(prim.trim_vars(), var))
    return out


def poly_is_square_up_to_constant(f: MultiPoly) -> bool:
    if f.is_zero():
        raise ZeroInput("squareness of zero")
    return all(m % 2 == 0 for _, m in squarefree_decomposition(f))


# ---------------------------------------------------------------------------
# rational functions

class RatFunc:
    """Reduced fraction num/den with den monic under graded lex."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None, reduce: bool = True) -> None:
        if den is None:
            den = MultiPoly.const(1, num.vars)
        num, den = num._unify(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce:
            if num.is_zero():
                den = MultiPoly.const(1, num.vars)
            else:
                g = multivar_gcd(num, den)
                if not g.is_constant():
                    num = num / g
                    den = den / g
            _, lc = den.leading()
            if not (lc == 1):
                inv = coeff_inverse(lc)
                num = num * inv
                den = den * inv
        self.num = num
        self.den = den

    @property
    def vars(self) -> Tuple[str, ...]:
        return self.num.vars

    def _lift(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc(other)
        return RatFunc(MultiPoly.const(other, self.vars))

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def __repr__(self) -> str:
        return f"RatFunc(({self.num.to_str()}) / ({self.den.to_str()}))"


def is_square_up_to_constant(f: Union[RatFunc, MultiPoly]) -> bool:
    """True iff f = gamma * g^2 for a nonzero constant gamma and a fraction g."""
    if isinstance(f, MultiPoly):
        return poly_is_square_up_to_constant(f)
    if f.is_zero():
        raise ZeroInput("squareness of zero")
    return poly_is_square_up_to_constant(f.num * f.den)
