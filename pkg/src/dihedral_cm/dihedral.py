"""The dihedral group W_d: elements, characters, the outer element tau,
induction from the index-2 subgroup <s_0, s_2>, and translation permutations.

Elements are stored abstractly.  Internally an element is also encoded as an
integer code in [0, 2d): code g < d is the rotation c^g, code g >= d is the
reflection s_(g-d).  Matrices are produced on demand from rho_k.

Multiplication rules (s_i = [[0, z^i], [z^-i, 0]], c = diag(z, z^-1)):
    c^i c^j = c^(i+j),  c^i s_j = s_(i+j),  s_j c^i = s_(j-i),  s_i s_j = c^(i-j).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .arith import Cyclotomic


class NotSubgroup(ValueError):
    """Raised when an embedding does not define a subgroup of W."""


# ---------------------------------------------------------------------------
# integer codes

def code_mul(d: int, g: int, h: int) -> int:
    if g < d:
        if h < d:
            return (g + h) % d
        return d + (g + h - d) % d
    if h < d:
        return d + (g - d - h) % d
    return (g - h) % d


def code_inv(d: int, g: int) -> int:
    return (-g) % d if g < d else g


def code_is_reflection(d: int, g: int) -> bool:
    return g >= d


@dataclass(frozen=True)
class GroupElement:
    d: int
    kind: str  # "rotation" or "reflection"
    index: int

    def __post_init__(self) -> None:
        if self.kind not in ("rotation", "reflection"):
            raise ValueError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "index", self.index % self.d)

    @classmethod
    def rotation(cls, d: int, i: int = 1) -> "GroupElement":
        return cls(d, "rotation", i)

    @classmethod
    def reflection(cls, d: int, i: int) -> "GroupElement":
        return cls(d, "reflection", i)

    @classmethod
    def identity(cls, d: int) -> "GroupElement":
        return cls(d, "rotation", 0)

    @classmethod
    def from_code(cls, d: int, g: int) -> "GroupElement":
        return cls(d, "rotation", g) if g < d else cls(d, "reflection", g - d)

    @property
    def code(self) -> int:
        return self.index if self.kind == "rotation" else self.d + self.index

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.d != self.d:
            raise ValueError("elements of different dihedral groups")
        return GroupElement.from_code(self.d, code_mul(self.d, self.code, other.code))

    def inverse(self) -> "GroupElement":
        return GroupElement.from_code(self.d, code_inv(self.d, self.code))

    def __pow__(self, k: int) -> "GroupElement":
        out = GroupElement.identity(self.d)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return self.kind == "rotation" and self.index == 0

    def matrix(self, k: int = 1) -> Tuple[Tuple[Cyclotomic, Cyclotomic], Tuple[Cyclotomic, Cyclotomic]]:
        return rho(self.d, k, self)

    def __repr__(self) -> str:
        if self.kind == "rotation":
            return "1" if self.index == 0 else f"c^{self.index}"
        return f"s_{self.index}"


def elements(d: int) -> List[GroupElement]:
    return [GroupElement.from_code(d, g) for g in range(2 * d)]


def rho(d: int, k: int, g: GroupElement):
    """Matrix of g in rho_k: s_i -> s_(ki), c^i -> c^(ki)."""
    z = lambda e: Cyclotomic.zeta(d, e)
    zero = Cyclotomic.rational(d, 0)
    i = g.index * k
    if g.kind == "rotation":
        return ((z(i), zero), (zero, z(-i)))
    return ((zero, z(i)), (z(-i), zero))


def mat_mul(m1, m2):
    return tuple(tuple(sum((m1[r][k] * m2[k][c] for k in range(len(m2))), 0 * m1[0][0])
                       for c in range(len(m2[0]))) for r in range(len(m1)))


def reflection_data(d: int, i: int):
    """Root X - z^i Y, coroot z^i x - y and their pairing (= 2 z^i)."""
    from .arith import MultiPoly, merge_vars

    vs = merge_vars(("X", "Y", "x", "y"))
    z = Cyclotomic.zeta(d, i)
    X, Y, x, y = (MultiPoly.var(v, vs) for v in ("X", "Y", "x", "y"))
    root = X - Y * z
    coroot = x * z - y
    # <coroot, root> = root evaluated at the vector coroot: X -> z^i, Y -> -1
    pairing = z + z
    return root, coroot, pairing


# ---------------------------------------------------------------------------
# conjugacy classes and characters

@lru_cache(maxsize=None)
def conjugacy_classes(d: int) -> Tuple[Tuple[int, ...], ...]:
    """Classes as tuples of codes, in order of their smallest code."""
    seen = set()
    out = []
    for g in range(2 * d):
        if g in seen:
            continue
        cls = sorted({code_mul(d, code_mul(d, h, g), code_inv(d, h)) for h in range(2 * d)})
        seen.update(cls)
        out.append(tuple(cls))
    return tuple(out)


def are_conjugate(d: int, g: GroupElement, h: GroupElement) -> bool:
    for cls in conjugacy_classes(d):
        if g.code in cls:
            return h.code in cls
    return False


@dataclass(frozen=True)
class Character:
    """Class function of W_d with values in Q(zeta_d) stored per element code."""

    name: str
    d: int
    values: Tuple[Cyclotomic, ...] = field(repr=False)

    def __call__(self, g) -> Cyclotomic:
        code = g.code if isinstance(g, GroupElement) else g
        return self.values[code]

    @property
    def degree(self) -> int:
        return int(self.values[0].to_rational())

    def class_values(self) -> Dict[Tuple[int, ...], Cyclotomic]:
        return {cls: self.values[cls[0]] for cls in conjugacy_classes(self.d)}

    def __repr__(self) -> str:
        return self.name


def _char_from(name: str, d: int, fn) -> Character:
    return Character(name, d, tuple(fn(g) for g in range(2 * d)))


def chi_k(d: int, k: int) -> Character:
    def val(g: int) -> Cyclotomic:
        if g < d:
            return Cyclotomic.zeta(d, k * g) + Cyclotomic.zeta(d, -k * g)
        return Cyclotomic.rational(d, 0)
    return _char_from(f"chi_{k}", d, val)


@lru_cache(maxsize=None)
def irr_characters(d: int) -> Tuple[Character, ...]:
    """Irr(W_d) in the order 1_W, eps, [eps_s, eps_t], chi_1, ..., chi_floor((d-1)/2)."""
    if d < 3:
        raise ValueError("d must be at least 3")
    one = lambda v: Cyclotomic.rational(d, v)
    out = [
        _char_from("1_W", d, lambda g: one(1)),
        _char_from("eps", d, lambda g: one(1 if g < d else -1)),
    ]
    if d % 2 == 0:
        # eps_s(s_i) = -1 iff s_i is conjugate to s = s_0 (i even); eps_s(c) = -1
        out.append(_char_from("eps_s", d, lambda g: one((-1) ** g if g < d else (-1 if (g - d) % 2 == 0 else 1))))
        out.append(_char_from("eps_t", d, lambda g: one((-1) ** g if g < d else (1 if (g - d) % 2 == 0 else -1))))
    for k in range(1, (d - 1) // 2 + 1):
        out.append(chi_k(d, k))
    return tuple(out)


def character(d: int, name: str) -> Character:
    for ch in irr_characters(d):
        if ch.name == name:
            return ch
    raise KeyError(f"no irreducible character {name!r} for d={d}")


def inner_product(chi: Character, psi: Character):
    """<chi, psi> = (1/|W|) sum_w chi(w) conj(psi(w))."""
    d = chi.d
    total = Cyclotomic.rational(d, 0)
    for g in range(2 * d):
        total = total + chi(g) * psi(g).conjugate()
    return (total / (2 * d)).to_rational() if (total / (2 * d)).is_rational() else total / (2 * d)


def decompose(values: Sequence[Cyclotomic], d: int) -> Dict[str, int]:
    """Multiplicities of a class function (per element code) in the Irr basis."""
    tmp = Character("tmp", d, tuple(values))
    out = {}
    for ch in irr_characters(d):
        m = inner_product(tmp, ch)
        if not isinstance(m, (int, Fraction)) or Fraction(m).denominator != 1:
            raise ValueError(f"non-integral multiplicity of {ch.name}: {m}")
        if m:
            out[ch.name] = int(m)
    return out


def regular_character(d: int) -> Dict[str, int]:
    return {ch.name: ch.degree for ch in irr_characters(d)}


# ---------------------------------------------------------------------------
# tau

def tau_matrix(d: int):
    """[[0, xi], [xi^-1, 0]] with xi a primitive 2d-th root, xi^2 = zeta."""
    xi = Cyclotomic.zeta(2 * d, 1)
    zero = Cyclotomic.rational(2 * d, 0)
    return ((zero, xi), (xi.inverse(), zero))


def tau_conjugate(g: GroupElement) -> GroupElement:
    """tau g tau^-1: s_i -> s_(1-i), c^j -> c^-j."""
    if g.kind == "rotation":
        return GroupElement.rotation(g.d, -g.index)
    return GroupElement.reflection(g.d, 1 - g.index)


def tau_action(chi: Character) -> Character:
    """The twist chi o (conjugation by tau), identified with an Irr element."""
    d = chi.d
    vals = tuple(chi(tau_conjugate(GroupElement.from_code(d, g))) for g in range(2 * d))
    for ch in irr_characters(d):
        if ch.values == vals:
            return ch
    return Character(f"tau({chi.name})", d, vals)


# ---------------------------------------------------------------------------
# induction from W' = <s_0, s_2>

def index2_subgroup(d: int) -> Tuple[int, ...]:
    """Codes of W' = <s_0, s_2> (even rotations and even reflections)."""
    if d % 2:
        raise NotSubgroup("W' = <s_0, s_2> has index 2 only for d even")
    gens = [d + 0, d + 2 % d]
    sub = {0}
    frontier = [0]
    while frontier:
        g = frontier.pop()
        for h in gens:
            p = code_mul(d, g, h)
            if p not in sub:
                sub.add(p)
                frontier.append(p)
    return tuple(sorted(sub))


def induce_from_index2(d: int, sub_values: Dict[int, Cyclotomic]) -> Dict[str, int]:
    """Ind_{W'}^W of a class function of W' given on codes of W'.

    Frobenius formula: Ind(f)(g) = (1/|W'|) sum_{h in W, h g h^-1 in W'} f(h g h^-1).
    """
    sub = index2_subgroup(d)
    if set(sub_values) != set(sub):
        raise NotSubgroup("class function is not defined exactly on W'")
    subset = set(sub)
    vals = []
    for g in range(2 * d):
        acc = Cyclotomic.rational(d, 0)
        for h in range(2 * d):
            k = code_mul(d, code_mul(d, h, g), code_inv(d, h))
            if k in subset:
                acc = acc + sub_values[k]
        vals.append(acc / len(sub))
    return decompose(vals, d)


def sub_trivial(d: int) -> Dict[int, Cyclotomic]:
    return {g: Cyclotomic.rational(d, 1) for g in index2_subgroup(d)}


def sub_sign(d: int) -> Dict[int, Cyclotomic]:
    return {g: Cyclotomic.rational(d, 1 if g < d else -1) for g in index2_subgroup(d)}


def sub_regular(d: int) -> Dict[int, Cyclotomic]:
    return {g: Cyclotomic.rational(d, d if g == 0 else 0) for g in index2_subgroup(d)}


# ---------------------------------------------------------------------------
# translation permutations

@dataclass(frozen=True)
class Permutation:
    images: Tuple[int, ...]

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def parity(self) -> int:
        """0 for even, 1 for odd."""
        return sum(len(c) - 1 for c in self.cycles()) % 2

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))


def iota_permutation(x: GroupElement, y: GroupElement) -> Permutation:
    """w -> x w y^-1 on the 2d element codes."""
    d = x.d
    yi = code_inv(d, y.code)
    return Permutation(tuple(code_mul(d, code_mul(d, x.code, w), yi) for w in range(2 * d)))
