from __future__ import annotations

import random
from fractions import Fraction

from dihedral_cm.cherednik import PBWElement


def random_pbw(rng: random.Random, d: int, n_terms: int = 3, deg: int = 2) -> PBWElement:
    """Small random element: keys (X^a Y^b, group code, x^c y^e, A, B, t, zeta power)."""
    terms = {}
    for _ in range(n_terms):
        key = (rng.randint(0, deg), rng.randint(0, deg), rng.randrange(2 * d), rng.randint(0, deg),
               rng.randint(0, deg), rng.randint(0, 1), rng.randint(0, 1), 0, rng.randrange(d))
        terms[key] = Fraction(rng.randint(-4, 4) or 1, rng.randint(1, 3))
    return PBWElement(d, terms)
