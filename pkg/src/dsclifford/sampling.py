"""Seeded random generators for rational test data."""
from __future__ import annotations

import random
from fractions import Fraction

from .multivector import Multivector
from .signature import Signature, grade_of


def rational(rng: random.Random, bound: int = 9, allow_zero: bool = True) -> Fraction:
    while True:
        num = rng.randint(-bound, bound)
        if num or allow_zero:
            return Fraction(num, rng.randint(1, bound))


def random_multivector(rng, sig: Signature, grades=None, density: float = 1.0,
                       exact: bool = True, bound: int = 9) -> Multivector:
    terms = {}
    for m in sig.masks():
        if grades is not None and grade_of(m) not in grades:
            continue
        if rng.random() < density:
            terms[m] = rational(rng, bound)
    mv = Multivector(sig, terms, exact=True)
    return mv if exact else mv.to_float()


def random_vector(rng, sig, exact=True, bound=9):
    return random_multivector(rng, sig, grades=(1,), exact=exact, bound=bound)


def random_simple_bivector(rng, sig, exact=True, bound=9):
    a = random_vector(rng, sig, True, bound)
    b = random_vector(rng, sig, True, bound)
    B = a ^ b
    return B if exact else B.to_float()


def derive(seed: int, name: str) -> random.Random:
    """Independent, reproducible stream per named task."""
    return random.Random(f"{seed}:{name}")


def random_poly(rng, nvars: int, degree: int = 3, terms: int = 4, bound: int = 9, exact: bool = True):
    """Sparse polynomial of total degree <= ``degree`` with small rational coefficients."""
    from .poly import Poly
    out = {}
    for _ in range(terms):
        exps = [0] * nvars
        for _ in range(rng.randint(0, degree)):
            exps[rng.randrange(nvars)] += 1
        out[tuple(exps)] = rational(rng, bound, allow_zero=False)
    p = Poly(nvars, out)
    return p if exact else p.to_float()


def random_field(rng, sig: Signature, space: str, grades=None, blades: int = 3, degree: int = 3,
                 terms: int = 3, exact: bool = True):
    """Polynomial field with a few random blades, each carrying a random polynomial."""
    from .fields import SPACES, PolyField
    pool = [m for m in sig.masks() if grades is None or grade_of(m) in grades]
    comps = {}
    for m in rng.sample(pool, min(blades, len(pool))):
        comps[m] = random_poly(rng, SPACES[space], degree, terms)
    f = PolyField(sig, space, comps, exact=True)
    return f if exact else f.to_float()
