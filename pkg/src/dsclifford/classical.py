"""Classical angular momentum of a point on the pseudo-sphere."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebras import GENERATOR_PAIRS, lower
from .geometry import embed
from .multivector import Multivector, grade, left_contraction, scalar_product, wedge
from .sampling import rational
from .signature import BULK


@dataclass(frozen=True)
class ClassicalState:
    """Position x (x.x = ell^2) and momentum p (x.p = 0) as bulk vectors."""

    x: Multivector
    p: Multivector
    ell: object

    def __post_init__(self):
        for v in (self.x, self.p):
            if v.sig != BULK or not v.is_homogeneous(1):
                raise ValueError("x and p must be bulk vectors")
        if scalar_product(self.x, self.x) != self.ell ** 2:
            raise ValueError("x . x must equal ell^2")
        if scalar_product(self.x, self.p) != 0:
            raise ValueError("x . p must vanish")

    @property
    def l(self) -> Multivector:
        return wedge(self.x, self.p)


def random_state(rng: random.Random, ell=Fraction(3, 2)) -> ClassicalState:
    """Exact state: x from a rational chart point, p made orthogonal to x by projection."""
    while True:
        try:
            X = embed([rational(rng) for _ in range(4)], ell).X
            break
        except ValueError:
            continue
    # x = X^a E_a
    x = sum((lower(BULK, lab) * c for lab, c in zip(BULK.labels, X)), Multivector.zero(BULK))
    p = Multivector.from_vector(BULK, [rational(rng) for _ in range(5)])
    p = p - x * (scalar_product(x, p) / scalar_product(x, x))
    return ClassicalState(x, p, Fraction(ell))


def component_form(state: ClassicalState) -> dict:
    """L_ab = X_a P_b - X_b P_a with X_a, P_b the coefficients on E^a."""
    X = state.x.vector_coeffs()
    P = state.p.vector_coeffs()
    pos = {lab: k for k, lab in enumerate(BULK.labels)}
    return {(a, b): X[pos[a]] * P[pos[b]] - X[pos[b]] * P[pos[a]] for a, b in GENERATOR_PAIRS}


def classical_identities(state: ClassicalState) -> dict[str, bool]:
    x, p, l, ell = state.x, state.p, state.l, state.ell
    ll = l * l
    comps = component_form(state)
    return {
        "xp_is_wedge": x * p == wedge(x, p),
        "l_squared": ll == -(ell ** 2) * (p * p),
        "l_wedge_l": wedge(l, l) == 0 and grade(ll, 4) == 0,
        "l_squared_is_contraction": ll == left_contraction(l, l),
        "components": all(l.coeff(BULK.mask(a, b)) == c for (a, b), c in comps.items()),
    }
