"""Momentum and angular-momentum operators on bulk polynomial fields.

P_a phi = (d phi / dX^a) E^2 E^1 and L_ab = X_a P_b - X_b P_a with X_a the
metric-lowered coordinates.  The total operator is
L phi = sum_{a<b} E^a E^b (L_ab phi), left multiplication by the basis bivector.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebras import E, GENERATOR_PAIRS, BULK_ORDER
from .fields import PolyField
from .multivector import Multivector, grade, hodge_star, left_contraction, scalar_product
from .poly import Poly
from .signature import BULK, grade_of

SQRT3 = math.sqrt(3.0)


def _pos(label):
    return BULK_ORDER.index(label)


def _bulk(phi: PolyField):
    if phi.space != "bulk" or phi.sig != BULK:
        raise ValueError("bulk operator applied to a non-bulk field")


def unit_bivector() -> Multivector:
    """E^2 E^1, the right multiplier carried by the momentum operator."""
    return E(2, 1)


def _like(mv: Multivector, phi: PolyField) -> Multivector:
    return mv if phi.exact else mv.to_float()


@lru_cache(maxsize=None)
def _coord(label: int) -> Poly:
    i = _pos(label)
    return Poly.var(5, i, Fraction(BULK.squares[i]))


def _coord_for(label, phi):
    p = _coord(label)
    return p if phi.exact else p.to_float()


def momentum(a: int, phi: PolyField) -> PolyField:
    _bulk(phi)
    return phi.diff(_pos(a)) * _like(unit_bivector(), phi)


def rotation(a: int, b: int, phi: PolyField) -> PolyField:
    """Scalar part X_a d_b - X_b d_a of the angular momentum, applied bladewise."""
    _bulk(phi)
    if a == b:
        return PolyField.zero(BULK, "bulk", phi.exact)
    return phi.diff(_pos(b)).scale(_coord_for(a, phi)) - phi.diff(_pos(a)).scale(_coord_for(b, phi))


def angular(a: int, b: int, phi: PolyField) -> PolyField:
    return rotation(a, b, phi) * _like(unit_bivector(), phi)


def total_L(phi: PolyField) -> PolyField:
    out = PolyField.zero(BULK, "bulk", phi.exact)
    for a, b in GENERATOR_PAIRS:
        out = out + _like(E(a, b), phi) * angular(a, b, phi)
    return out


def L_squared(phi: PolyField) -> PolyField:
    return total_L(total_L(phi))


def L_squared_parts(phi: PolyField) -> dict[int, PolyField]:
    """L(L phi) sorted by the grade of each product E^ab E^cd of basis bivectors.

    Keys 0, 2 and 4; the three parts add up to L(L phi).
    """
    _bulk(phi)
    inner = {cd: angular(*cd, phi) for cd in GENERATOR_PAIRS}
    parts = {k: PolyField.zero(BULK, "bulk", phi.exact) for k in (0, 2, 4)}
    for ab in GENERATOR_PAIRS:
        for cd in GENERATOR_PAIRS:
            term = angular(*ab, inner[cd])
            if not term:
                continue
            coef = E(*ab) * E(*cd)
            (m, _), = coef.items()
            parts[grade_of(m)] = parts[grade_of(m)] + _like(coef, phi) * term
    return parts


def L_squared_split(phi: PolyField) -> tuple[PolyField, PolyField]:
    """Contraction (scalar-coefficient) and wedge (grade-4-coefficient) parts of L(L phi)."""
    parts = L_squared_parts(phi)
    return parts[0], parts[4]


def L_squared_commutator_part(phi: PolyField) -> PolyField:
    """Grade-2 part of L(L phi); it equals 3 (L phi) E^2 E^1."""
    return L_squared_parts(phi)[2]


def contraction_from_components(phi: PolyField) -> PolyField:
    """-1/2 sum L_ab (L^ab phi) over all ordered index pairs."""
    out = PolyField.zero(BULK, "bulk", phi.exact)
    for a, b in GENERATOR_PAIRS:
        s = BULK.square(a) * BULK.square(b)
        out = out - angular(a, b, angular(a, b, phi)).scale(s)
    return out


def wedge_op(phi: PolyField) -> PolyField:
    return L_squared_parts(phi)[4]


def commutator_identity_sides(ab, cd, phi, inner=None):
    """Both sides of the so(4,1) bracket for the angular operators.

    Returns ``(lhs, rhs)`` with lhs = [L_ab, L_cd] phi and rhs the combination
    h_ac L_bd + h_bd L_ac - h_bc L_ad - h_ad L_bc applied to phi.
    """
    from .algebras import bracket_formula
    (a, b), (c, d) = ab, cd
    inner = inner or {}
    l_cd = inner.get(cd) or angular(c, d, phi)
    l_ab = inner.get(ab) or angular(a, b, phi)
    lhs = angular(a, b, l_cd) - angular(c, d, l_ab)
    rhs = PolyField.zero(BULK, "bulk", phi.exact)
    for (p, q), k in bracket_formula(ab, cd).items():
        term = inner.get((p, q)) or angular(p, q, phi)
        rhs = rhs + term.scale(k)
    return lhs, rhs


def casimir2_check(F: Multivector, ell) -> dict:
    """Relations between a grade-4 element and its dual vector W = *F / (8 ell)."""
    if F.sig != BULK or not F.is_homogeneous(4):
        raise ValueError("casimir2_check needs a bulk grade-4 element")
    ell = Fraction(ell) if F.exact else float(ell)
    W = hodge_star(F) / (8 * ell)
    FF = F * F
    values = {
        "scalar": scalar_product(F, F),
        "contraction": left_contraction(F, F).scalar_part(),
        "product": FF.scalar_part(),
        "dual": -64 * ell * ell * scalar_product(W, W),
    }
    return {
        "values": values,
        "W_is_vector": W.is_homogeneous(1),
        "product_is_scalar": FF.is_homogeneous(0),
        "holds": len(set(values.values())) == 1 and FF.is_homogeneous(0) and W.is_homogeneous(1),
    }


@dataclass(frozen=True)
class OperatorParams:
    """Radius, mass, spin and the branch of the eigenvalue lambda.

    lambda^2 = m^2 + 4 sqrt(3) m / ell on the '+' branch and
    m^2 - 4 sqrt(3) m / ell on the '-' branch (which needs m >= 4 sqrt(3) / ell).
    """

    ell: float
    m: float
    s: float = 0.5
    branch: str = "+"

    def __post_init__(self):
        if not self.ell > 0:
            raise ValueError("ell must be positive")
        if self.m < 0:
            raise ValueError("m must be non-negative")
        if self.branch not in "+-" or len(self.branch) != 1:
            raise ValueError("branch is '+' or '-'")
        if self.branch == "-" and self.m < 4 * SQRT3 / self.ell:
            raise ValueError("the '-' branch needs m >= 4 sqrt(3) / ell")

    @property
    def wedge_eigenvalue(self) -> float:
        """8 ell m sqrt(s(s+1)), which is 4 sqrt(3) m ell for s = 1/2."""
        return 8 * self.ell * self.m * math.sqrt(self.s * (self.s + 1))

    @property
    def lam(self) -> float:
        sgn = 1 if self.branch == "+" else -1
        return math.sqrt(self.m ** 2 + sgn * self.wedge_eigenvalue / self.ell ** 2)


def _float_field(phi: PolyField):
    from .multivector import ModeError
    if phi.exact:
        raise ModeError("residuals with irrational constants need a float-mode field (use to_float())")


def dhess1_residual(phi: PolyField, params: OperatorParams) -> PolyField:
    """(1/ell) L phi - lambda phi."""
    _float_field(phi)
    return total_L(phi).scale(1 / params.ell) - phi.scale(params.lam)


def telescoping_sides(phi: PolyField, params: OperatorParams):
    """((1/ell) L + lam)((1/ell) L - lam) phi and ((1/ell^2) L^2 - lam^2) phi."""
    _float_field(phi)
    first = dhess1_residual(phi, params)
    lhs = total_L(first).scale(1 / params.ell) + first.scale(params.lam)
    rhs = L_squared(phi).scale(1 / params.ell ** 2) - phi.scale(params.lam ** 2)
    return lhs, rhs


def wedge_constraint_residual(phi: PolyField, params: OperatorParams) -> PolyField:
    """(L^L) phi - 8 ell m sqrt(s(s+1)) phi."""
    _float_field(phi)
    return wedge_op(phi) - phi.scale(params.wedge_eigenvalue)


def fourth_order_residual(phi: PolyField, params: OperatorParams) -> PolyField:
    """(1/(64 ell^2)) (L^L)(L^L) phi - m^2 s(s+1) phi."""
    _float_field(phi)
    ell, m, s = params.ell, params.m, params.s
    return wedge_op(wedge_op(phi)).scale(1 / (64 * ell * ell)) - phi.scale(m * m * s * (s + 1))


def fourth_order_factored(phi: PolyField, params: OperatorParams) -> PolyField:
    """(W + c)(W - c) phi with W = (L^L)/(8 ell) and c = m sqrt(s(s+1))."""
    _float_field(phi)
    c = params.m * math.sqrt(params.s * (params.s + 1))
    inner = wedge_op(phi).scale(1 / (8 * params.ell)) - phi.scale(c)
    return wedge_op(inner).scale(1 / (8 * params.ell)) + inner.scale(c)


def tangency_check(phi: PolyField) -> bool:
    """True when no blade of phi contains E^4."""
    bit = BULK.mask(4)
    return all(not m & bit for m in phi.comps)


def field_residual_norm(phi: PolyField, point=None) -> float:
    """Largest coefficient magnitude, or the coefficient norm at a point."""
    if point is None:
        return phi.max_abs()
    return phi.evaluate(point).norm()


__all__ = [name for name in dir() if not name.startswith("_")]
