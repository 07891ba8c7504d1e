"""Pointwise comparison of the two forms of the de Sitter Hestenes equation.

The second form uses the moving frame theta^a theta^b = phi' E^a E^b phi'^-1
built from phi' = rho^(1/2) (cosh z + F sinh z), F a constant bivector with
F^2 = 1 and z a scalar polynomial.  Conjugating that form by phi' must give
the first form applied to phi'^-1.  Everything here is float-valued and
evaluated on jets (value plus first derivatives) at sample points.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .algebras import BULK_ORDER, GENERATOR_PAIRS, E, adjoint_action
from .fields import Jet
from .geometry import embed
from .multivector import Multivector, exp_bivector
from .operators import OperatorParams, unit_bivector
from .poly import Poly
from .sampling import rational
from .signature import BULK


def _pos(label):
    return BULK_ORDER.index(label)


def rotation_at(a: int, b: int, X, jet: Jet) -> Multivector:
    """(X_a d_b - X_b d_a) applied to a jet at the ambient point X."""
    ia, ib = _pos(a), _pos(b)
    xa, xb = BULK.squares[ia] * float(X[ia]), BULK.squares[ib] * float(X[ib])
    return jet.grad[ib] * xa - jet.grad[ia] * xb


def dhess1_at(jet: Jet, X, params: OperatorParams) -> Multivector:
    """(1/ell) L psi - lambda psi at one point."""
    e21 = unit_bivector().to_float()
    acc = Multivector.zero(BULK, exact=False)
    for a, b in GENERATOR_PAIRS:
        acc = acc + E(a, b).to_float() * rotation_at(a, b, X, jet) * e21
    return acc / params.ell - jet.value * params.lam


def dhess2_at(jet: Jet, X, params: OperatorParams, frame) -> Multivector:
    """Same operator with every E^a E^b (and E^2 E^1) replaced by ``frame`` of it.

    The constant term carries the sign under which conjugation by phi' maps
    this form onto :func:`dhess1_at` with kappa = lambda.
    """
    right = frame(unit_bivector().to_float())
    acc = Multivector.zero(BULK, exact=False)
    for a, b in GENERATOR_PAIRS:
        acc = acc + frame(E(a, b).to_float()) * rotation_at(a, b, X, jet) * right
    return acc / params.ell - jet.value * params.lam


@dataclass(frozen=True)
class FrameConfig:
    """phi' = sqrt(rho) (cosh z + F sinh z)."""

    F: Multivector
    z: Poly
    rho: float

    def __post_init__(self):
        if self.F.exact or not self.F.is_homogeneous(2):
            raise ValueError("F must be a float bivector")
        sq = self.F * self.F
        if (sq - 1).norm() > 1e-12:
            raise ValueError("F must square to 1")
        if not self.rho > 0:
            raise ValueError("rho must be positive")

    def jets(self, X) -> tuple[Jet, Jet]:
        """Jets of phi' and of its inverse at X."""
        zv = float(self.z(X))
        dz = [float(self.z.diff(i)(X)) for i in range(5)]
        ch, sh = math.cosh(zv), math.sinh(zv)
        r = math.sqrt(self.rho)
        F = self.F
        val = (F * sh + ch) * r
        inv = (F * (-sh) + ch) / r
        dval = (F * ch + sh) * r
        dinv = (F * (-ch) + sh) / r
        return (Jet(val, tuple(dval * d for d in dz)), Jet(inv, tuple(dinv * d for d in dz)))


def dhess2_equivalence_check(cfg: FrameConfig, params: OperatorParams, points) -> dict:
    """Largest residuals of the derivative identity, frame transport and form agreement."""
    cx = transport = agreement = scale = 0.0
    pairs = [E(a, b).to_float() for a, b in GENERATOR_PAIRS]
    for X in points:
        phi, inv = cfg.jets(X)
        p, q = phi.value, inv.value
        for dp, dq in zip(phi.grad, inv.grad):
            product_rule = -(q * dp * q)
            cx = max(cx, (dq * p + q * dp).norm(), (dq * p - p * dq).norm(), (dq - product_rule).norm())
        for B in pairs:
            transport = max(transport, (q * (p * B * q) * p - B).norm())
        r1 = dhess1_at(inv, X, params)
        r2 = dhess2_at(inv, X, params, lambda m: p * m * q)
        agreement = max(agreement, (q * r2 * p - r1).norm())
        scale = max(scale, r1.norm())
    return {"cx": cx, "transport": transport, "agreement": agreement, "scale": scale}


def random_frame_config(rng: random.Random, ell: float) -> FrameConfig:
    """Random F = u E^1 E^0 rev(u) and a small quadratic z."""
    B = Multivector.zero(BULK, exact=False)
    for a, b in GENERATOR_PAIRS:
        B = B + E(a, b).to_float() * (rng.uniform(-1, 1) * 0.4)
    u = exp_bivector(B)
    F = adjoint_action(u, E(1, 0).to_float()).grade(2)
    z = Poly(5)
    for i in range(5):
        z = z + Poly.var(5, i, float(rational(rng, 5)) / (4 * ell))
        for j in range(i, 5):
            if rng.random() < 0.3:
                z = z + Poly.var(5, i) * Poly.var(5, j) * (float(rational(rng, 5)) / (8 * ell * ell))
    return FrameConfig(F, z, rng.uniform(0.5, 2.0))


def sample_sphere_points(rng: random.Random, ell, n: int):
    """Ambient points on the pseudo-sphere from chart points with |x^mu| <= ell/2."""
    out = []
    while len(out) < n:
        x = [rng.randint(-9, 9) * ell / 18 for _ in range(4)]
        try:
            out.append(embed(x, ell).X)
        except ValueError:
            continue
    return out
