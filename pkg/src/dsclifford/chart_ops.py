"""Angular-momentum operators written in projective chart coordinates, the
large-radius limit, and the spacetime (flat) Hestenes residuals.

In the chart each bulk rotation X_a d_b - X_b d_a becomes a first-order
operator c^nu(x) d/dx^nu with polynomial coefficients; see
:func:`chart_killing`.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .algebras import GENERATOR_PAIRS, E, big_gamma, gamma, gamma_lower, lower
from .fields import Jet, PolyField
from .geometry import CHART_TO_BULK, ETA, embed, jacobian
from .matrices import ComplexMatrix
from .multivector import Multivector, reversion
from .operators import OperatorParams, rotation, unit_bivector
from .poly import Poly
from .signature import BULK, MINKOWSKI
from .spinors import column, gamma_matrix

SPACETIME = (0, 1, 2, 3)


def _num(ell):
    return Fraction(ell) if isinstance(ell, (int, Fraction)) else float(ell)


@lru_cache(maxsize=None)
def chart_killing(pair: tuple[int, int], ell) -> tuple[Poly, ...]:
    """Coefficients c^nu with (X_a d_b - X_b d_a) f = c^nu d_nu f in the chart.

    For a spacetime label alpha:
      (alpha, 4): ell d_alpha - (1/(4 ell)) (2 eta_{alpha l} x^l x^nu - s2 delta^nu_alpha) d_nu
      (mu, nu):   -eta_{mu l} x^l d_nu + eta_{nu l} x^l d_mu
    """
    a, b = pair
    ell = _num(ell)
    x = [Poly.var(4, i) for i in range(4)]
    s2 = sum((x[i] * x[i] * ETA[i] for i in range(4)), Poly(4))
    if b == 4 or a == 4:
        sign = 1 if b == 4 else -1
        al = a if b == 4 else b
        out = []
        for nu in range(4):
            c = x[al] * x[nu] * (-2 * ETA[al] / (4 * ell))
            if nu == al:
                c = c + s2 * (1 / (4 * ell)) + ell
            out.append(c * sign)
        return tuple(out)
    out = [Poly(4) for _ in range(4)]
    out[b] = out[b] - x[a] * ETA[a]
    out[a] = out[a] + x[b] * ETA[b]
    return tuple(out)


def _chart(phi: PolyField):
    if phi.space != "chart" or phi.sig != BULK:
        raise ValueError("chart operator applied to a non-chart field")


def _coeffs_for(pair, ell, exact):
    cs = chart_killing(pair, ell)
    return cs if exact else tuple(c.to_float() for c in cs)


def projective_L(pair: tuple[int, int], phi: PolyField, ell) -> PolyField:
    """Chart form of L_ab acting on a bulk-algebra valued chart field."""
    _chart(phi)
    if phi.exact and isinstance(_num(ell), float):
        raise ValueError("exact chart field needs a rational ell")
    out = PolyField.zero(BULK, "chart", phi.exact)
    for nu, c in enumerate(_coeffs_for(pair, ell, phi.exact)):
        if c:
            out = out + phi.diff(nu).scale(c)
    e21 = unit_bivector() if phi.exact else unit_bivector().to_float()
    return out * e21


def projective_L_at(pair, jet: Jet, x, ell) -> Multivector:
    cs = chart_killing(pair, ell)
    out = Multivector.zero(BULK, exact=jet.value.exact)
    for nu, c in enumerate(cs):
        if c:
            v = c(x)
            out = out + jet.grad[nu] * (v if jet.value.exact else float(v))
    e21 = unit_bivector() if jet.value.exact else unit_bivector().to_float()
    return out * e21


def pullback_check(F: PolyField, x, ell) -> float:
    """Largest difference between bulk L_ab F at embed(x) and the chart operator on F o embed."""
    p = embed(x, ell)
    J = jacobian(x, ell)
    val = F.evaluate(p.X)
    dF = [F.diff(i).evaluate(p.X) for i in range(5)]
    grad = tuple(sum((dF[a] * J[a][nu] for a in range(5)), Multivector.zero(BULK, exact=val.exact))
                 for nu in range(4))
    jet = Jet(val, grad)
    e21 = unit_bivector() if val.exact else unit_bivector().to_float()
    worst = 0.0
    for pair in GENERATOR_PAIRS:
        bulk = rotation(*pair, F).evaluate(p.X) * e21
        chart = projective_L_at(pair, jet, p.x, p.ell)
        worst = max(worst, (bulk - chart).norm())
    return worst


def dhess_chart_at(jet: Jet, x, params: OperatorParams) -> Multivector:
    """(1/ell) L phi - lambda phi with L in chart form, at one chart point."""
    acc = Multivector.zero(BULK, exact=False)
    for a, b in GENERATOR_PAIRS:
        acc = acc + E(a, b).to_float() * projective_L_at((a, b), jet, x, params.ell)
    return acc / params.ell - jet.value * params.lam


def dhe_chart_at(jet: Jet, m: float) -> Multivector:
    """Flat limit Gamma^alpha d_alpha phi E^2 E^1 - m phi.

    The right factor is the same E^2 E^1 that the bulk operators carry.
    """
    e21 = unit_bivector().to_float()
    acc = Multivector.zero(BULK, exact=False)
    for al in SPACETIME:
        acc = acc + big_gamma(al).to_float() * jet.grad[al] * e21
    return acc - jet.value * m


def constrained_ansatz(phi: PolyField, lam_factor: Multivector, ell):
    """Return x -> Jet of phi + (1/ell) Omega^2 E_4 E_alpha x^alpha lam_factor."""
    _chart(phi)
    ell = float(ell)
    lf = lam_factor if not lam_factor.exact else lam_factor.to_float()
    e4 = lower(BULK, 4).to_float()
    frames = [e4 * lower(BULK, al).to_float() * lf for al in SPACETIME]
    phif = phi if not phi.exact else phi.to_float()

    def at(x):
        x = [float(v) for v in x]
        base = phif.jet(x)
        s2 = sum(ETA[i] * x[i] ** 2 for i in range(4))
        om = 1 / (1 - s2 / (4 * ell * ell))
        d_om = [om * om * ETA[nu] * x[nu] / (2 * ell * ell) for nu in range(4)]
        core = sum((frames[al] * x[al] for al in SPACETIME), Multivector.zero(BULK, exact=False))
        val = core * (om * om / ell)
        grad = tuple(core * (2 * om * d_om[nu] / ell) + frames[nu] * (om * om / ell) for nu in range(4))
        return base + Jet(val, grad)

    return at


def limit_sweep(phi: PolyField, lam_factor: Multivector, m: float, ells, points) -> dict:
    """Largest gap between the chart de Sitter residual and the flat one, per radius."""
    rows = []
    for ell in ells:
        params = OperatorParams(float(ell), m)
        at = constrained_ansatz(phi, lam_factor, ell)
        base = phi if not phi.exact else phi.to_float()
        worst = 0.0
        for x in points:
            s2 = sum(ETA[i] * float(x[i]) ** 2 for i in range(4))
            if s2 > float(ell) ** 2 / 4:
                raise ValueError("sample point outside s2 <= ell^2/4")
            d = dhess_chart_at(at(x), x, params) - dhe_chart_at(base.jet([float(v) for v in x]), m)
            worst = max(worst, d.norm())
        rows.append((float(ell), worst))
    D = [d for _, d in rows]
    decreasing = all(b < a for a, b in zip(D, D[1:]))
    slope = None
    if all(d > 0 for d in D) and len(D) > 1:
        slope = float(np.polyfit(np.log([e for e, _ in rows]), np.log(D), 1)[0])
    return {"rows": rows, "strictly_decreasing": decreasing, "slope": slope}


# -- spacetime (flat) Hestenes residuals ----------------------------------------

def _spacetime(psi: PolyField):
    if psi.space != "spacetime" or psi.sig != MINKOWSKI:
        raise ValueError("spacetime field expected")


def dhe_residual(psi: PolyField, m, right=None) -> PolyField:
    """gamma^mu d_mu psi gamma^2 gamma^1 - m psi gamma^0 (or psi ``right`` if given)."""
    _spacetime(psi)
    conv = (lambda a: a) if psi.exact else (lambda a: a.to_float())
    g21 = conv(gamma(2, 1))
    out = PolyField.zero(MINKOWSKI, "spacetime", psi.exact)
    for mu in SPACETIME:
        out = out + conv(gamma(mu)) * psi.diff(mu) * g21
    tail = psi * conv(gamma(0) if right is None else right)
    return out - tail.scale(m)


def idempotent_projection_sides(psi: PolyField, m):
    """(residual of psi) e and the reduced residual of zeta = psi e, e = (1 + gamma^0)/2."""
    _spacetime(psi)
    e = (gamma(0) + 1) * Fraction(1, 2)
    if not psi.exact:
        e = e.to_float()
    lhs = dhe_residual(psi, m) * e
    zeta = psi * e
    rhs = dhe_residual(zeta, m, right=Multivector.scalar(MINKOWSKI, 1, exact=psi.exact))
    return lhs, rhs


def dirac_agreement(psi: PolyField, m, x) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Column of (DHE residual) gamma_0 and i gamma^mu d_mu Psi - m Psi at x."""
    _spacetime(psi)
    res = dhe_residual(psi, m).evaluate(x)
    g0 = gamma_lower(0) if res.exact else gamma_lower(0).to_float()
    lhs = column(res * g0)
    cols = [column(psi.diff(mu).evaluate(x)) for mu in SPACETIME]
    psi_col = column(psi.evaluate(x))
    rhs = psi_col.scale(-m)
    for mu in SPACETIME:
        g = gamma_matrix(mu) if psi_col.exact else gamma_matrix(mu).to_float()
        rhs = rhs + (g @ cols[mu]).times_i()
    return lhs, rhs


def current_checks(psi_value: Multivector) -> dict:
    """V = psi gamma^0 rev(psi): grade content and V^2 against (psi rev(psi))^2."""
    g0 = gamma(0) if psi_value.exact else gamma(0).to_float()
    V = psi_value * g0 * reversion(psi_value)
    q = psi_value * reversion(psi_value)
    return {"V": V, "grades": V.grades(), "V2": V * V, "density2": q * q}


def chiral_counterexample() -> dict:
    """psi = exp(tau pi/8) with tau the spacetime pseudoscalar (so beta = pi/4, R = 1).

    ``current`` is psi gamma^0 rev(psi), which stays a vector because the two
    half-phases cancel.  ``phase_form`` is exp(beta tau) gamma^0, the expression
    that keeps the full phase; it carries a grade-3 part.
    """
    from .algebras import spacetime_pseudoscalar
    tau = spacetime_pseudoscalar().to_float()
    u = tau * math.sin(math.pi / 8) + math.cos(math.pi / 8)
    phase = tau * math.sin(math.pi / 4) + math.cos(math.pi / 4)
    return {"current": current_checks(u)["V"], "phase_form": phase * gamma(0).to_float()}
