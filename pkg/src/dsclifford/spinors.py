"""Matrix representation, the column/multivector spinor dictionary and
related decompositions.

The Dirac matrices are the standard ones, gamma^0 = diag(1, 1, -1, -1) and
gamma^k = [[0, s_k], [-s_k, 0]] with Pauli blocks s_k.  A column spinor is
identified with the first column of the representing matrix of an even
spacetime element.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .algebras import (E, big_gamma, bulk_idempotent, gamma, gamma_lower, sigma,
                       spacetime_pseudoscalar)
from .matrices import ComplexMatrix
from .multivector import Multivector, exp_bivector, reversion
from .signature import BULK, MINKOWSKI, Signature

_PAULI = {
    1: ([[0, 1], [1, 0]], [[0, 0], [0, 0]]),
    2: ([[0, 0], [0, 0]], [[0, -1], [1, 0]]),
    3: ([[1, 0], [0, -1]], [[0, 0], [0, 0]]),
}


def _block(re2, im2, sign_lower):
    z = [[0, 0], [0, 0]]
    re = [z[0] + re2[0], z[1] + re2[1], [sign_lower * v for v in re2[0]] + z[0], [sign_lower * v for v in re2[1]] + z[1]]
    im = [z[0] + im2[0], z[1] + im2[1], [sign_lower * v for v in im2[0]] + z[0], [sign_lower * v for v in im2[1]] + z[1]]
    return re, im


@lru_cache(maxsize=None)
def gamma_matrix(mu: int) -> ComplexMatrix:
    """Upper-index Dirac matrix."""
    if mu == 0:
        return ComplexMatrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
    re, im = _block(*_PAULI[mu], -1)
    return ComplexMatrix(re, im)


def gamma_matrix_lower(mu: int) -> ComplexMatrix:
    return gamma_matrix(mu) if mu == 0 else -gamma_matrix(mu)


@lru_cache(maxsize=None)
def chirality_matrix() -> ComplexMatrix:
    """Product of the four lower-index Dirac matrices; it squares to -1."""
    out = ComplexMatrix.identity()
    for mu in range(4):
        out = out @ gamma_matrix_lower(mu)
    return out


@lru_cache(maxsize=None)
def _generator_images(sig: Signature):
    if sig == MINKOWSKI:
        return {mu: gamma_matrix(mu) for mu in range(4)}
    if sig == BULK:
        g5i = chirality_matrix().times_i()
        out = {mu: (gamma_matrix(mu) @ chirality_matrix()).times_i() for mu in range(4)}
        out[4] = g5i
        return out
    raise ValueError(f"no matrix representation registered for {sig.name}")


@lru_cache(maxsize=None)
def _blade_image(sig: Signature, mask: int) -> ComplexMatrix:
    imgs = _generator_images(sig)
    out = ComplexMatrix.identity()
    for lab in sig.blade_labels(mask):
        out = out @ imgs[lab]
    return out


def rho(a: Multivector) -> ComplexMatrix:
    """Complex 4x4 matrix representing a bulk or spacetime multivector.

    Bulk generators map to i gamma^mu gamma_5 and i gamma_5, where gamma_5 is
    :func:`chirality_matrix`; spacetime generators map to gamma^mu.
    """
    out = ComplexMatrix.zeros((4, 4), exact=a.exact)
    for m, c in a.items():
        img = _blade_image(a.sig, m)
        out = out + (img if a.exact else img.to_float()).scale(c)
    return out


def rank_of_images(sig: Signature) -> int:
    """Real rank of the images of all basis blades."""
    rows = []
    for m in sig.masks():
        M = _blade_image(sig, m)
        rows.append([Fraction(v) for v in list(M.re.ravel()) + list(M.im.ravel())])
    return _rank(rows)


def _rank(rows) -> int:
    rows = [list(r) for r in rows]
    rank, ncol = 0, len(rows[0])
    for col in range(ncol):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


# -- column <-> multivector spinors ------------------------------------------

def _ispace(k):
    return spacetime_pseudoscalar() * sigma(k)


def spinor_basis():
    """Even elements multiplying m0, m1, m2, m3, n0, n1, n2, n3."""
    s3 = sigma(3)
    one = Multivector.scalar(MINKOWSKI, 1)
    m = [one] + [_ispace(k) for k in (1, 2, 3)]
    return m + [b * s3 for b in m]


def spinor_from_components(comps, exact=None) -> Multivector:
    comps = list(comps)
    if len(comps) != 8:
        raise ValueError("eight real components expected")
    out = Multivector.zero(MINKOWSKI)
    if exact is False or any(isinstance(c, float) for c in comps):
        out = out.to_float()
    for c, b in zip(comps, spinor_basis()):
        out = out + (b if out.exact else b.to_float()) * c
    return out


def spinor_components(psi: Multivector) -> list:
    """Inverse of :func:`spinor_from_components`; every basis element is a signed blade."""
    if psi.sig != MINKOWSKI:
        raise ValueError("spinors live in the spacetime algebra")
    if psi.odd():
        raise ValueError("spinor must be even")
    out = []
    for b in spinor_basis():
        (m, s), = b.items()
        out.append(psi.coeff(m) * s)
    return out


def column(psi: Multivector) -> ComplexMatrix:
    m0, m1, m2, m3, n0, n1, n2, n3 = spinor_components(psi)
    return ComplexMatrix([[m0], [-m2], [n0], [-n2]], [[m3], [m1], [n3], [n1]], exact=psi.exact)


def from_column(col: ComplexMatrix) -> Multivector:
    if col.shape != (4, 1):
        raise ValueError("column spinors have shape (4, 1)")
    re, im = [col.re[i, 0] for i in range(4)], [col.im[i, 0] for i in range(4)]
    comps = [re[0], im[1], -re[1], im[0], re[2], im[3], -re[3], im[2]]
    return spinor_from_components(comps, exact=col.exact)


def dictionary_check(psi: Multivector) -> dict[str, bool]:
    """Each line of the column/multivector dictionary, evaluated exactly.

    Row spinors are compared with the first row of the representing matrix,
    the counterpart of reading columns off the first column.
    """
    col = column(psi)
    g0 = gamma_lower(0)
    out = {}
    out["gamma_mu"] = all(gamma_matrix_lower(mu) @ col == column(gamma_lower(mu) * psi * g0) for mu in range(4))
    out["i"] = col.times_i() == column(psi * gamma(2, 1)) and gamma(2, 1) == _ispace(3)
    out["i_gamma5"] = (chirality_matrix() @ col).times_i() == column(psi * sigma(3))
    out["bar"] = col.dagger() @ gamma_matrix(0) == rho(reversion(psi)).row(0)
    out["dagger"] = col.dagger() == rho(g0 * reversion(psi) * g0).row(0)
    out["conj"] = col.conj() == column(-(gamma_lower(2) * psi * gamma_lower(2)))
    return out


def homomorphism_holds(a: Multivector, b: Multivector) -> bool:
    return rho(a * b) == rho(a) @ rho(b)


# -- Takabayasi decomposition ------------------------------------------------

def takabayasi(psi: Multivector, tol: float = 1e-14):
    """Split a spinor as rho^(1/2) exp(tau beta / 2) R with R rev(R) = 1.

    tau is the spacetime pseudoscalar gamma^0 gamma^1 gamma^2 gamma^3; beta is
    returned in (-pi, pi].
    """
    if psi.sig != MINKOWSKI or psi.odd():
        raise ValueError("takabayasi needs an even spacetime element")
    tau = gamma(0, 1, 2, 3)
    q = psi * reversion(psi)
    s, p = float(q.scalar_part()), float(q.coeff(MINKOWSKI.top))
    dens = math.hypot(s, p)
    if dens <= tol * max(1.0, psi.norm() ** 2):
        raise ValueError("psi rev(psi) vanishes; no polar decomposition")
    beta = math.atan2(p, s)
    if beta == -math.pi:
        beta = math.pi
    tf = tau.to_float()
    phase_inv = tf * (-math.sin(beta / 2)) + math.cos(beta / 2)
    R = phase_inv * (psi if not psi.exact else psi.to_float()) / math.sqrt(dens)
    return dens, beta, R


def takabayasi_rebuild(dens, beta, R):
    tau = gamma(0, 1, 2, 3).to_float()
    return (tau * math.sin(beta / 2) + math.cos(beta / 2)) * R * math.sqrt(dens)


# -- generalized spinors in the bulk --------------------------------------------

def is_gamma_even(a: Multivector) -> bool:
    """Even bulk element built from even products of Gamma^mu (no E^4 factor)."""
    bit4 = BULK.mask(4)
    return not a.odd() and all(not m & bit4 for m, _ in a.items())


def gamma_parts(a: Multivector):
    """Split an even bulk element into Gamma-even and Gamma-odd parts."""
    if a.odd():
        raise ValueError("element is not even")
    bit4 = BULK.mask(4)
    ev = Multivector._raw(BULK, {m: c for m, c in a.items() if not m & bit4}, a.exact)
    return ev, a - ev


def generalized_spinor_checks(psi: Multivector, z_seed: Multivector) -> dict[str, bool]:
    """Ideal membership and the Gamma-even/odd relation in the bulk.

    ``psi`` must be Gamma-even; ``z_seed`` any even bulk element.
    """
    if not is_gamma_even(psi):
        raise ValueError("psi must be an even combination of Gamma products")
    f = bulk_idempotent()
    Psi = psi * f
    half = (big_gamma(0) + 1) * Fraction(1, 2)
    Z = z_seed * half
    z0, z1 = gamma_parts(Z)
    return {
        "ideal": Psi * f == Psi and f * f == f,
        "odd_from_even": z1 == z0 * big_gamma(0),
        "even_generates": (z0 * 2) * half == Z,
    }


def change_frame(psi: Multivector, u: Multivector):
    """Representative and frame vectors after the spin frame is rotated by ``u``.

    psi becomes psi u and gamma_mu becomes rev(u) gamma_mu u, so every
    bilinear psi gamma_mu rev(psi) is unchanged.
    """
    if psi.sig != MINKOWSKI or u.sig != MINKOWSKI:
        raise ValueError("spacetime elements expected")
    ru = reversion(u)
    return psi * u, [ru * (gamma_lower(mu) if u.exact else gamma_lower(mu).to_float()) * u for mu in range(4)]


def rotor_spinor(B: Multivector, density: float) -> Multivector:
    """sqrt(density) exp(B) for a bivector B; a spinor with psi rev(psi) = density."""
    return exp_bivector(B) * math.sqrt(density)


__all__ = [
    "gamma_matrix", "gamma_matrix_lower", "chirality_matrix", "rho", "rank_of_images", "spinor_basis",
    "spinor_from_components", "spinor_components", "column", "from_column", "dictionary_check",
    "homomorphism_holds", "takabayasi", "takabayasi_rebuild", "generalized_spinor_checks", "gamma_parts",
    "is_gamma_even", "change_frame", "rotor_spinor", "E",
]
