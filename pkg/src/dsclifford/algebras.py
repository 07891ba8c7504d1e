"""Named elements of the three algebras and the so(4,1) structures.

Bulk labels run 1, 2, 3, 4, 0 with E^0 the timelike generator.  Upper-index
generators are the basis vectors themselves; lower indices are obtained with
the diagonal metric, so E_0 = -E^0 and E_A = E^A otherwise.
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

import numpy as np

from .multivector import Multivector, commutator, exp_bivector, reversion
from .signature import BULK, MINKOWSKI, PAULI, Signature

HALF = Fraction(1, 2)
BULK_ORDER = BULK.labels
SPACETIME = (0, 1, 2, 3)


def eta(sig: Signature, label: int) -> int:
    return sig.square(label)


def upper(sig: Signature, label: int, exact: bool = True) -> Multivector:
    return Multivector.vector(sig, label, 1, exact)


def lower(sig: Signature, label: int, exact: bool = True) -> Multivector:
    return Multivector.vector(sig, label, sig.square(label), exact)


def E(*labels: int) -> Multivector:
    """Product E^a E^b ... of bulk generators, in the order given."""
    return Multivector.blade(BULK, *labels)


def gamma(*labels: int) -> Multivector:
    """Product of spacetime generators gamma^mu, in the order given."""
    return Multivector.blade(MINKOWSKI, *labels)


def gamma_lower(mu: int) -> Multivector:
    return lower(MINKOWSKI, mu)


def sigma(k: int) -> Multivector:
    """Relative vector gamma_k gamma_0."""
    return gamma_lower(k) * gamma_lower(0)


def spacetime_pseudoscalar() -> Multivector:
    """gamma_0 gamma_1 gamma_2 gamma_3 (lower indices)."""
    out = Multivector.scalar(MINKOWSKI, 1)
    for mu in SPACETIME:
        out = out * gamma_lower(mu)
    return out


def bulk_unit() -> Multivector:
    """E^0 E^1 E^2 E^3 E^4, central and squaring to -1."""
    return E(0, 1, 2, 3, 4)


def big_gamma(mu: int) -> Multivector:
    """Gamma^mu = E^mu E^4, generators of the even bulk subalgebra."""
    return E(mu, 4)


def big_gamma_lower(mu: int) -> Multivector:
    return big_gamma(mu) * MINKOWSKI.square(mu)


def spacetime_idempotent() -> Multivector:
    return (gamma(0) + 1) * HALF


def bulk_idempotent() -> Multivector:
    """Primitive idempotent (1 + Gamma^0)/2 * (1 + i Gamma^2 Gamma^1)/2 of the bulk algebra."""
    a = (big_gamma(0) + 1) * HALF
    b = (bulk_unit() * big_gamma(2) * big_gamma(1) + 1) * HALF
    return a * b


# -- generator relations ---------------------------------------------------

def _anticommutator_table(gens: dict, metric) -> list[tuple[tuple, bool]]:
    out = []
    for (a, ga), (b, gb) in product(gens.items(), repeat=2):
        lhs = ga * gb + gb * ga
        out.append(((a, b), lhs == 2 * metric(a, b)))
    return out


def generator_relations() -> dict[str, list[tuple[tuple, bool]]]:
    """Anticommutator tables for every generator family.

    Each entry maps a family name to ``[((a, b), holds), ...]`` over all ordered
    index pairs.
    """
    diag = lambda sig: (lambda a, b: sig.square(a) if a == b else 0)  # noqa: E731
    mink = diag(MINKOWSKI)
    fams = {
        "spacetime": _anticommutator_table({m: gamma(m) for m in SPACETIME}, mink),
        "bulk": _anticommutator_table({a: E(a) for a in BULK_ORDER}, diag(BULK)),
        "even-bulk": _anticommutator_table({m: big_gamma(m) for m in SPACETIME}, mink),
        "pauli": _anticommutator_table({k: Multivector.blade(PAULI, k) for k in PAULI.labels}, diag(PAULI)),
    }
    recip = []
    for mu, nu in product(SPACETIME, repeat=2):
        lhs = gamma(mu) * gamma_lower(nu) + gamma_lower(nu) * gamma(mu)
        recip.append(((mu, nu), lhs == (2 if mu == nu else 0)))
    fams["spacetime-reciprocal"] = recip
    return fams


# -- so(4,1) ------------------------------------------------------------------

# [X_ab, X_cd] = BRACKET_SIGN * bracket_formula(ab, cd) for all three realizations
BRACKET_SIGN = -1

GENERATOR_PAIRS = [(BULK_ORDER[i], BULK_ORDER[j]) for i in range(5) for j in range(i + 1, 5)]
_POS = {lab: k for k, lab in enumerate(BULK_ORDER)}


def _canon(a: int, b: int) -> tuple[int, tuple[int, int] | None]:
    """Sign and ordered pair with X_ab = sign * X_pair."""
    if a == b:
        return 0, None
    return (1, (a, b)) if _POS[a] < _POS[b] else (-1, (b, a))


def bracket_formula(ab, cd) -> dict[tuple[int, int], int]:
    """Coefficients of h_ac X_bd + h_bd X_ac - h_bc X_ad - h_ad X_bc.

    With S_ab = E_a E_b / 2 and the Killing fields X_a d/dX^b - X_b d/dX^a
    the commutator [X_ab, X_cd] equals minus this combination; see
    :data:`BRACKET_SIGN`.
    """
    (a, b), (c, d) = ab, cd
    h = lambda x, y: BULK.square(x) if x == y else 0  # noqa: E731
    out: dict[tuple[int, int], int] = {}
    for coef, (p, q) in ((h(a, c), (b, d)), (h(b, d), (a, c)), (-h(b, c), (a, d)), (-h(a, d), (b, c))):
        if not coef:
            continue
        s, pair = _canon(p, q)
        if pair is None:
            continue
        out[pair] = out.get(pair, 0) + coef * s
    return {k: v for k, v in out.items() if v}


def spin_generator(a: int, b: int) -> Multivector:
    """S_ab = E_a E_b / 2 for a != b, zero on the diagonal."""
    if a == b:
        return Multivector.zero(BULK)
    return lower(BULK, a) * lower(BULK, b) * HALF


def spin_coordinates(X: Multivector) -> dict[tuple[int, int], Fraction]:
    """Coefficients of a bivector on the S_ab basis (a before b)."""
    if not X.is_homogeneous(2):
        raise ValueError("not a bivector")
    out = {}
    for a, b in GENERATOR_PAIRS:
        c = X.coeff(BULK.mask(a, b))
        if c:
            out[(a, b)] = c * 2 * BULK.square(a) * BULK.square(b)
    return out


def so41_generator(a: int, b: int, exact: bool = True):
    """5x5 matrix M_ab with (M_ab)^c_d = h_bd delta^c_a - h_ad delta^c_b.

    Rows and columns follow the bulk label order 1, 2, 3, 4, 0.  This sign is
    the one for which the matrix commutators reproduce the so(4,1) bracket
    with the same constants as the spin generators.
    """
    zero = Fraction(0) if exact else 0.0
    M = [[zero] * 5 for _ in range(5)]
    if a != b:
        ia, ib = _POS[a], _POS[b]
        M[ia][ib] += BULK.square(b)
        M[ib][ia] -= BULK.square(a)
    return M


def _matmul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def matrix_commutator(A, B):
    P, Q = _matmul(A, B), _matmul(B, A)
    return [[P[i][j] - Q[i][j] for j in range(5)] for i in range(5)]


def so41_coordinates(M) -> dict[tuple[int, int], Fraction]:
    out = {}
    for a, b in GENERATOR_PAIRS:
        c = M[_POS[a]][_POS[b]] * BULK.square(b)
        if c:
            out[(a, b)] = c
    recon = [[Fraction(0)] * 5 for _ in range(5)]
    for (a, b), c in out.items():
        G = so41_generator(a, b)
        recon = [[recon[i][j] + c * G[i][j] for j in range(5)] for i in range(5)]
    if recon != [[Fraction(x) for x in row] for row in M]:
        raise ValueError("matrix is not in so(4,1)")
    return out


def spin_structure_table():
    table = {}
    for ab, cd in product(GENERATOR_PAIRS, repeat=2):
        table[(ab, cd)] = spin_coordinates(commutator(spin_generator(*ab), spin_generator(*cd)))
    return table


def so41_structure_table():
    table = {}
    for ab, cd in product(GENERATOR_PAIRS, repeat=2):
        table[(ab, cd)] = so41_coordinates(matrix_commutator(so41_generator(*ab), so41_generator(*cd)))
    return table


def formula_structure_table():
    return {(ab, cd): {k: Fraction(BRACKET_SIGN * v) for k, v in bracket_formula(ab, cd).items()}
            for ab, cd in product(GENERATOR_PAIRS, repeat=2)}


def spin_commutator_check() -> list[tuple[tuple, bool]]:
    spin, ref = spin_structure_table(), formula_structure_table()
    return [(key, spin[key] == ref[key]) for key in ref]


def _generator_matrix(chi) -> np.ndarray:
    chi = np.asarray(chi, dtype=float)
    if chi.shape != (5, 5) or not np.allclose(chi, -chi.T, atol=0):
        raise ValueError("chi must be an antisymmetric 5x5 array")
    G = np.zeros((5, 5))
    for a, b in GENERATOR_PAIRS:
        G += chi[_POS[a], _POS[b]] * np.array(so41_generator(a, b, exact=False))
    return G


def exp_so41(chi, terms: int = 20) -> np.ndarray:
    """exp(chi^{ab} M_ab / 2) for an antisymmetric array of upper-index parameters.

    Scaling and squaring around a truncated Taylor series.
    """
    G = _generator_matrix(chi)
    n = np.linalg.norm(G, 1)
    k = max(0, math.ceil(math.log2(n / 0.25))) if n > 0.25 else 0
    Gs = G / 2.0 ** k
    out = np.eye(5)
    term = np.eye(5)
    for j in range(1, terms):
        term = term @ Gs / j
        out = out + term
    for _ in range(k):
        out = out @ out
    return out


BULK_GRAM = np.diag([float(s) for s in BULK.squares])


def in_so41(L, tol: float = 1e-10) -> bool:
    L = np.asarray(L, dtype=float)
    return bool(np.max(np.abs(L.T @ BULK_GRAM @ L - BULK_GRAM)) <= tol * max(1.0, np.max(np.abs(L)) ** 2))


def rotor_from_parameters(chi, terms: int = 30) -> Multivector:
    """Spin element exp(chi_ab E^a E^b / 4) for the same upper-index parameters as :func:`exp_so41`."""
    chi = np.asarray(chi, dtype=float)
    B = Multivector.zero(BULK, exact=False)
    for a, b in GENERATOR_PAIRS:
        low = chi[_POS[a], _POS[b]] * BULK.square(a) * BULK.square(b)
        B = B + E(a, b).to_float() * (0.5 * low)
    return exp_bivector(B, terms=terms)


def adjoint_action(u: Multivector, a: Multivector, tol: float = 1e-9) -> Multivector:
    """u a rev(u) for a unit element u."""
    uu = u * reversion(u)
    if u.exact:
        ok = uu == 1
    else:
        ok = (uu - 1).norm() <= tol
    if not ok:
        raise ValueError("u rev(u) != 1")
    return u * a * reversion(u)


def contravariant_components(v: Multivector) -> list:
    """Components X^a with v = X^a E_a, in bulk label order."""
    return [c * BULK.square(lab) for c, lab in zip(v.vector_coeffs(), BULK_ORDER)]


def versor_matrix(u: Multivector) -> np.ndarray:
    """Matrix of the adjoint action on contravariant vector components."""
    cols = []
    for lab in BULK_ORDER:
        img = adjoint_action(u, lower(BULK, lab, u.exact))
        cols.append([float(x) for x in contravariant_components(img)])
    return np.array(cols).T
