"""Named verification checks grouped into suites.

Every check draws its random data from its own stream seeded by
``(seed, check name)``, so adding or removing checks never perturbs the
others and a fixed configuration always yields the same report.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from . import algebras as alg
from . import chart_ops, classical, dhess, geometry, operators, spinors
from .fields import PolyField
from .multivector import (Multivector, exp_bivector, grade, hodge_star, hodge_star_inv,
                          left_contraction, reversion, scalar_product)
from .poly import Poly
from .report import Check, build_report
from .sampling import derive, random_field, random_multivector, random_simple_bivector, rational
from .signature import BULK, MINKOWSKI
from .tolerance import ATOL, RTOL

SUITE_NAMES = ("ga", "algebras", "repr", "geometry", "operators", "limit")
MODES = ("exact", "float")
LIMIT_RADII = (10.0, 100.0, 1000.0, 10000.0)
LIMIT_SLOPE_MAX = -0.8


@dataclass(frozen=True)
class RunConfig:
    suite: str = "all"
    ell: float = 1.0
    m: float = 1.0
    seed: int = 0
    mode: str = "exact"
    rtol: float = RTOL
    atol: float = ATOL

    def __post_init__(self):
        if self.suite != "all" and self.suite not in SUITE_NAMES:
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if not (math.isfinite(self.ell) and self.ell > 0):
            raise ValueError("ell must be a positive number")
        if not (math.isfinite(self.m) and self.m >= 0):
            raise ValueError("m must be a non-negative number")
        if not (isinstance(self.seed, int) and self.seed >= 0):
            raise ValueError("seed must be a non-negative integer")
        if not (self.rtol > 0 and self.atol >= 0):
            raise ValueError("tolerances must be positive")


class Context:
    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.exact = cfg.mode == "exact"
        # exact rational image of the float radius, used where exact geometry is possible
        self.ell_q = Fraction(repr(cfg.ell))
        self.cache = {}

    def rng(self, name: str):
        return derive(self.cfg.seed, name)

    def close(self, residual: float, scale: float = 1.0) -> bool:
        return residual <= max(self.cfg.atol, self.cfg.rtol * abs(scale))

    def compare(self, a, b):
        """(residual, equal) for two multivectors or fields, honouring the mode."""
        diff = a - b
        res = diff.max_abs() if isinstance(diff, PolyField) else diff.norm()
        if a.exact:
            return float(res), a == b
        scale = max(_size(a), _size(b), 1.0)
        return float(res), self.close(res, scale)


def _size(x) -> float:
    return x.max_abs() if isinstance(x, PolyField) else x.norm()


_REGISTRY: dict[str, list] = {name: [] for name in SUITE_NAMES}


def check(suite: str, name: str, identity: str):
    def deco(fn):
        _REGISTRY[suite].append((name, identity, fn))
        return fn
    return deco


def _result(samples, residual, passed, mode, **detail):
    return {"samples": samples, "max_residual": float(residual), "passed": bool(passed),
            "mode": mode, "detail": detail}


def _sweep(ctx, pairs):
    """Fold an iterable of (a, b) comparisons into (count, worst residual, all equal, failures)."""
    n = worst = bad = 0
    for a, b in pairs:
        r, ok = ctx.compare(a, b)
        n += 1
        worst = max(worst, r)
        bad += not ok
    return n, worst, bad == 0, bad


def _mode(ctx) -> str:
    return "exact" if ctx.exact else "float"


def _mv(ctx, rng, sig, grades=None, density=1.0):
    return random_multivector(rng, sig, grades, density, exact=ctx.exact)


def _table_result(rows, mode="exact"):
    bad = [list(k) for k, ok in rows if not ok]
    return _result(len(rows), 0.0 if not bad else 1.0, not bad, mode, failing=bad[:10], failures=len(bad))


# -- ga --------------------------------------------------------------------

@check("ga", "ga.clifford_relations", "spacetime generators: g^mu g^nu + g^nu g^mu = 2 eta^{mu nu}")
def _ga_relations(ctx):
    return _table_result(alg.generator_relations()["spacetime"])


@check("ga", "ga.associativity", "(ab)c = a(bc) in the bulk algebra")
def _ga_assoc(ctx):
    rng = ctx.rng("ga.associativity")
    pairs = []
    for _ in range(100):
        a, b, c = (_mv(ctx, rng, BULK, density=0.3) for _ in range(3))
        pairs.append(((a * b) * c, a * (b * c)))
    n, worst, ok, bad = _sweep(ctx, pairs)
    return _result(n, worst, ok, _mode(ctx), failures=bad)


@check("ga", "ga.hodge_contraction_symmetry", "A_l contracted on *B_s equals B_s contracted on *A_l, l + s = 5")
def _ga_c13(ctx):
    rng = ctx.rng("ga.hodge_contraction_symmetry")
    pairs = []
    for _ in range(200):
        l = rng.randint(0, 5)
        A = _mv(ctx, rng, BULK, (l,))
        B = _mv(ctx, rng, BULK, (5 - l,))
        pairs.append((left_contraction(A, hodge_star(B)), left_contraction(B, hodge_star(A))))
    n, worst, ok, bad = _sweep(ctx, pairs)
    return _result(n, worst, ok, _mode(ctx), failures=bad)


@check("ga", "ga.hodge_inverse_on_vectors", "inverse Hodge star on vectors is minus the Hodge star")
def _ga_c14(ctx):
    rng = ctx.rng("ga.hodge_inverse_on_vectors")
    pairs = []
    for _ in range(200):
        v = _mv(ctx, rng, BULK, (1,))
        pairs.append((hodge_star_inv(v), -hodge_star(v)))
    n, worst, ok, bad = _sweep(ctx, pairs)
    return _result(n, worst, ok, _mode(ctx), failures=bad)


@check("ga", "ga.hodge_round_trip", "inverse Hodge star undoes the Hodge star")
def _ga_hodge_pair(ctx):
    rng = ctx.rng("ga.hodge_round_trip")
    pairs = []
    for _ in range(100):
        a = _mv(ctx, rng, BULK, density=0.4)
        pairs.append((hodge_star_inv(hodge_star(a)), a))
    n, worst, ok, bad = _sweep(ctx, pairs)
    return _result(n, worst, ok, _mode(ctx), failures=bad)


@check("ga", "ga.bivector_self_contraction", "scalar part of L contracted on L is -1/2 L_ab L^ab")
def _ga_c10(ctx):
    rng = ctx.rng("ga.bivector_self_contraction")
    pairs = []
    for _ in range(200):
        L = _mv(ctx, rng, BULK, (2,))
        total = 0
        for a, b in alg.GENERATOR_PAIRS:
            c = L.coeff(BULK.mask(a, b))
            # L_ab L^ab summed over both orders of every pair
            total += 2 * c * c * BULK.square(a) * BULK.square(b)
        lhs = Multivector.scalar(BULK, left_contraction(L, L).scalar_part(), exact=ctx.exact)
        rhs = Multivector.scalar(BULK, -total / 2, exact=ctx.exact)
        pairs.append((lhs, rhs))
    n, worst, ok, bad = _sweep(ctx, pairs)
    return _result(n, worst, ok, _mode(ctx), failures=bad)


@check("ga", "ga.rotor_normalisation", "exp(B) rev(exp(B)) = 1 for simple bivectors")
def _ga_exp(ctx):
    rng = ctx.rng("ga.rotor_normalisation")
    worst = 0.0
    for _ in range(200):
        B = random_simple_bivector(rng, BULK, exact=False, bound=3) / 9
        u = exp_bivector(B)
        worst = max(worst, (u * reversion(u) - 1).norm())
    return _result(200, worst, worst <= 1e-10, "float", tolerance=1e-10)


# -- algebras --------------------------------------------------------------

@check("algebras", "algebras.generator_relations", "anticommutators of every generator family")
def _alg_relations(ctx):
    fams = alg.generator_relations()
    rows = [((fam,) + tuple(pair), ok) for fam, table in sorted(fams.items()) for pair, ok in table]
    out = _table_result(rows)
    out["detail"]["families"] = {fam: len(t) for fam, t in sorted(fams.items())}
    return out


@check("algebras", "algebras.idempotents", "e e = e for the spacetime and bulk idempotents")
def _alg_idem(ctx):
    e, f = alg.spacetime_idempotent(), alg.bulk_idempotent()
    return _table_result([(("spacetime",), e * e == e), (("bulk",), f * f == f)])


def _table_diff(a, b):
    return [tuple(k[0]) + tuple(k[1]) for k in a if a[k] != b[k]]


@check("algebras", "algebras.structure_constants", "so(4,1) bracket from spin generators, matrices and Killing fields")
def _alg_triple(ctx):
    spin, mat = alg.spin_structure_table(), alg.so41_structure_table()
    kill, ref = geometry.killing_structure_table(), alg.formula_structure_table()
    diffs = {"spin_vs_matrix": _table_diff(spin, mat), "spin_vs_killing": _table_diff(spin, kill),
             "spin_vs_formula": _table_diff(spin, ref)}
    bad = sum(len(v) for v in diffs.values())
    return _result(len(spin), 0.0 if not bad else 1.0, bad == 0, "exact",
                   bracket_sign=alg.BRACKET_SIGN, **{k: len(v) for k, v in diffs.items()})


def _random_chi(rng, size=0.5):
    chi = np.zeros((5, 5))
    for i in range(5):
        for j in range(i + 1, 5):
            chi[i, j] = rng.uniform(-size, size)
            chi[j, i] = -chi[i, j]
    return chi


@check("algebras", "algebras.group_membership", "exp of so(4,1) parameters preserves diag(1,1,1,1,-1)")
def _alg_member(ctx):
    rng = ctx.rng("algebras.group_membership")
    worst = 0.0
    for _ in range(100):
        L = alg.exp_so41(_random_chi(rng))
        worst = max(worst, float(np.max(np.abs(L.T @ alg.BULK_GRAM @ L - alg.BULK_GRAM))))
    return _result(100, worst, worst < 1e-9, "float", tolerance=1e-9)


@check("algebras", "algebras.adjoint_isometry", "Ad_u preserves the metric on vectors")
def _alg_isometry(ctx):
    rng = ctx.rng("algebras.adjoint_isometry")
    worst = 0.0
    for _ in range(100):
        B = random_multivector(rng, BULK, (2,), exact=False, bound=3) / 9
        u = exp_bivector(B)
        a = random_multivector(rng, BULK, (1,), exact=False)
        b = alg.adjoint_action(u, a)
        q = float((a * a).scalar_part())
        worst = max(worst, abs(float((b * b).scalar_part()) - q) / max(1.0, abs(q)))
    return _result(100, worst, worst < 1e-10, "float", tolerance=1e-10)


@check("algebras", "algebras.rotor_matrix_agreement", "rotor action matches the so(4,1) matrix exponential")
def _alg_rotor(ctx):
    rng = ctx.rng("algebras.rotor_matrix_agreement")
    worst = 0.0
    for _ in range(50):
        chi = _random_chi(rng)
        worst = max(worst, float(np.max(np.abs(alg.versor_matrix(alg.rotor_from_parameters(chi))
                                                - alg.exp_so41(chi)))))
    return _result(50, worst, worst < 1e-10, "float", tolerance=1e-10)


# -- repr --------------------------------------------------------------------

def _random_spinor(rng, exact=True):
    return spinors.spinor_from_components([rational(rng) for _ in range(8)], exact=True) \
        if exact else spinors.spinor_from_components([float(rational(rng)) for _ in range(8)], exact=False)


@check("repr", "repr.homomorphism", "rho(ab) = rho(a) rho(b)")
def _repr_hom(ctx):
    rng = ctx.rng("repr.homomorphism")
    worst, bad = 0.0, 0
    for i in range(200):
        sig = BULK if i % 2 == 0 else MINKOWSKI
        a, b = _mv(ctx, rng, sig, density=0.3), _mv(ctx, rng, sig, density=0.3)
        lhs, rhs = spinors.rho(a * b), spinors.rho(a) @ spinors.rho(b)
        r = (lhs - rhs).norm()
        worst = max(worst, r)
        bad += not (lhs == rhs if ctx.exact else ctx.close(r, max(lhs.norm(), 1.0)))
    return _result(200, worst, bad == 0, _mode(ctx), failures=bad)


@check("repr", "repr.image_ranks", "the representation is faithful on the even bulk and on spacetime")
def _repr_rank(ctx):
    r41, r13 = spinors.rank_of_images(BULK), spinors.rank_of_images(MINKOWSKI)
    return _result(2, 0.0, (r41, r13) == (32, 16), "exact", bulk=r41, spacetime=r13)


@check("repr", "repr.column_round_trip", "column spinor to multivector and back")
def _repr_cols(ctx):
    rng = ctx.rng("repr.column_round_trip")
    bad = 0
    for _ in range(200):
        psi = _random_spinor(rng)
        bad += spinors.from_column(spinors.column(psi)) != psi
    return _result(200, 0.0 if not bad else 1.0, bad == 0, "exact", failures=bad)


DICTIONARY_LINES = {
    "gamma_mu": "gamma_mu Psi corresponds to gamma_mu psi gamma_0",
    "i": "i Psi corresponds to psi gamma_2 gamma_1",
    "i_gamma5": "i gamma_5 Psi corresponds to psi sigma_3",
    "bar": "Psi-bar corresponds to rev(psi)",
    "dagger": "Psi-dagger corresponds to gamma_0 rev(psi) gamma_0",
    "conj": "Psi* corresponds to -gamma_2 psi gamma_2",
}


def _dictionary(ctx, line):
    if "dictionary" not in ctx.cache:
        rng = ctx.rng("repr.dictionary")
        ctx.cache["dictionary"] = [spinors.dictionary_check(_random_spinor(rng)) for _ in range(200)]
    bad = sum(not row[line] for row in ctx.cache["dictionary"])
    return _result(200, 0.0 if not bad else 1.0, bad == 0, "exact", failures=bad)


for _line, _ident in DICTIONARY_LINES.items():
    check("repr", f"repr.dictionary_{_line}", _ident)(lambda ctx, _l=_line: _dictionary(ctx, _l))


@check("repr", "repr.dictionary_i_gamma5_corrected", "i gamma_5 Psi corresponds to -psi sigma_3")
def _repr_i5(ctx):
    rng = ctx.rng("repr.dictionary")
    chi = spinors.chirality_matrix()
    bad = 0
    for _ in range(200):
        psi = _random_spinor(rng)
        bad += (chi @ spinors.column(psi)).times_i() != spinors.column(-(psi * alg.sigma(3)))
    return _result(200, 0.0 if not bad else 1.0, bad == 0, "exact", failures=bad)


@check("repr", "repr.takabayasi_round_trip", "psi = rho^(1/2) exp(tau beta/2) R")
def _repr_taka(ctx):
    rng = ctx.rng("repr.takabayasi_round_trip")
    worst, n = 0.0, 0
    while n < 200:
        psi = _random_spinor(rng, exact=False)
        try:
            dens, beta, R = spinors.takabayasi(psi)
        except ValueError:
            continue
        n += 1
        unit = (R * reversion(R) - 1).norm()
        worst = max(worst, (spinors.takabayasi_rebuild(dens, beta, R) - psi).norm() / psi.norm(), unit)
    singular = alg.gamma(0, 1) + 1
    try:
        spinors.takabayasi(singular)
        raised = False
    except ValueError:
        raised = True
    return _result(n, worst, worst < 1e-10 and raised, "float", tolerance=1e-10, singular_rejected=raised)


@check("repr", "repr.generalized_spinors", "bulk ideal spinors and the Gamma-odd part Z0 Gamma^0")
def _repr_general(ctx):
    rng = ctx.rng("repr.generalized_spinors")
    bit4 = BULK.mask(4)
    bad = 0
    for _ in range(100):
        psi = random_multivector(rng, BULK, (0, 2, 4), 0.5)
        psi = Multivector(BULK, {m: c for m, c in psi.items() if not m & bit4})
        z = random_multivector(rng, BULK, (0, 2, 4), 0.5)
        bad += not all(spinors.generalized_spinor_checks(psi, z).values())
    return _result(100, 0.0 if not bad else 1.0, bad == 0, "exact", failures=bad)


# -- geometry ----------------------------------------------------------------

def _chart_point(rng, ell, exact):
    if exact:
        return [Fraction(rng.randint(-18, 18), 12) * ell for _ in range(4)]
    return [rng.uniform(-0.9, 0.9) * ell for _ in range(4)]


@check("geometry", "geometry.chart_round_trip", "unembed(embed(x)) = x")
def _geo_round(ctx):
    rng = ctx.rng("geometry.chart_round_trip")
    ell = ctx.ell_q if ctx.exact else ctx.cfg.ell
    worst = 0.0
    for _ in range(1000):
        x = _chart_point(rng, ell, ctx.exact)
        back = geometry.unembed(geometry.embed(x, ell).X, ell)
        worst = max(worst, max(abs(float(a - b)) for a, b in zip(x, back)) / max(1.0, float(ell)))
    ok = worst == 0 if ctx.exact else worst < 1e-12
    return _result(1000, worst, ok, _mode(ctx), tolerance=0 if ctx.exact else 1e-12)


@check("geometry", "geometry.pseudo_sphere", "embedded points satisfy X.X = ell^2")
def _geo_sphere(ctx):
    rng = ctx.rng("geometry.pseudo_sphere")
    ell = ctx.ell_q if ctx.exact else ctx.cfg.ell
    worst = 0.0
    for _ in range(1000):
        X = geometry.embed(_chart_point(rng, ell, ctx.exact), ell).X
        worst = max(worst, abs(float(geometry.sphere_residual(X, ell))) / float(ell) ** 2)
    ok = worst == 0 if ctx.exact else worst < 1e-12
    return _result(1000, worst, ok, _mode(ctx))


@check("geometry", "geometry.conformal_metric", "pullback metric equals Omega^2 eta")
def _geo_metric(ctx):
    rng = ctx.rng("geometry.conformal_metric")
    ell = ctx.ell_q if ctx.exact else ctx.cfg.ell
    worst = 0.0
    for _ in range(300):
        x = _chart_point(rng, ell, ctx.exact)
        g, h = geometry.induced_metric(x, ell), geometry.conformal_metric(x, ell)
        om2 = float(geometry.embed(x, ell).omega) ** 2
        worst = max(worst, max(abs(float(g[i][j] - h[i][j])) for i in range(4) for j in range(4)) / om2)
    ok = worst == 0 if ctx.exact else worst < 1e-10
    return _result(300, worst, ok, _mode(ctx))


@check("geometry", "geometry.killing_equation", "symmetrized lowered derivative of every Killing field vanishes")
def _geo_killing(ctx):
    rows = [(ab, not any(geometry.killing_equation(geometry.killing_field(*ab)))) for ab in alg.GENERATOR_PAIRS]
    return _table_result(rows)


@check("geometry", "geometry.killing_tangency", "Killing fields annihilate the defining quadric")
def _geo_tangent(ctx):
    rows = [(ab, not geometry.tangency(geometry.killing_field(*ab), ctx.ell_q))
            for ab in alg.GENERATOR_PAIRS]
    return _table_result(rows)


@check("geometry", "geometry.chart_regions", "grid flags against t^2 - x^2 = 4 ell^2")
def _geo_regions(ctx):
    ell = ctx.ell_q
    rows = geometry.chart_rows(ell, 3 * ell, 3)
    bad = 0
    for t, x1, flag in rows:
        s2 = t * t - x1 * x1
        want = "absolute" if s2 == 4 * ell * ell else ("inside" if s2 < 4 * ell * ell else "outside")
        bad += flag != want
    named = geometry.region(0, 0, ell) == "inside" and geometry.region(2 * ell, 0, ell) == "absolute"
    return _result(len(rows), 0.0, bad == 0 and named and len(rows) == 9, "exact", failures=bad)


# -- operators -----------------------------------------------------------------

def _bulk_fields(ctx, name, n, even=False):
    rng = ctx.rng(name)
    return [random_field(rng, BULK, "bulk", grades=(0, 2, 4) if even else None, exact=ctx.exact)
            for _ in range(n)]


@check("operators", "operators.momentum_commute", "P_a P_b phi = P_b P_a phi")
def _op_momentum(ctx):
    pairs = []
    for phi in _bulk_fields(ctx, "operators.momentum_commute", 10):
        for a, b in product(BULK.labels, repeat=2):
            pairs.append((operators.momentum(a, operators.momentum(b, phi)),
                          operators.momentum(b, operators.momentum(a, phi))))
    n, worst, ok, bad = _sweep(ctx, pairs)
    return _result(n, worst, ok, _mode(ctx), failures=bad)


def _realization(ctx, name, right):
    pairs = []
    for phi in _bulk_fields(ctx, name, 10):
        inner = {p: operators.angular(*p, phi) for p in alg.GENERATOR_PAIRS}
        for ab, cd in product(alg.GENERATOR_PAIRS, repeat=2):
            lhs, rhs = operators.commutator_identity_sides(ab, cd, phi, inner)
            pairs.append((lhs, rhs * right(phi)))
    n, worst, ok, bad = _sweep(ctx, pairs)
    return _result(n, worst, ok, _mode(ctx), failures=bad)


def _conv(mv, ctx):
    return mv if ctx.exact else mv.to_float()


@check("operators", "operators.so41_realization", "[L_ab, L_cd] = h_ac L_bd + h_bd L_ac - h_bc L_ad - h_ad L_bc")
def _op_real(ctx):
    return _realization(ctx, "operators.so41_realization", lambda phi: _conv(Multivector.scalar(BULK, 1), ctx))


@check("operators", "operators.so41_realization_unit",
       "[L_ab, L_cd] = (h_ac L_bd + h_bd L_ac - h_bc L_ad - h_ad L_bc) E^1 E^2")
def _op_real_unit(ctx):
    return _realization(ctx, "operators.so41_realization", lambda phi: _conv(alg.E(1, 2), ctx))


def _parts_sweep(ctx, name, build, n=10):
    pairs = []
    for phi in _bulk_fields(ctx, name, n):
        parts = operators.L_squared_parts(phi)
        pairs.append(build(phi, parts))
    count, worst, ok, bad = _sweep(ctx, pairs)
    return _result(count, worst, ok, _mode(ctx), failures=bad)


@check("operators", "operators.square_split", "L(L phi) = (L contracted on L) phi + (L wedge L) phi")
def _op_split(ctx):
    return _parts_sweep(ctx, "operators.square_split",
                        lambda phi, p: (p[0] + p[4], operators.L_squared(phi)))


@check("operators", "operators.square_commutator_term", "grade-2 part of L(L phi) is 3 (L phi) E^2 E^1")
def _op_grade2(ctx):
    return _parts_sweep(ctx, "operators.square_split",
                        lambda phi, p: (p[2], (operators.total_L(phi) * _conv(alg.E(2, 1), ctx)).scale(3)))


@check("operators", "operators.contraction_components", "(L contracted on L) phi = -1/2 L_ab L^ab phi")
def _op_contraction(ctx):
    return _parts_sweep(ctx, "operators.square_split",
                        lambda phi, p: (p[0], operators.contraction_from_components(phi)))


@check("operators", "operators.wedge_part_vanishes", "(L wedge L) phi = 0 for orbital operators")
def _op_wedge_zero(ctx):
    return _parts_sweep(ctx, "operators.square_split",
                        lambda phi, p: (p[4], PolyField.zero(BULK, "bulk", ctx.exact)))


@check("operators", "operators.casimir2", "F F = F contracted on F = -64 ell^2 W.W with W = *F/(8 ell)")
def _op_casimir2(ctx):
    rng = ctx.rng("operators.casimir2")
    bad = 0
    for i in range(200):
        F = random_multivector(rng, BULK, (4,))
        bad += not operators.casimir2_check(F, (1, 3)[i % 2])["holds"]
    return _result(200, 0.0 if not bad else 1.0, bad == 0, "exact", failures=bad)


def _params(ctx, m=None):
    return operators.OperatorParams(ctx.cfg.ell, ctx.cfg.m if m is None else m)


@check("operators", "operators.telescoping", "((1/ell)L + lam)((1/ell)L - lam) = (1/ell^2)L^2 - lam^2")
def _op_tele(ctx):
    rng = ctx.rng("operators.telescoping")
    params = _params(ctx)
    worst, ok = 0.0, True
    for _ in range(20):
        phi = random_field(rng, BULK, "bulk", exact=False)
        lhs, rhs = operators.telescoping_sides(phi, params)
        r = (lhs - rhs).max_abs()
        worst = max(worst, r)
        ok &= r <= 1e-9 * max(1.0, rhs.max_abs())
    return _result(20, worst, ok, "float", tolerance=1e-9)


@check("operators", "operators.fourth_order_factorization", "(W + c)(W - c) phi = (W^2 - c^2) phi")
def _op_fourth(ctx):
    rng = ctx.rng("operators.fourth_order_factorization")
    params = _params(ctx)
    worst, ok = 0.0, True
    for _ in range(10):
        phi = random_field(rng, BULK, "bulk", exact=False)
        a, b = operators.fourth_order_factored(phi, params), operators.fourth_order_residual(phi, params)
        r = (a - b).max_abs()
        worst = max(worst, r)
        ok &= r <= 1e-9 * max(1.0, b.max_abs())
    return _result(10, worst, ok, "float", tolerance=1e-9)


def invariant_field(rng, power: int) -> PolyField:
    """(X.X)^power times a constant even multivector: annihilated by every L_ab."""
    q = geometry.quadric(0)
    qk = Poly.const(5, Fraction(1))
    for _ in range(power):
        qk = qk * q
    M = random_multivector(rng, BULK, (0, 2, 4), 0.5)
    return PolyField(BULK, "bulk", {m: qk * c for m, c in M.items()})


@check("operators", "operators.casimir_chain",
       "on the wedge-constraint surface ((1/ell^2)L^2 - m^2) phi = (4 sqrt3 m / ell) phi")
def _op_chain(ctx):
    # with the wedge part identically zero the constraint forces m = 0 for non-zero phi
    rng = ctx.rng("operators.casimir_chain")
    params = _params(ctx, m=0.0)
    worst, ok = 0.0, True
    for k in range(6):
        phi = invariant_field(rng, k % 3).to_float()
        constraint = operators.wedge_constraint_residual(phi, params).max_abs()
        chain = (operators.L_squared(phi).scale(1 / params.ell ** 2) - phi.scale(params.m ** 2)
                 - phi.scale(4 * math.sqrt(3) * params.m / params.ell)).max_abs()
        worst = max(worst, constraint, chain)
        ok &= constraint <= 1e-12 and chain <= 1e-9 * max(1.0, phi.max_abs())
    return _result(6, worst, ok, "float", constraint_mass=0.0,
                   note="constraint holds for non-zero fields only when m = 0")


@check("operators", "operators.spin_constant_fold", "4 sqrt3 m ell = 8 ell m sqrt(s(s+1)) at s = 1/2")
def _op_fold(ctx):
    p = _params(ctx)
    folded = 4 * math.sqrt(3) * p.m * p.ell
    r = abs(folded - p.wedge_eigenvalue)
    return _result(1, r, r <= 1e-15 * max(1.0, folded), "float")


@check("operators", "operators.tangency_examples", "no blade of a tangent field contains E^4")
def _op_tangency(ctx):
    one = Poly.const(5, Fraction(1))
    tangent = PolyField(BULK, "bulk", {0: one, BULK.mask(1, 2): Poly.var(5, 4)})
    normal = PolyField(BULK, "bulk", {BULK.mask(1, 4): one})
    ok = operators.tangency_check(tangent) and not operators.tangency_check(normal)
    return _result(2, 0.0, ok, "exact")


@check("operators", "operators.dhess_equivalence", "frame-conjugated second form equals the first form")
def _op_dhess(ctx):
    rng = ctx.rng("operators.dhess_equivalence")
    params = _params(ctx)
    worst = {"cx": 0.0, "transport": 0.0, "agreement": 0.0}
    for _ in range(5):
        cfg = dhess.random_frame_config(rng, params.ell)
        pts = dhess.sample_sphere_points(rng, params.ell, 10)
        res = dhess.dhess2_equivalence_check(cfg, params, pts)
        for k in worst:
            worst[k] = max(worst[k], res[k])
    ok = worst["cx"] < 1e-11 and worst["agreement"] < 1e-9 and worst["transport"] < 1e-11
    return _result(50, max(worst.values()), ok, "float", **worst)


@check("operators", "operators.chart_pullback", "bulk L_ab agrees with its chart form through the embedding")
def _op_pullback(ctx):
    rng = ctx.rng("operators.chart_pullback")
    ell = ctx.ell_q
    worst = 0.0
    for _ in range(5):
        F = random_field(rng, BULK, "bulk", degree=2)
        for _ in range(4):
            worst = max(worst, geometry_safe_pullback(F, rng, ell))
    return _result(20, worst, worst == 0, "exact")


def geometry_safe_pullback(F, rng, ell):
    while True:
        x = [Fraction(rng.randint(-6, 6), 12) * ell for _ in range(4)]
        try:
            return chart_ops.pullback_check(F, x, ell)
        except ValueError:
            continue


@check("operators", "operators.classical_identities", "x p = x wedge p, l l = -ell^2 p p, l wedge l = 0")
def _op_classical(ctx):
    rng = ctx.rng("operators.classical_identities")
    bad = 0
    for _ in range(100):
        bad += not all(classical.classical_identities(classical.random_state(rng)).values())
    return _result(100, 0.0 if not bad else 1.0, bad == 0, "exact", failures=bad)


# -- limit ---------------------------------------------------------------------

def limit_inputs(seed: int):
    """Field, constant factor and chart sample points shared by the limit checks."""
    rng = derive(seed, "limit.sweep")
    phi = random_field(rng, BULK, "chart", grades=(0, 2, 4), degree=2, exact=False)
    factor = random_multivector(rng, BULK, (0, 2), 0.5, exact=False)
    points = [[rng.uniform(-1, 1) for _ in range(4)] for _ in range(8)]
    return phi, factor, points


@check("limit", "limit.sweep", "deviation between the chart de Sitter residual and the flat residual")
def _limit_sweep(ctx):
    phi, factor, points = limit_inputs(ctx.cfg.seed)
    out = chart_ops.limit_sweep(phi, factor, ctx.cfg.m, LIMIT_RADII, points)
    slope = out["slope"]
    ok = out["strictly_decreasing"] and slope is not None and slope <= LIMIT_SLOPE_MAX
    return _result(len(points) * len(LIMIT_RADII), out["rows"][-1][1], ok, "float",
                   table={"columns": ["ell", "D(ell)"], "rows": [list(r) for r in out["rows"]]},
                   slope=slope, strictly_decreasing=out["strictly_decreasing"], slope_bound=LIMIT_SLOPE_MAX)


def _spacetime_fields(ctx, name, n, exact=True):
    rng = ctx.rng(name)
    return [random_field(rng, MINKOWSKI, "spacetime", grades=(0, 2, 4), exact=exact) for _ in range(n)]


@check("limit", "limit.idempotent_projection", "(flat residual of psi) e = reduced residual of psi e")
def _limit_idem(ctx):
    m = Fraction(repr(ctx.cfg.m)) if ctx.exact else ctx.cfg.m
    pairs = [chart_ops.idempotent_projection_sides(psi, m)
             for psi in _spacetime_fields(ctx, "limit.idempotent_projection", 10, exact=ctx.exact)]
    n, worst, ok, bad = _sweep(ctx, pairs)
    return _result(n, worst, ok, _mode(ctx), failures=bad)


@check("limit", "limit.dirac_agreement", "flat multivector residual matches the matrix Dirac residual")
def _limit_dirac(ctx):
    rng = ctx.rng("limit.dirac_points")
    worst, ok = 0.0, True
    for psi in _spacetime_fields(ctx, "limit.dirac_agreement", 10, exact=False):
        x = [rng.uniform(-1, 1) for _ in range(4)]
        lhs, rhs = chart_ops.dirac_agreement(psi, ctx.cfg.m, x)
        r = (lhs - rhs).norm()
        worst = max(worst, r)
        ok &= r <= 1e-10 * max(1.0, rhs.norm())
    return _result(10, worst, ok, "float", tolerance=1e-10)


@check("limit", "limit.current_vector", "psi gamma^0 rev(psi) is a vector whose square is rho^2")
def _limit_current(ctx):
    rng = ctx.rng("limit.current_vector")
    bad = 0
    for _ in range(100):
        psi = _random_spinor(rng)
        c = chart_ops.current_checks(psi)
        q = psi * reversion(psi)
        s, p = q.scalar_part(), q.coeff(MINKOWSKI.top)
        bad += not (set(c["grades"]) <= {1} and c["V2"] == s * s + p * p)
    ex = chart_ops.chiral_counterexample()
    phase_has_3 = bool(grade(ex["phase_form"], 3))
    current_is_vector = set(ex["current"].grades()) <= {1}
    return _result(101, 0.0 if not bad else 1.0, bad == 0 and current_is_vector and phase_has_3, "exact",
                   failures=bad, phase_form_has_grade3=phase_has_3)


# -- running -------------------------------------------------------------------

def manifest(suite: str = "all") -> list[str]:
    names = SUITE_NAMES if suite == "all" else (suite,)
    return sorted(name for s in names for name, _, _ in _REGISTRY[s])


def run_checks(cfg: RunConfig) -> list[Check]:
    ctx = Context(cfg)
    names = SUITE_NAMES if cfg.suite == "all" else (cfg.suite,)
    out = []
    for suite in names:
        for name, identity, fn in _REGISTRY[suite]:
            try:
                res = fn(ctx)
            except Exception as exc:  # a crashing check is reported, not hidden
                res = _result(0, float("inf"), False, _mode(ctx), error=f"{type(exc).__name__}: {exc}")
            out.append(Check(name, suite, identity, res["mode"], res["samples"], res["max_residual"],
                             res["passed"], res["detail"]))
    return out


def run(cfg: RunConfig) -> dict:
    return build_report(asdict(cfg), run_checks(cfg))
