"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line (also collected into the pytest
terminal summary) and then asserts the criterion at its stated tolerance
and time budget.
"""
import math
import random
import time
from fractions import Fraction
from itertools import product

import pytest

from dsclifford import algebras as alg
from dsclifford import chart_ops, classical, dhess, geometry, operators, spinors
from dsclifford.multivector import Multivector, hodge_star, hodge_star_inv, left_contraction
from dsclifford.report import dumps
from dsclifford.sampling import random_field, random_multivector, rational
from dsclifford.signature import BULK, MINKOWSKI
from dsclifford.suites import LIMIT_RADII, RunConfig, limit_inputs, run
from oracles import oracle_product


class Criterion:
    def __init__(self, number, title, log, budget=None):
        self.number, self.title, self.log, self.budget = number, title, log, budget

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        return False

    def verdict(self, ok, detail=""):
        in_time = self.budget is None or self.elapsed < self.budget
        passed = bool(ok) and in_time
        budget = f" (budget {self.budget:g}s)" if self.budget else ""
        line = (f"[{'PASS' if passed else 'FAIL'}] {self.number:>2}. {self.title}: {detail}; "
                f"{self.elapsed:.2f}s{budget}")
        print(line)
        self.log.append(line)
        assert ok, line
        assert in_time, line


def test_01_generator_relations(acceptance_log):
    with Criterion(1, "generator relations", acceptance_log, 1.0) as c:
        fams = alg.generator_relations()
    total = sum(len(t) for t in fams.values())
    bad = [(name, pair) for name, t in fams.items() for pair, ok in t if not ok]
    c.verdict(not bad, f"{total} index pairs in {len(fams)} families, {len(bad)} failures")


def test_02_oracle_equivalence(acceptance_log):
    with Criterion(2, "kernel product vs transposition oracle", acceptance_log, 5.0) as c:
        bad = 0
        for a, b in product(BULK.masks(), repeat=2):
            got = (Multivector(BULK, {a: 1}) * Multivector(BULK, {b: 1}))._terms
            bad += got != oracle_product({a: 1}, {b: 1}, BULK.squares)
    c.verdict(bad == 0, f"1024 blade pairs, {bad} mismatches")


def test_03_duality_identities(acceptance_log):
    rng = random.Random(3)
    with Criterion(3, "Hodge duality identities", acceptance_log, 10.0) as c:
        bad_sym = bad_inv = 0
        for _ in range(1000):
            l = rng.randint(0, 5)
            A = random_multivector(rng, BULK, (l,))
            B = random_multivector(rng, BULK, (5 - l,))
            bad_sym += left_contraction(A, hodge_star(B)) != left_contraction(B, hodge_star(A))
            v = random_multivector(rng, BULK, (1,))
            bad_inv += hodge_star_inv(v) != -hodge_star(v)
    c.verdict(bad_sym == bad_inv == 0, f"1000+1000 exact instances, failures {bad_sym}/{bad_inv}")


def test_04_casimir2(acceptance_log):
    rng = random.Random(4)
    with Criterion(4, "grade-4 three-way equality", acceptance_log, 10.0) as c:
        bad = 0
        for i in range(500):
            F = random_multivector(rng, BULK, (4,))
            bad += not operators.casimir2_check(F, (1, 3)[i % 2])["holds"]
    c.verdict(bad == 0, f"500 rational elements, {bad} failures")


def test_05_structure_constants(acceptance_log):
    with Criterion(5, "so(4,1) triple agreement", acceptance_log, 30.0) as c:
        spin = alg.spin_structure_table()
        mat = alg.so41_structure_table()
        kill = geometry.killing_structure_table()
    bad = sum(not (spin[k] == mat[k] == kill[k]) for k in spin)
    c.verdict(len(spin) == 100 and bad == 0, f"{len(spin)} ordered pairs, {bad} disagreements")


def test_06_killing_property(acceptance_log):
    with Criterion(6, "Killing equation", acceptance_log) as c:
        bad = [ab for ab in alg.GENERATOR_PAIRS
               if any(geometry.killing_equation(geometry.killing_field(*ab)))]
    c.verdict(not bad, f"10 fields, non-zero symmetrized derivative for {bad}")


def test_07_chart_suite(acceptance_log):
    rng = random.Random(7)
    with Criterion(7, "chart round trip, pseudo-sphere and metric", acceptance_log, 30.0) as c:
        rt = sph = met = 0.0
        for i in range(10_000):
            ell = (1.0, 10.0)[i % 2]
            x = [rng.uniform(-1.5, 1.5) * ell for _ in range(4)]
            p = geometry.embed(x, ell)
            rt = max(rt, max(abs(a - b) for a, b in zip(geometry.unembed(p.X, ell), x)))
            sph = max(sph, abs(geometry.sphere_residual(p.X, ell)) / ell ** 2)
            g = geometry.induced_metric(x, ell)
            om2 = p.omega ** 2
            met = max(met, max(abs(g[m][n] - (om2 * (1, -1, -1, -1)[m] if m == n else 0))
                               for m in range(4) for n in range(4)) / om2)
    c.verdict(rt < 1e-12 and sph < 1e-12 and met < 1e-10,
              f"10^4 points, round trip {rt:.1e}, sphere {sph:.1e} ell^2, metric {met:.1e}")


def test_08_operator_realization(acceptance_log):
    rng = random.Random(8)
    with Criterion(8, "[L_ab, L_cd] phi bracket identity", acceptance_log, 60.0) as c:
        bad = unit_bad = 0
        for _ in range(50):
            phi = random_field(rng, BULK, "bulk")
            inner = {p: operators.angular(*p, phi) for p in alg.GENERATOR_PAIRS}
            for ab, cd in product(alg.GENERATOR_PAIRS, repeat=2):
                lhs, rhs = operators.commutator_identity_sides(ab, cd, phi, inner)
                bad += lhs != rhs
                unit_bad += lhs != rhs * alg.E(1, 2)
    c.verdict(bad == 0, f"50 fields x 100 pairs, {bad} literal failures "
                        f"({unit_bad} failures once the right side carries E^1 E^2)")


def test_09_split_and_telescoping(acceptance_log):
    rng = random.Random(9)
    params = operators.OperatorParams(1.0, 1.0)
    with Criterion(9, "square split and factorization telescoping", acceptance_log) as c:
        split_bad = 0
        for _ in range(20):
            phi = random_field(rng, BULK, "bulk")
            contraction, wedge_part = operators.L_squared_split(phi)
            split_bad += contraction + wedge_part != operators.L_squared(phi)
        tele = 0.0
        for _ in range(50):
            phi = random_field(rng, BULK, "bulk", exact=False)
            lhs, rhs = operators.telescoping_sides(phi, params)
            tele = max(tele, (lhs - rhs).max_abs() / max(1.0, rhs.max_abs()))
    c.verdict(split_bad == 0 and tele < 1e-9,
              f"split fails on {split_bad}/20 exact fields (missing grade-2 term 3 (L phi) E^2 E^1); "
              f"telescoping {tele:.1e} on 50 float fields")


def test_10_dhess_equivalence(acceptance_log):
    rng = random.Random(10)
    params = operators.OperatorParams(1.0, 1.0)
    with Criterion(10, "frame-conjugated forms coincide", acceptance_log) as c:
        cx = agree = 0.0
        for _ in range(20):
            cfg = dhess.random_frame_config(rng, params.ell)
            res = dhess.dhess2_equivalence_check(cfg, params, dhess.sample_sphere_points(rng, params.ell, 20))
            cx, agree = max(cx, res["cx"]), max(agree, res["agreement"])
    c.verdict(cx < 1e-11 and agree < 1e-9, f"20 configs x 20 points, derivative {cx:.1e}, agreement {agree:.1e}")


def test_11_flat_limit(acceptance_log):
    phi, factor, points = limit_inputs(0)
    with Criterion(11, "large-radius limit", acceptance_log, 60.0) as c:
        out = chart_ops.limit_sweep(phi, factor, 1.0, LIMIT_RADII, points)
    table = ", ".join(f"D({e:g})={d:.2e}" for e, d in out["rows"])
    c.verdict(out["strictly_decreasing"] and out["slope"] is not None and out["slope"] <= -0.8,
              f"{table}; slope {out['slope']:.3f}")


def test_12_dictionary_and_homomorphism(acceptance_log):
    rng = random.Random(12)
    with Criterion(12, "column dictionary and rho homomorphism", acceptance_log) as c:
        failures = {}
        for _ in range(1000):
            psi = spinors.spinor_from_components([rational(rng) for _ in range(8)])
            for line, ok in spinors.dictionary_check(psi).items():
                failures[line] = failures.get(line, 0) + (not ok)
        hom_bad = 0
        for i in range(500):
            sig = (BULK, MINKOWSKI)[i % 2]
            a, b = random_multivector(rng, sig, density=0.3), random_multivector(rng, sig, density=0.3)
            hom_bad += not spinors.homomorphism_holds(a, b)
    bad_lines = {k: v for k, v in failures.items() if v}
    c.verdict(not bad_lines and hom_bad == 0,
              f"1000 spinors, failing lines {bad_lines or 'none'}; homomorphism failures {hom_bad}/500")


def test_13_takabayasi(acceptance_log):
    rng = random.Random(13)
    with Criterion(13, "polar decomposition round trip", acceptance_log) as c:
        worst, n = 0.0, 0
        while n < 500:
            psi = spinors.spinor_from_components([float(rational(rng)) for _ in range(8)])
            try:
                dens, beta, R = spinors.takabayasi(psi)
            except ValueError:
                continue
            n += 1
            worst = max(worst, (spinors.takabayasi_rebuild(dens, beta, R) - psi).norm() / psi.norm())
        with pytest.raises(ValueError):
            spinors.takabayasi(alg.gamma(0, 1) + 1)
    c.verdict(worst < 1e-10, f"500 invertible spinors, relative error {worst:.1e}; singular input rejected")


def test_14_classical_identities(acceptance_log):
    rng = random.Random(14)
    with Criterion(14, "classical angular momentum identities", acceptance_log) as c:
        bad = 0
        for _ in range(500):
            bad += not all(classical.classical_identities(classical.random_state(rng, Fraction(3, 2))).values())
    c.verdict(bad == 0, f"500 exact states, {bad} failures")


def test_15_determinism(acceptance_log):
    cfg = RunConfig(suite="all", seed=2024)
    with Criterion(15, "bit-identical reports", acceptance_log) as c:
        first, second = dumps(run(cfg)), dumps(run(cfg))
    c.verdict(first == second, f"two full runs, {len(first)} bytes each")
