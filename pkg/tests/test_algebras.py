import math
import random
from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import multivectors
from dsclifford import algebras as alg
from dsclifford.algebras import E, big_gamma, commutator, gamma
from dsclifford.multivector import Multivector, exp_bivector, reversion
from dsclifford.signature import BULK, MINKOWSKI


def test_every_generator_family_anticommutes_to_the_metric():
    fams = alg.generator_relations()
    assert set(fams) == {"spacetime", "bulk", "even-bulk", "pauli", "spacetime-reciprocal"}
    for name, table in fams.items():
        assert len(table) in (9, 16, 25)
        assert all(ok for _, ok in table), name


def test_even_generators_square_to_the_spacetime_metric():
    # frozen: Gamma^0 = E^0 E^4 squares to +1, Gamma^1 to -1
    assert big_gamma(0) * big_gamma(0) == 1
    assert big_gamma(1) * big_gamma(1) == -1
    assert big_gamma(0) * big_gamma(1) + big_gamma(1) * big_gamma(0) == 0


def test_idempotents_and_bulk_unit():
    e, f = alg.spacetime_idempotent(), alg.bulk_idempotent()
    assert e * e == e and f * f == f
    i = alg.bulk_unit()
    assert i * i == -1
    for a in BULK.labels:
        assert i * E(a) == E(a) * i


def test_spin_commutator_examples():
    s12, s23, s13 = (alg.spin_generator(*p) for p in ((1, 2), (2, 3), (1, 3)))
    assert commutator(s12, s12) == 0
    # single surviving term eta_22 S_13
    assert commutator(s12, s23) == BULK.square(2) * s13
    assert alg.spin_generator(3, 3) == 0


def test_three_realizations_share_structure_constants():
    spin = alg.spin_structure_table()
    assert len(spin) == 100
    assert spin == alg.so41_structure_table()
    assert spin == alg.formula_structure_table()
    assert all(ok for _, ok in alg.spin_commutator_check())


def test_printed_bracket_has_the_opposite_overall_sign():
    # the combination h_ac X_bd + ... equals minus the commutator
    assert alg.BRACKET_SIGN == -1
    nonzero = [k for k, v in alg.spin_structure_table().items() if v]
    assert nonzero
    for ab, cd in nonzero:
        formula = alg.bracket_formula(ab, cd)
        assert {k: -v for k, v in formula.items()} == alg.spin_structure_table()[(ab, cd)]


def test_generator_matrix_layout():
    M = alg.so41_generator(1, 2)
    assert M[0][1] == 1 and M[1][0] == -1
    assert sum(abs(x) for row in M for x in row) == 2
    B = alg.so41_generator(1, 0)
    # boost generator is symmetric in the mixed-index form
    assert B[0][4] == -1 and B[4][0] == -1
    with pytest.raises(ValueError):
        alg.so41_coordinates([[1 if i == j else 0 for j in range(5)] for i in range(5)])


def _chi(**entries):
    chi = np.zeros((5, 5))
    pos = {lab: k for k, lab in enumerate(BULK.labels)}
    for key, v in entries.items():
        a, b = int(key[1]), int(key[2])
        chi[pos[a], pos[b]] = v
        chi[pos[b], pos[a]] = -v
    return chi


def test_exp_so41_closed_forms():
    assert np.array_equal(alg.exp_so41(np.zeros((5, 5))), np.eye(5))
    th = 0.7
    L = alg.exp_so41(_chi(c12=th))
    assert np.allclose(L[:2, :2], [[math.cos(th), math.sin(th)], [-math.sin(th), math.cos(th)]], atol=1e-13)
    assert np.allclose(L[2:, 2:], np.eye(3), atol=1e-14)
    assert alg.in_so41(L, 1e-12)
    z = 1.3
    K = alg.exp_so41(_chi(c10=z))
    assert np.isclose(K[0, 0], math.cosh(z)) and np.isclose(K[4, 4], math.cosh(z))
    assert np.isclose(abs(K[0, 4]), math.sinh(z))
    assert alg.in_so41(K, 1e-12)


def test_exp_so41_membership_sweep():
    rng = np.random.default_rng(3)
    for _ in range(100):
        a = rng.uniform(-1, 1, (5, 5))
        chi = a - a.T
        L = alg.exp_so41(chi)
        assert np.max(np.abs(L.T @ alg.BULK_GRAM @ L - alg.BULK_GRAM)) < 1e-9
    with pytest.raises(ValueError):
        alg.exp_so41(np.ones((5, 5)))


def test_adjoint_rotation_example():
    th = 0.9
    u = exp_bivector(E(1, 2).to_float() * (th / 2))
    img = alg.adjoint_action(u, E(1).to_float())
    want = E(1).to_float() * math.cos(th) - E(2).to_float() * math.sin(th)
    assert (img - want).norm() < 1e-12
    assert alg.adjoint_action(Multivector.scalar(BULK, 1), E(3)) == E(3)
    with pytest.raises(ValueError):
        alg.adjoint_action(E(1) * 2, E(3))


def test_rotor_and_matrix_exponential_agree():
    rng = np.random.default_rng(11)
    for _ in range(20):
        a = rng.uniform(-0.8, 0.8, (5, 5))
        chi = a - a.T
        V = alg.versor_matrix(alg.rotor_from_parameters(chi))
        assert np.max(np.abs(V - alg.exp_so41(chi))) < 1e-10


@given(st.data())
def test_adjoint_action_is_an_isometry(data):
    B = data.draw(multivectors(BULK, grades=(2,))).to_float() / 12
    a = data.draw(multivectors(BULK, grades=(1,))).to_float()
    b = alg.adjoint_action(exp_bivector(B), a)
    q = (a * a).scalar_part()
    assert abs((b * b).scalar_part() - q) <= 1e-10 * max(1.0, abs(q))
    # exp of a non-simple bivector still maps vectors to vectors, up to rounding
    assert (b - b.grade(1)).norm() < 1e-12


def test_reciprocal_spacetime_frame():
    for mu, nu in product(range(4), repeat=2):
        s = gamma(mu) * alg.gamma_lower(nu) + alg.gamma_lower(nu) * gamma(mu)
        assert s == (2 if mu == nu else 0)
    assert alg.sigma(3) == alg.gamma_lower(3) * alg.gamma_lower(0)
    assert alg.spacetime_pseudoscalar() * alg.spacetime_pseudoscalar() == -1
