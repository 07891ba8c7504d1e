import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import multivectors
from dsclifford.multivector import (
    ModeError, Multivector, exp_bivector, geometric_product, grade, hodge_star,
    hodge_star_inv, left_contraction, parse, pseudoscalar, reversion, scalar_product, wedge,
)
from dsclifford.sampling import random_multivector, random_simple_bivector
from dsclifford.signature import BULK, MINKOWSKI, PAULI, Signature
from oracles import oracle_left_contraction, oracle_product, oracle_wedge

SIGS = [BULK, MINKOWSKI, PAULI]


def E(*labels, sig=BULK):
    return Multivector.blade(sig, *labels)


@pytest.mark.parametrize("sig", SIGS, ids=lambda s: s.name)
def test_every_blade_pair_matches_oracle(sig):
    for a in sig.masks():
        for b in sig.masks():
            A = Multivector(sig, {a: 1})
            B = Multivector(sig, {b: 1})
            assert (A * B)._terms == oracle_product({a: 1}, {b: 1}, sig.squares)
            assert (A ^ B)._terms == oracle_wedge({a: 1}, {b: 1}, sig.squares)
            assert left_contraction(A, B)._terms == oracle_left_contraction({a: 1}, {b: 1}, sig.squares)


def test_dense_random_pairs_match_oracle():
    rng = random.Random(7)
    for _ in range(200):
        a = random_multivector(rng, BULK)
        b = random_multivector(rng, BULK)
        assert (a * b)._terms == oracle_product(a._terms, b._terms, BULK.squares)


@given(st.data())
def test_associativity(data):
    a, b, c = (data.draw(multivectors(BULK, max_terms=6)) for _ in range(3))
    assert (a * b) * c == a * (b * c)


@given(st.data())
def test_reversion_reverses_products(data):
    a = data.draw(multivectors(MINKOWSKI))
    b = data.draw(multivectors(MINKOWSKI))
    assert reversion(a * b) == reversion(b) * reversion(a)


@given(st.data())
def test_wedge_is_associative_and_graded(data):
    a, b, c = (data.draw(multivectors(BULK, max_terms=5)) for _ in range(3))
    assert (a ^ b) ^ c == a ^ (b ^ c)
    u = data.draw(multivectors(BULK, grades=(1,)))
    v = data.draw(multivectors(BULK, grades=(1,)))
    assert u ^ v == -(v ^ u)


@given(st.data())
def test_vector_product_splits_into_contraction_and_wedge(data):
    u = data.draw(multivectors(BULK, grades=(1,)))
    b = data.draw(multivectors(BULK))
    assert u * b == left_contraction(u, b) + (u ^ b)


def test_named_examples():
    assert str(E(1) * E(2)) == "1*e12"
    assert E(0) * E(0) == -1
    assert E(2) * E(1) == -E(1, 2)
    # contraction of a vector into a bivector
    assert left_contraction(E(1), E(1) ^ E(2)) == E(2)
    assert left_contraction(E(1, 2), E(1)) == 0
    assert scalar_product(E(1, 2), E(1, 2)) == 1
    assert grade(E(1) + E(1, 2), 2) == E(1, 2)
    with pytest.raises(ValueError):
        grade(E(1), 6)


def test_pseudoscalar_squares():
    # frozen from the oracle product
    for sig, expected in [(BULK, -1), (MINKOWSKI, -1), (PAULI, -1)]:
        t = pseudoscalar(sig)
        assert oracle_product(t._terms, t._terms, sig.squares) == {0: expected}
        assert t * t == expected


def test_text_round_trip():
    rng = random.Random(3)
    for sig in SIGS:
        for _ in range(50):
            a = random_multivector(rng, sig, density=0.4)
            assert parse(sig, str(a)) == a
    a = Multivector(BULK, {BULK.mask(1, 4, 0): Fraction(3, 2)})
    assert str(a) == "3/2*e140"
    wide = Signature("wide", tuple(range(12)), (1,) * 12)
    w = Multivector.blade(wide, 3, 11)
    assert str(w) == "1*e{3,11}"
    assert parse(wide, str(w)) == w
    with pytest.raises(ValueError):
        parse(BULK, "1*e21")


def test_mode_mixing_is_refused():
    a = E(1)
    with pytest.raises(ModeError):
        a + a.to_float()
    with pytest.raises(ModeError):
        a * 0.5
    with pytest.raises(ModeError):
        a.to_float() * Fraction(1, 2)
    with pytest.raises(ModeError):
        Multivector(BULK, {1: 0.5}, exact=True)
    assert (a * Fraction(1, 2)).exact


def test_zero_terms_are_dropped():
    a = E(1) + E(2)
    assert len(a - E(2)) == 1
    assert len(Multivector(BULK, {0: 0, 1: 1})) == 1


def test_signature_validation():
    with pytest.raises(ValueError):
        Signature("bad", (1, 2), (1, 2))
    with pytest.raises(ValueError):
        Signature("bad", (1, 1), (1, 1))
    with pytest.raises(KeyError):
        BULK.mask(7)


def test_hodge_pair_and_examples():
    tau = pseudoscalar(BULK)
    assert tau == E(1, 2, 3, 4, 0)
    assert hodge_star(Multivector.scalar(BULK, 1)) == tau
    rng = random.Random(11)
    for _ in range(100):
        a = random_multivector(rng, BULK)
        assert hodge_star_inv(hodge_star(a)) == a
        assert hodge_star(hodge_star_inv(a)) == a


def test_hodge_duality_relations():
    rng = random.Random(5)
    for _ in range(200):
        l = rng.randint(0, 5)
        A = random_multivector(rng, BULK, grades=(l,))
        B = random_multivector(rng, BULK, grades=(5 - l,))
        assert left_contraction(A, hodge_star(B)) == left_contraction(B, hodge_star(A))
        v = random_multivector(rng, BULK, grades=(1,))
        assert hodge_star_inv(v) == -hodge_star(v)


def test_exp_closed_form_examples():
    u = exp_bivector(E(1, 2) * Fraction(1, 3))
    assert not u.exact
    assert abs(u.scalar_part() - math.cos(1 / 3)) < 1e-15
    boost = exp_bivector(E(1, 0))
    assert abs(boost.scalar_part() - math.cosh(1)) < 1e-15
    nil = (E(1) + E(0)) ^ E(2)
    assert nil * nil == 0
    assert exp_bivector(nil) == nil + 1
    assert exp_bivector(nil).exact


def test_exp_rejects_bad_input():
    with pytest.raises(ValueError):
        exp_bivector(E(1))
    nonsimple = E(1, 2) + E(3, 4)
    with pytest.raises(ValueError):
        exp_bivector(nonsimple)
    f = exp_bivector(nonsimple.to_float())
    assert abs((f * reversion(f)).scalar_part() - 1) < 1e-12


def test_exp_versor_property_series_and_closed():
    rng = random.Random(2)
    for _ in range(200):
        B = random_simple_bivector(rng, BULK, exact=False, bound=3)
        for method in ("auto", "series"):
            u = exp_bivector(B, method=method)
            one = u * reversion(u)
            assert (one - 1).norm() <= 1e-10 * max(1.0, u.norm() ** 2)


def test_series_matches_closed_form():
    rng = random.Random(4)
    for _ in range(50):
        B = random_simple_bivector(rng, BULK, exact=False, bound=2)
        a = exp_bivector(B, method="closed")
        b = exp_bivector(B, method="series")
        assert (a - b).norm() <= 1e-9 * max(1.0, a.norm())


def test_products_check_signature():
    with pytest.raises(ValueError):
        geometric_product(E(1), E(1, sig=PAULI))
    with pytest.raises(ValueError):
        wedge(E(1), E(1, sig=PAULI))
