import random
from fractions import Fraction

import pytest

from dsclifford import classical as cl
from dsclifford.algebras import lower
from dsclifford.multivector import Multivector
from dsclifford.signature import BULK


def test_named_state():
    ell, m = Fraction(3), Fraction(2)
    s = cl.ClassicalState(lower(BULK, 4) * ell, lower(BULK, 1) * m, ell)
    assert s.l == (lower(BULK, 4) ^ lower(BULK, 1)) * (m * ell)
    assert s.l * s.l == -(ell * m) ** 2
    assert all(cl.classical_identities(s).values())


def test_zero_momentum():
    s = cl.ClassicalState(lower(BULK, 4), Multivector.zero(BULK), 1)
    assert s.l == 0
    assert all(cl.classical_identities(s).values())


def test_random_states():
    rng = random.Random(3)
    for _ in range(100):
        s = cl.random_state(rng)
        assert all(cl.classical_identities(s).values())


def test_constructor_validation():
    with pytest.raises(ValueError):
        cl.ClassicalState(lower(BULK, 4) * 2, lower(BULK, 1), 1)
    with pytest.raises(ValueError):
        cl.ClassicalState(lower(BULK, 4), lower(BULK, 4), 1)
    with pytest.raises(ValueError):
        cl.ClassicalState(lower(BULK, 4), lower(BULK, 1) ^ lower(BULK, 2), 1)
