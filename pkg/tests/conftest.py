import os
import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from dsclifford.multivector import Multivector  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))


@st.composite
def multivectors(draw, sig, grades=None, max_terms=None):
    masks = [m for m in sig.masks() if grades is None or m.bit_count() in grades]
    chosen = draw(st.lists(st.sampled_from(masks), unique=True, max_size=max_terms or len(masks)))
    return Multivector(sig, {m: draw(rationals) for m in chosen})


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
