import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from biring import QUATERNION, RATIONAL, Matrix, Quaternion

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
small_ints = st.integers(-3, 3).map(Fraction)
quaternions = st.builds(Quaternion, small_ints, small_ints, small_ints, small_ints)
nonzero_rationals = rationals.filter(bool)
nonzero_quaternions = quaternions.filter(bool)


def matrices(ring, rows, cols=None):
    elements = rationals if ring is RATIONAL else quaternions
    cols = rows if cols is None else cols
    return st.lists(st.lists(elements, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows).map(lambda t: Matrix(t, ring))


@st.composite
def square_pairs(draw, ring, max_n=4):
    n = draw(st.integers(1, max_n))
    return draw(matrices(ring, n)), draw(matrices(ring, n))


@st.composite
def square_triples(draw, ring, max_n=3):
    n = draw(st.integers(1, max_n))
    return tuple(draw(matrices(ring, n)) for _ in range(3))


@pytest.fixture
def units():
    return Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)


@pytest.fixture
def q_example():
    i, j = Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0)
    return Matrix([[1, i], [j, 1]], QUATERNION)


@pytest.fixture
def r_example():
    return Matrix([[1, 2], [3, 4]], RATIONAL)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        name, ok, detail = results[number]
        terminalreporter.write_line(
            f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name}  {detail}")
