import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from biring import (
    RATIONAL,
    DimensionMismatch,
    Matrix,
    NonSquare,
    NotInvertible,
    RingMismatch,
    check_reducibility,
    det_ratio_quasidet,
    determinant,
    field_coincidence_report,
    kronecker_delta,
    rc_quasideterminant,
    transpose,
)
from biring.sampling import WITNESS_A, WITNESS_B, random_invertible, random_matrix
from conftest import matrices


def leibniz(m):
    """Permutation-sum determinant, independent of the cofactor code."""
    n = m.rows
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for row, col in enumerate(perm):
            term *= m.data[row][col]
        total += term
    return total


def test_determinant_examples(r_example):
    assert determinant(Matrix([], RATIONAL, rows=0, cols=0)) == 1
    assert determinant(r_example) == -2
    for n in range(1, 6):
        assert determinant(kronecker_delta(n)) == 1


def test_determinant_errors():
    with pytest.raises(NonSquare):
        determinant(Matrix([[1, 2]]))
    with pytest.raises(RingMismatch):
        determinant(WITNESS_A)


@given(st.integers(1, 5).flatmap(lambda n: matrices(RATIONAL, n)))
def test_determinant_matches_leibniz(a):
    d = determinant(a)
    assert d == leibniz(a)
    assert determinant(transpose(a)) == d
    for col in range(1, a.rows + 1):
        assert determinant(a, col) == d


def test_det_ratio_examples(r_example):
    assert det_ratio_quasidet(r_example, 1, 1).value == Fraction(-1, 2)
    assert det_ratio_quasidet(r_example, 1, 2).value == Fraction(2, 3)
    assert det_ratio_quasidet(Matrix([[5]]), 1, 1).value == 5
    out = det_ratio_quasidet(kronecker_delta(2), 1, 2)
    assert not out.is_defined and out.undefined.position == (1, 2)


@given(st.integers(1, 5).flatmap(lambda n: matrices(RATIONAL, n)))
def test_ratio_theorem(a):
    n = a.rows
    for r in range(1, n + 1):
        for c in range(1, n + 1):
            ratio, qd = det_ratio_quasidet(a, r, c), rc_quasideterminant(a, r, c)
            # undefined in one route exactly when undefined in the other
            assert ratio.is_defined == qd.is_defined
            if qd.is_defined:
                assert qd.value == ratio.value


def test_ratio_theorem_with_singular_minors():
    a = Matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert determinant(a) == 0
    for r in range(1, 4):
        for c in range(1, 4):
            ratio, qd = det_ratio_quasidet(a, r, c), rc_quasideterminant(a, r, c)
            assert ratio.is_defined == qd.is_defined
            if qd.is_defined:
                assert qd.value == ratio.value == 0


def test_check_reducibility():
    rng = random.Random(3)
    a, b = random_matrix(rng, RATIONAL, 4, den=3), random_matrix(rng, RATIONAL, 4, den=3)
    assert check_reducibility(a, b)
    assert check_reducibility(kronecker_delta(4), a)
    assert not check_reducibility(WITNESS_A, WITNESS_B)
    with pytest.raises(DimensionMismatch):
        check_reducibility(Matrix([[1, 2]]), Matrix([[1, 2]]))


def test_field_coincidence_report(r_example):
    assert field_coincidence_report(r_example).passed
    assert field_coincidence_report(kronecker_delta(3), kronecker_delta(3)).passed
    rng = random.Random(8)
    for _ in range(100):
        a = random_invertible(rng, RATIONAL, 3, den=2)
        assert field_coincidence_report(a, rng=rng, samples=1).passed
    with pytest.raises(NotInvertible):
        field_coincidence_report(Matrix([[1, 1], [1, 1]]))


def test_field_coincidence_fails_for_quaternions(q_example):
    # not a field: the report must be able to say no
    report = field_coincidence_report(q_example, q_example, samples=0)
    assert not report.passed
