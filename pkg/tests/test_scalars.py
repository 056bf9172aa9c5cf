from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given

from biring import (
    QUATERNION,
    RATIONAL,
    DivisionByZero,
    Quaternion,
    ZeroDenominator,
    quaternion_inv,
    quaternion_mul,
    rational_normalize,
    scalar_inv,
)
from conftest import nonzero_quaternions, nonzero_rationals, quaternions, rationals


def canonical(x):
    if isinstance(x, Quaternion):
        return x._n > 0 and gcd(x._a, x._b, x._c, x._d, x._n) == 1
    return x.denominator > 0 and gcd(abs(x.numerator), x.denominator) == 1


@pytest.mark.parametrize("num, den, expected", [
    (2, 4, Fraction(1, 2)),
    (3, -6, Fraction(-1, 2)),
    (0, 7, Fraction(0, 1)),
])
def test_rational_normalize(num, den, expected):
    got = rational_normalize(num, den)
    assert got == expected
    assert (got.numerator, got.denominator) == (expected.numerator, expected.denominator)


def test_rational_normalize_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rational_normalize(1, 0)


def test_hamilton_table(units):
    i, j, k = units
    assert quaternion_mul(i, j) == k
    assert quaternion_mul(j, i) == -k
    assert quaternion_mul(j, k) == i
    assert quaternion_mul(k, i) == j
    for u in units:
        assert u * u == -1
    assert i * j * k == -1
    q = Quaternion(1, 2, -3, Fraction(1, 2))
    assert quaternion_mul(Quaternion(1), q) == q


def test_noncommutativity_witness(units):
    i, j, _ = units
    assert i * j != j * i


def test_quaternion_inverse_examples(units):
    i, j, k = units
    assert quaternion_inv(i) == -i
    one_plus_k = Quaternion(1, 0, 0, 1)
    expected = Quaternion(Fraction(1, 2), 0, 0, Fraction(-1, 2))
    # (1+k)(1-k) = 1 - k + k - k² = 2, so (1-k)/2 is the inverse
    assert quaternion_inv(one_plus_k) == expected
    assert one_plus_k * expected == 1 == expected * one_plus_k
    assert quaternion_inv(Quaternion(2)) == Quaternion(Fraction(1, 2))
    with pytest.raises(DivisionByZero):
        quaternion_inv(Quaternion())


def test_scalar_inv():
    assert scalar_inv(Fraction(3, 4)) == Fraction(4, 3)
    assert scalar_inv(Quaternion(0, 0, 1, 0)) == Quaternion(0, 0, -1, 0)
    with pytest.raises(DivisionByZero):
        scalar_inv(Fraction(0))


def test_mixed_coercion():
    q = Quaternion(1, 1, 0, 0)
    assert Fraction(1, 2) * q == Quaternion(Fraction(1, 2), Fraction(1, 2))
    assert q * 2 == 2 * q == Quaternion(2, 2)
    assert q - 1 == Quaternion(0, 1)
    assert 1 - q == Quaternion(0, -1)
    assert Quaternion(3) == 3 and hash(Quaternion(Fraction(3, 2))) == hash(Fraction(3, 2))


def test_coefficient_views_are_reduced():
    q = Quaternion(Fraction(2, 4), Fraction(1, 3), 0, -1)
    assert q.coefficients == (Fraction(1, 2), Fraction(1, 3), 0, -1)
    assert canonical(q)
    assert canonical(q * q.conjugate())
    assert q * q.conjugate() == q.norm()


@given(quaternions, quaternions, quaternions)
def test_quaternion_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    for x in (a * b, a + b, a - c, -a):
        assert canonical(x)


@given(rationals, rationals, rationals)
def test_rational_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    for x in (a * b, a + b, a - c):
        assert canonical(x)


@given(nonzero_quaternions)
def test_quaternion_two_sided_inverse(q):
    inv = scalar_inv(q)
    assert q * inv == 1 and inv * q == 1
    assert canonical(inv)


@given(nonzero_rationals)
def test_rational_two_sided_inverse(x):
    assert x * scalar_inv(x) == 1


@pytest.mark.parametrize("ring, token, expected", [
    (RATIONAL, "3/4", Fraction(3, 4)),
    (RATIONAL, "-6/4", Fraction(-3, 2)),
    (RATIONAL, "5", Fraction(5)),
    (QUATERNION, ["1", "0", "0", "-1/2"], Quaternion(1, 0, 0, Fraction(-1, 2))),
])
def test_parse_and_encode(ring, token, expected):
    value = ring.parse(token)
    assert value == expected
    assert ring.parse(ring.encode(value)) == value


def test_encode_is_canonical():
    assert RATIONAL.encode(Fraction(6, -4)) == "-3/2"
    assert RATIONAL.encode(Fraction(4, 2)) == "2"
    assert QUATERNION.encode(Quaternion(Fraction(1, 2), 0, 2, -1)) == ["1/2", "0", "2", "-1"]
