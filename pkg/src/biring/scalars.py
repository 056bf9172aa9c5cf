"""Exact scalars: rationals and rational quaternions.

Rationals are :class:`fractions.Fraction`. Quaternions are stored as four
integer numerators over one shared positive denominator, reduced so that the
gcd of all five integers is 1. Keeping a common denominator makes the Hamilton
product a handful of integer multiplications followed by a single reduction,
which matters because the quasideterminant recursions are multiplication heavy.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC
from typing import Union

from .errors import DivisionByZero, ParseError, RingMismatch, ZeroDenominator

__all__ = [
    "Quaternion",
    "Ring",
    "RATIONAL",
    "QUATERNION",
    "rational_normalize",
    "quaternion_mul",
    "quaternion_inv",
    "scalar_inv",
    "ring_of",
    "get_ring",
]


def rational_normalize(num: int, den: int) -> Fraction:
    """Canonical rational ``num/den``; the sign ends up on the numerator."""
    if den == 0:
        raise ZeroDenominator(f"denominator of {num}/0")
    return Fraction(num, den)


def _reduce(a, b, c, d, n):
    if n < 0:
        a, b, c, d, n = -a, -b, -c, -d, -n
    g = gcd(a, b, c, d, n)
    if g != 1:
        a, b, c, d, n = a // g, b // g, c // g, d // g, n // g
    return a, b, c, d, n


class Quaternion:
    """Immutable quaternion ``w + x i + y j + z k`` with rational coefficients."""

    __slots__ = ("_a", "_b", "_c", "_d", "_n")

    def __init__(self, w=0, x=0, y=0, z=0):
        w, x, y, z = (Fraction(t) for t in (w, x, y, z))
        n = w.denominator
        for t in (x, y, z):
            n = n * t.denominator // gcd(n, t.denominator)
        self._set(
            w.numerator * (n // w.denominator),
            x.numerator * (n // x.denominator),
            y.numerator * (n // y.denominator),
            z.numerator * (n // z.denominator),
            n,
        )

    def _set(self, a, b, c, d, n):
        a, b, c, d, n = _reduce(a, b, c, d, n)
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "_d", d)
        object.__setattr__(self, "_n", n)

    @classmethod
    def _raw(cls, a, b, c, d, n):
        q = object.__new__(cls)
        q._set(a, b, c, d, n)
        return q

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @classmethod
    def coerce(cls, value) -> "Quaternion":
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, (int, _RationalABC)):
            f = Fraction(value)
            return cls._raw(f.numerator, 0, 0, 0, f.denominator)
        raise TypeError(f"cannot coerce {value!r} to Quaternion")

    # coefficient views
    @property
    def w(self) -> Fraction:
        return Fraction(self._a, self._n)

    @property
    def x(self) -> Fraction:
        return Fraction(self._b, self._n)

    @property
    def y(self) -> Fraction:
        return Fraction(self._c, self._n)

    @property
    def z(self) -> Fraction:
        return Fraction(self._d, self._n)

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.w, self.x, self.y, self.z)

    def conjugate(self) -> "Quaternion":
        return Quaternion._raw(self._a, -self._b, -self._c, -self._d, self._n)

    def norm(self) -> Fraction:
        """Reduced norm w² + x² + y² + z² (no square root)."""
        s = self._a ** 2 + self._b ** 2 + self._c ** 2 + self._d ** 2
        return Fraction(s, self._n ** 2)

    def is_zero(self) -> bool:
        return not (self._a or self._b or self._c or self._d)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return (self._a, self._b, self._c, self._d, self._n) == (
                other._a, other._b, other._c, other._d, other._n)
        if isinstance(other, (int, _RationalABC)):
            return self == Quaternion.coerce(other)
        return NotImplemented

    def __hash__(self):
        if not (self._b or self._c or self._d):
            return hash(Fraction(self._a, self._n))
        return hash((self._a, self._b, self._c, self._d, self._n))

    def __neg__(self):
        return Quaternion._raw(-self._a, -self._b, -self._c, -self._d, self._n)

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            o = Quaternion.coerce(other)
        except TypeError:
            return NotImplemented
        n1, n2 = self._n, o._n
        if n1 == n2:
            return Quaternion._raw(self._a + o._a, self._b + o._b,
                                   self._c + o._c, self._d + o._d, n1)
        return Quaternion._raw(
            self._a * n2 + o._a * n1, self._b * n2 + o._b * n1,
            self._c * n2 + o._c * n1, self._d * n2 + o._d * n1, n1 * n2)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = Quaternion.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = Quaternion.coerce(other)
        except TypeError:
            return NotImplemented
        return quaternion_mul(self, o)

    def __rmul__(self, other):
        try:
            o = Quaternion.coerce(other)
        except TypeError:
            return NotImplemented
        return quaternion_mul(o, self)

    def inverse(self) -> "Quaternion":
        return quaternion_inv(self)

    def __repr__(self):
        return "Quaternion({}, {}, {}, {})".format(*(str(t) for t in self.coefficients))

    def __str__(self):
        parts = []
        for coef, unit in zip(self.coefficients, ("", "i", "j", "k")):
            if coef == 0:
                continue
            if unit and abs(coef) == 1:
                mag = unit
            else:
                mag = f"{abs(coef)}{unit}"
            parts.append(("-" if coef < 0 else "+", mag))
        if not parts:
            return "0"
        sign, mag = parts[0]
        out = ("-" if sign == "-" else "") + mag
        for sign, mag in parts[1:]:
            out += f" {sign} {mag}"
        return out


def quaternion_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product ``p·q``."""
    a1, b1, c1, d1 = p._a, p._b, p._c, p._d
    a2, b2, c2, d2 = q._a, q._b, q._c, q._d
    return Quaternion._raw(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        p._n * q._n,
    )


def quaternion_inv(q: Quaternion) -> Quaternion:
    """Conjugate over norm; exact two-sided inverse."""
    if q.is_zero():
        raise DivisionByZero("inverse of the zero quaternion")
    s = q._a ** 2 + q._b ** 2 + q._c ** 2 + q._d ** 2
    n = q._n
    return Quaternion._raw(q._a * n, -q._b * n, -q._c * n, -q._d * n, s)


Scalar = Union[Fraction, Quaternion]


def scalar_inv(x):
    """Two-sided multiplicative inverse in whichever ring ``x`` lives in."""
    if isinstance(x, Quaternion):
        return quaternion_inv(x)
    if x == 0:
        raise DivisionByZero("inverse of zero")
    return 1 / Fraction(x)


def _parse_rational(token, locus=None) -> Fraction:
    if isinstance(token, bool):
        raise ParseError(f"malformed rational {token!r}", locus)
    if isinstance(token, int):
        return Fraction(token)
    if not isinstance(token, str):
        raise RingMismatch(f"expected a rational string, got {token!r}", locus)
    text = token.strip()
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ParseError(f"malformed rational {token!r}", locus) from None
    try:
        return rational_normalize(p, q)
    except ZeroDenominator:
        raise ParseError(f"zero denominator in {token!r}", locus) from None


def _encode_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Ring:
    """Division-ring descriptor: constants, coercion, text encoding, sampling."""

    name: str
    commutative: bool

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def coerce(self, value):
        raise NotImplementedError

    def contains(self, value) -> bool:
        raise NotImplementedError

    def inv(self, value):
        return scalar_inv(self.coerce(value))

    def parse(self, token, locus=None):
        raise NotImplementedError

    def encode(self, value):
        raise NotImplementedError

    def random(self, rng: random.Random, bound: int = 3, den: int = 1):
        raise NotImplementedError

    def __repr__(self):
        return f"<ring {self.name}>"


class _RationalRing(Ring):
    name = "rational"
    commutative = True

    def coerce(self, value):
        if isinstance(value, Quaternion):
            raise RingMismatch(f"{value!r} is not a rational")
        return Fraction(value)

    def contains(self, value):
        return isinstance(value, (int, _RationalABC)) and not isinstance(value, bool)

    def parse(self, token, locus=None):
        return _parse_rational(token, locus)

    def encode(self, value):
        return _encode_rational(value)

    def random(self, rng, bound=3, den=1):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


class _QuaternionRing(Ring):
    name = "quaternion"
    commutative = False

    def coerce(self, value):
        return Quaternion.coerce(value)

    def contains(self, value):
        return isinstance(value, Quaternion)

    def parse(self, token, locus=None):
        if not isinstance(token, list):
            raise RingMismatch(f"expected a 4-array quaternion, got {token!r}", locus)
        if len(token) != 4:
            raise RingMismatch(f"quaternion needs 4 coefficients, got {len(token)}", locus)
        return Quaternion(*(_parse_rational(t, locus) for t in token))

    def encode(self, value):
        return [_encode_rational(t) for t in Quaternion.coerce(value).coefficients]

    def random(self, rng, bound=3, den=1):
        return Quaternion(*(Fraction(rng.randint(-bound, bound), rng.randint(1, den))
                            for _ in range(4)))


RATIONAL: Ring = _RationalRing()
QUATERNION: Ring = _QuaternionRing()
RINGS = {RATIONAL.name: RATIONAL, QUATERNION.name: QUATERNION}


def get_ring(name: str) -> Ring:
    try:
        return RINGS[name]
    except KeyError:
        raise RingMismatch(f"unknown ring {name!r}") from None


def ring_of(value) -> Ring:
    return QUATERNION if isinstance(value, Quaternion) else RATIONAL
