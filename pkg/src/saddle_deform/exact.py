"""Exact arithmetic over the Gaussian rationals Q(i).

Rationals are :class:`fractions.Fraction`.  A :class:`GaussianRational` keeps
a single common denominator, ``(a + b*i) / d`` with ``d > 0`` and
``gcd(a, b, d) == 1``, so equality is structural and most operations stay in
machine-friendly integer arithmetic.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = ["Rational", "GaussianRational", "gq", "ZERO", "ONE", "I", "parse_gaussian"]


def _reduced(a: int, b: int, d: int) -> "GaussianRational":
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g > 1:
        a //= g
        b //= g
        d //= g
    obj = object.__new__(GaussianRational)
    obj._a = a
    obj._b = b
    obj._d = d
    return obj


class GaussianRational:
    """An element ``re + im*i`` of Q(i).  Immutable."""

    __slots__ = ("_a", "_b", "_d")

    def __new__(cls, re=0, im=0):
        if isinstance(re, GaussianRational) and im == 0:
            return re
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        return _reduced(re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, int):
            return _reduced(value, 0, 1)
        if isinstance(value, _RationalABC):
            return _reduced(value.numerator, 0, value.denominator)
        if isinstance(value, complex):
            raise TypeError("floating complex values are not exact; build from Fractions")
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianRational")

    @classmethod
    def from_parts(cls, a: int, b: int, d: int = 1) -> "GaussianRational":
        """``(a + b*i) / d`` from integers."""
        if d == 0:
            raise ZeroDivisionError("zero denominator")
        return _reduced(a, b, d)

    # -- parts ---------------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def gaussian_integer_parts(self) -> tuple[int, int, int]:
        """Return ``(a, b, d)`` with ``self == (a + b*i)/d``."""
        return self._a, self._b, self._d

    def is_real(self) -> bool:
        return self._b == 0

    # -- field operations ----------------------------------------------
    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self._d == o._d:
            return _reduced(self._a + o._a, self._b + o._b, self._d)
        return _reduced(self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d)

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(GaussianRational)
        obj._a, obj._b, obj._d = -self._a, -self._b, self._d
        return obj

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, d = self._a, self._b, self._d
        c, e, f = o._a, o._b, o._d
        return _reduced(a * c - b * e, a * e + b * c, d * f)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        a, b, d = self._a, self._b, self._d
        norm = a * a + b * b
        if norm == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return _reduced(a * d, -b * d, norm)

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        obj = object.__new__(GaussianRational)
        obj._a, obj._b, obj._d = self._a, -self._b, self._d
        return obj

    conj = conjugate

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self == o

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return self._a != 0 or self._b != 0

    # -- conversions -----------------------------------------------------
    def to_complex(self) -> complex:
        """Nearest double-precision value of each part."""
        return complex(float(self.re), float(self.im))

    def __complex__(self):
        return self.to_complex()

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        re_, im_ = self.re, self.im
        if not im_:
            return _fmt_rational(re_)
        im_str = _fmt_imag(abs(im_))
        if not re_:
            return ("-" if im_ < 0 else "") + im_str
        return f"{_fmt_rational(re_)} {'-' if im_ < 0 else '+'} {im_str}"


def _fmt_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _fmt_imag(q: Fraction) -> str:
    if q == 1:
        return "i"
    return f"{_fmt_rational(q)}*i"


def gq(re=0, im=0) -> GaussianRational:
    """Shorthand constructor; accepts ints, Fractions or strings like ``'3/2'``."""
    return GaussianRational(Fraction(re), Fraction(im))


ZERO = _reduced(0, 0, 1)
ONE = _reduced(1, 0, 1)
I = _reduced(0, 1, 1)

_R = r"\d+(?:/\d+)?"
_REAL_ONLY = re.compile(rf"^([+-]?{_R})$")
_IMAG_ONLY = re.compile(rf"^([+-]?)(?:({_R})\*)?i$")
_BOTH = re.compile(rf"^([+-]?{_R})([+-])(?:({_R})\*)?i$")


def parse_gaussian(text: str) -> GaussianRational:
    """Parse the textual rendering produced by ``str(GaussianRational)``."""
    s = text.replace(" ", "")
    m = _REAL_ONLY.match(s)
    if m:
        return GaussianRational(Fraction(m.group(1)))
    m = _IMAG_ONLY.match(s)
    if m:
        im_ = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        return GaussianRational(0, -im_ if m.group(1) == "-" else im_)
    m = _BOTH.match(s)
    if m:
        im_ = Fraction(m.group(3)) if m.group(3) else Fraction(1)
        return GaussianRational(Fraction(m.group(1)), -im_ if m.group(2) == "-" else im_)
    raise ValueError(f"not a Gaussian rational: {text!r}")
