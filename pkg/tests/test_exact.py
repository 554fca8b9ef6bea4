from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from saddle_deform.exact import I, ONE, ZERO, GaussianRational, gq, parse_gaussian

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=30)
gaussians = st.builds(GaussianRational, fracs, fracs)


def pair_mul(a, b):
    # oracle: schoolbook product on (re, im) pairs of Fractions
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def test_examples():
    assert (1 + I) * (1 - I) == 2
    assert 1 / I == -I
    assert GaussianRational(Fraction(3, 2)) + GaussianRational(Fraction(-3, 2)) == 0


def test_to_complex():
    assert GaussianRational(Fraction(1, 3)).to_complex() == complex(0.3333333333333333, 0)
    assert I.to_complex() == 1j
    assert ZERO.to_complex() == 0j


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_reduced_representation():
    q = gq(Fraction(4, 6), Fraction(-2, 4))
    a, b, d = q.gaussian_integer_parts()
    assert d > 0
    assert (a, b, d) == (4, -3, 6)
    assert q == GaussianRational(Fraction(2, 3), Fraction(-1, 2))
    assert hash(GaussianRational(3)) == hash(3)


@pytest.mark.parametrize("text,value", [
    ("1/2 + 3/4*i", gq(Fraction(1, 2), Fraction(3, 4))),
    ("-i", -I),
    ("3/2*i", gq(0, Fraction(3, 2))),
    ("-5", gq(-5)),
    ("2-i", gq(2, -1)),
])
def test_render_and_parse(text, value):
    assert parse_gaussian(text) == value
    assert parse_gaussian(str(value)) == value


def test_rendering():
    assert str(gq(Fraction(1, 2), Fraction(-3, 4))) == "1/2 - 3/4*i"
    assert str(gq(0, -1)) == "-i"
    assert str(gq(Fraction(3, 2))) == "3/2"
    assert str(ZERO) == "0"


@settings(max_examples=1000)
@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.conjugate().conjugate() == a
    prod = pair_mul((a.re, a.im), (b.re, b.im))
    assert (a * b).re == prod[0] and (a * b).im == prod[1]
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b
