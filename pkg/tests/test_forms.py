import random

import pytest

from helpers import rand_form, rand_series
from saddle_deform.errors import ContextMismatch
from saddle_deform.forms import (OneForm, ThreeForm, TwoForm, df_saddle, ext_d, wedge, wedge11,
                                 wedge12)
from saddle_deform.parser import parse_form, parse_scalar
from saddle_deform.series import VarContext


@pytest.fixture
def c3():
    return VarContext.saddle(3, 10, 4)


def test_wedge11_examples(c3):
    dx = OneForm(c3, {"dx": 1})
    assert wedge11(dx, dx).is_zero()
    om = parse_form("d(x*y) + t*(x*y)^2*dx", c3)
    assert wedge11(om, df_saddle(c3)) == TwoForm(c3, {(0, 1): parse_scalar("t*x^3*y^2", c3)})
    assert str(wedge11(OneForm(c3, {"dy": parse_scalar("x", c3)}), dx)) == "-x*dx∧dy"


def test_wedge12_examples(c3):
    dx = OneForm(c3, {"dx": 1})
    dxdy = TwoForm(c3, {("dx", "dy"): 1})
    assert wedge12(dx, dxdy).is_zero()
    dz = OneForm(c3, {"dz1": 1})
    assert wedge12(dz, dxdy) == ThreeForm(c3, {(0, 1, 2): 1})
    om = parse_form("d(x*y) + t*d(z1*x + y)", c3)
    assert wedge12(om, ext_d(om)).is_zero()


def test_ext_d_examples(c3):
    assert ext_d(parse_scalar("x*y", c3)) == parse_form("y*dx + x*dy", c3)
    assert ext_d(ext_d(parse_scalar("x*y", c3))).is_zero()
    assert str(ext_d(parse_form("x^2*y*dx", c3))) == "-x^2*dx∧dy"


def test_key_normalization(c3):
    a = TwoForm(c3, {("dy", "dx"): parse_scalar("x", c3)})
    assert a.coefficient((0, 1)) == -parse_scalar("x", c3)
    assert a[("dy", "dx")] == parse_scalar("x", c3)
    with pytest.raises(KeyError):
        OneForm(c3, {"dq": 1})


def test_context_mismatch(c3):
    other = VarContext.saddle(3, 9, 4)
    with pytest.raises(ContextMismatch):
        wedge(OneForm(c3, {"dx": 1}), OneForm(other, {"dy": 1}))


def test_top_degree_vanishes_in_two_variables():
    c2 = VarContext.saddle(2, 6, 2)
    om = parse_form("x*dx + y*dy", c2)
    assert wedge12(om, ext_d(parse_form("x*y*dx", c2))).is_zero()


def test_d_squared_zero():
    rng = random.Random(31)
    c3 = VarContext.saddle(3, 8, 2)
    for _ in range(200):
        h = rand_series(rng, c3, 4, 4)
        assert ext_d(ext_d(h)).is_zero()
        om = rand_form(rng, c3, 2, 3)
        assert ext_d(ext_d(om)).is_zero()


def test_antisymmetry_and_leibniz():
    rng = random.Random(32)
    c3 = VarContext.saddle(3, 10, 3)
    for _ in range(100):
        a, b = rand_form(rng, c3, 2, 3, 1), rand_form(rng, c3, 2, 3, 1)
        assert wedge11(a, b) == -wedge11(b, a)
        h = rand_series(rng, c3, 3, 3, 1)
        assert ext_d(a * h) == wedge11(ext_d(h), a) + ext_d(a) * h
        # d(a ^ b) = da ^ b - a ^ db
        lhs = ext_d(wedge11(a, b))
        rhs = wedge(ext_d(a), b) - wedge(a, ext_d(b))
        assert lhs == rhs


def test_leibniz_truncated():
    c2 = VarContext.saddle(2, 5, 2)
    h = parse_scalar("exp(t*x)", c2)
    a = parse_form("y*dx", c2)
    assert (ext_d(a * h) - (wedge11(ext_d(h), a) + ext_d(a) * h)).is_zero()


def test_integrability_of_corpus_deformations():
    c3 = VarContext.saddle(3, 10, 4)
    for text in ("d(x*y) + t*(x*y)^2*dx", "exp(t*y)*d(x*y) + t*x*y*dx",
                 "d(x*y) + t*d(z1*x + y)", "(1 + t*x*y)*d(x*y) - t*x*y^2*dx"):
        om = parse_form(text, c3)
        assert wedge12(om, ext_d(om)).is_zero(), text
