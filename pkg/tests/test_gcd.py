import random

import pytest
import sympy as sp

from helpers import rand_series, symbols, to_sympy
from saddle_deform.errors import AllZeroInput, NotExactPolynomial
from saddle_deform.gcd import parameter_content, poly_divide, poly_gcd
from saddle_deform.parser import parse_scalar
from saddle_deform.series import TruncatedSeries, VarContext


@pytest.fixture
def c3():
    return VarContext.saddle(3, 12, 4)


def P(text, ctx):
    return parse_scalar(text, ctx)


def test_examples(c3):
    assert poly_gcd([P("x^3*y^2", c3), P("x^2*y", c3)]) == P("x^2*y", c3)
    assert poly_gcd([P("z1*x - y", c3), P("x*y", c3)]) == P("1", c3)
    g = poly_gcd([P("t*x^3*y^2", c3)])
    assert g == P("t*x^3*y^2", c3)
    content, rest = parameter_content(g)
    assert content == P("t", c3) and rest == P("x^3*y^2", c3)


def test_errors(c3):
    with pytest.raises(AllZeroInput):
        poly_gcd([TruncatedSeries.zero(c3)])
    with pytest.raises(NotExactPolynomial):
        poly_gcd([P("exp(t*x)", c3)])


def test_monic_normalization(c3):
    g = poly_gcd([P("6*x^2 - 6*y", c3), P("(2*x^2 - 2*y)*(x + z1)", c3)])
    assert g == P("x^2 - y", c3)


def test_against_sympy_oracle():
    rng = random.Random(21)
    ctx = VarContext.saddle(3, 12, 2)
    syms = symbols(ctx)
    for _ in range(40):
        g = rand_series(rng, ctx, 2, 2, 1, gaussian=False)
        p = rand_series(rng, ctx, 3, 2, 1, gaussian=False)
        q = rand_series(rng, ctx, 3, 2, 1, gaussian=False)
        if not (g.terms and p.terms and q.terms):
            continue
        ours = poly_gcd([g * p, g * q])
        ref = sp.gcd(to_sympy(g * p), to_sympy(g * q))
        # associates: the ratio is a nonzero constant
        ratio = sp.cancel(to_sympy(ours) / ref)
        assert ratio.free_symbols == set() and ratio != 0
        # ours is divisible by g
        assert poly_divide(ours, g) is not None
        assert all(s in syms for s in ref.free_symbols)


def test_gaussian_coefficients():
    ctx = VarContext.saddle(2, 10, 2)
    a = P("(x + i*y)^2*(x - y)", ctx)
    b = P("(x + i*y)*(x + y)", ctx)
    assert poly_gcd([a, b]) == P("x + i*y", ctx)


def test_trial_division_oracle():
    # brute force: the gcd divides both inputs and no monomial multiple of degree
    # one larger with a common factor does
    rng = random.Random(22)
    ctx = VarContext.saddle(2, 10, 1)
    for _ in range(30):
        g = rand_series(rng, ctx, 2, 2, 0, gaussian=False)
        p = rand_series(rng, ctx, 2, 2, 0, gaussian=False)
        q = rand_series(rng, ctx, 2, 2, 0, gaussian=False)
        if not (g.terms and p.terms and q.terms):
            continue
        h = poly_gcd([g * p, g * q])
        assert poly_divide(g * p, h) is not None and poly_divide(g * q, h) is not None
        for var in ("x", "y"):
            v = TruncatedSeries.var(ctx, var)
            assert poly_divide(g * p, h * v) is None or poly_divide(g * q, h * v) is None
