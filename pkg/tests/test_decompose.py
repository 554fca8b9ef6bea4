import random

import pytest

from helpers import rand_form, rand_series
from saddle_deform.cycle import vanishing_obstructions
from saddle_deform.decompose import (diagonal_free, divide_by_df, solve_h_2d, standard_form)
from saddle_deform.errors import (IntegrabilityHypothesisFailed, NotDivisible, Obstructed)
from saddle_deform.forms import df_saddle, ext_d, wedge11
from saddle_deform.parser import parse_form, parse_scalar
from saddle_deform.series import VarContext


@pytest.fixture
def c2():
    return VarContext.saddle(2, 10, 4)


@pytest.fixture
def c3():
    return VarContext.saddle(3, 10, 4)


def test_solve_h_2d_examples(c2):
    assert solve_h_2d(parse_form("x*y*dx", c2)) == parse_scalar("x^2*y", c2)
    h0 = parse_scalar("x^2*y + y^3", c2)
    h = solve_h_2d(ext_d(h0))
    assert wedge11(ext_d(h), df_saddle(c2)) == wedge11(ext_d(h0), df_saddle(c2))
    with pytest.raises(Obstructed) as err:
        solve_h_2d(parse_form("y*dx", c2))
    assert err.value.obstructions[0].m == 1


def test_solve_h_2d_gauge_recovers_exact_form(c2):
    h0 = parse_scalar("x^2*y + y^3", c2)
    sf = standard_form(ext_d(h0))
    assert sf.a.is_zero() and sf.h == h0
    # adding (xy)^2 to the potential is invisible in the gauge
    sf2 = standard_form(ext_d(h0 + parse_scalar("x^2*y^2", c2)))
    assert sf2.h == h0 and sf2.a == parse_scalar("2*x*y", c2)


def test_divide_by_df_examples(c2):
    assert divide_by_df(df_saddle(c2) * parse_scalar("-x", c2)) == parse_scalar("-x", c2)
    xy2 = parse_scalar("(x*y)^2", c2)
    assert divide_by_df(df_saddle(c2) * xy2) == xy2
    with pytest.raises(NotDivisible):
        divide_by_df(parse_form("y*dx", c2))
    c3 = VarContext.saddle(3, 6, 2)
    with pytest.raises(NotDivisible):
        divide_by_df(parse_form("dz1", c3))


def test_example0(c2):
    om = parse_form("d(x*y) + t*(x*y)^2*dx", c2)
    for route in ("closed_form", "jet"):
        sf = standard_form(om, route)
        assert str(sf.a) == "1 - 2*t*x^2*y" and str(sf.h) == "t*x^3*y^2"
        assert sf.exact and sf.residual_degree is None
        assert sf.recombine() == om
    assert sf.to_json() == {"a": "1 - 2*t*x^2*y", "h": "t*x^3*y^2", "exact": True,
                            "residual_degree": None}


def test_example3_obstructed(c3):
    with pytest.raises(Obstructed) as err:
        standard_form(parse_form("(1 + t*x*y)*d(x*y) - t*x*y^2*dx + t*z1*dz1", c3))
    assert [(o.j, o.m) for o in err.value.obstructions] == [(1, 2)]


def test_hypothesis_is_checked(c3):
    # integrable, no cycle obstruction, but d(eta) ^ d(xy) != 0
    om = parse_form("(1 + t*z1)*d(x*y + t*z1*x)", c3)
    assert not vanishing_obstructions(om)
    with pytest.raises(IntegrabilityHypothesisFailed) as err:
        standard_form(om)
    assert str(err.value.witness) == "t^2*x*z1*dx∧dy∧dz1"


def test_truncated_input(c2):
    om = parse_form("exp(t*y)*d(x*y) + t*x*y*dx", c2)
    sf = standard_form(om)
    assert not sf.exact and sf.residual_degree is not None
    assert (sf.recombine() - om).is_zero()
    assert str(sf.h) == "t*x^2*y"


def test_round_trip_2d():
    rng = random.Random(61)
    c2 = VarContext.saddle(2, 10, 3)
    for _ in range(100):
        a = rand_series(rng, c2, 4, 4, 2)
        h = rand_series(rng, c2, 4, 5, 2)
        eta = df_saddle(c2) * a + ext_d(h)
        sf = standard_form(eta)
        assert sf.exact
        assert sf.recombine() == eta.recontext(sf.a.ctx)
        assert diagonal_free(sf.h) and sf.h.constant_term() == 0
        assert sf.h.degree() <= max(c.degree() for c in eta.coeffs.values()) + 1


def test_round_trip_3d():
    rng = random.Random(62)
    c3 = VarContext.saddle(3, 8, 2)
    for _ in range(30):
        a = rand_series(rng, c3, 3, 3, 2)
        h = rand_series(rng, c3, 3, 4, 2)
        eta = df_saddle(c3) * a + ext_d(h)
        sf = standard_form(eta)
        assert sf.recombine() == eta.recontext(sf.a.ctx)
        assert diagonal_free(sf.h)
        assert standard_form(eta) == sf


def test_routes_agree_in_two_variables():
    rng = random.Random(63)
    c2 = VarContext.saddle(2, 8, 2)
    for _ in range(30):
        eta = df_saddle(c2) * rand_series(rng, c2, 3, 3) + ext_d(rand_series(rng, c2, 3, 4))
        assert standard_form(eta, "closed_form") == standard_form(eta, "jet")


def test_equivalence_random_2d():
    rng = random.Random(64)
    c2 = VarContext.saddle(2, 10, 2)
    for _ in range(100):
        eta = rand_form(rng, c2, 4, 6, 2)
        obs = vanishing_obstructions(eta)
        try:
            sf = standard_form(eta)
            assert not obs
            assert sf.recombine() == eta.recontext(sf.a.ctx)
        except Obstructed:
            assert obs
