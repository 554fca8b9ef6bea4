import cmath
import random

import pytest

from helpers import cycle_poly_to_sympy, rand_form, rand_series, residue_cycle_oracle
from saddle_deform.cycle import (CyclePath, cycle_integral_numeric, cycle_integral_symbolic,
                                 vanishing_obstructions)
from saddle_deform.errors import InvalidPath
from saddle_deform.forms import df_saddle, ext_d
from saddle_deform.parser import parse_form
from saddle_deform.series import VarContext

EX3 = "(1 + t*x*y)*d(x*y) - t*x*y^2*dx + t*z1*dz1"


@pytest.fixture
def c3():
    return VarContext.saddle(3, 10, 4)


def test_symbolic_examples(c3):
    assert cycle_integral_symbolic(df_saddle(c3)).is_zero()
    assert cycle_integral_symbolic(parse_form("y*dx", c3)).to_json() == {
        "powers": [{"m": 1, "coeff": "1"}]}
    ex3 = cycle_integral_symbolic(parse_form(EX3, c3))
    assert ex3.to_json() == {"powers": [{"m": 2, "coeff": "-t"}]}
    assert str(ex3) == "-t*c^2"
    assert cycle_integral_symbolic(parse_form("d(x*y) + t*(x*y)^2*dx", c3)).is_zero()


def test_lambda_independence(c3):
    for lam in ("0", "1", "2/3", "-5"):
        om = parse_form(f"(1 + t*({lam})*x*y)*d(x*y) - t*x*y^2*dx", c3)
        assert str(cycle_integral_symbolic(om)) == "-t*c^2"


def test_obstruction_examples(c3):
    obs = vanishing_obstructions(parse_form("y*dx", c3))
    assert [(o.m, o.j, o.value) for o in obs] == [(1, 0, 1)]
    obs = vanishing_obstructions(parse_form(EX3, c3))
    assert [(o.m, o.j, o.value, o.z_label) for o in obs] == [(2, 1, -1, "1")]
    assert obs[0].to_json() == {"m": 2, "z": "1", "j": 1, "value": "-1"}


def test_obstruction_order_and_z_dependence(c3):
    om = parse_form("z1*y*dx + t*x*y^2*dx + t^2*z1^2*x^2*y^3*dx + 3*y*dx", c3)
    obs = vanishing_obstructions(om)
    assert [(o.j, o.m, o.z_label) for o in obs] == [(0, 1, "1"), (0, 1, "z1"), (1, 2, "1"),
                                                    (2, 3, "z1^2")]


def test_numeric_examples(c3):
    q = cycle_integral_numeric(parse_form("y*dx", c3), CyclePath(0.25), 256)
    assert abs(q - 1.5707963267948966j) < 1e-12
    q = cycle_integral_numeric(df_saddle(c3), CyclePath(0.3 + 0.2j, 0.5 - 1j), 256)
    assert abs(q) < 1e-12
    q = cycle_integral_numeric(parse_form(EX3, c3), CyclePath(0.2, 1, (0.0,), 0.5), 256)
    assert abs(q - 2j * cmath.pi * (-0.5 * 0.04)) < 1e-10


def test_invalid_path(c3):
    with pytest.raises(InvalidPath):
        cycle_integral_numeric(df_saddle(c3), CyclePath(0.0))
    with pytest.raises(InvalidPath):
        cycle_integral_numeric(df_saddle(c3), CyclePath(0.1, 0))


def test_matches_residue_oracle():
    rng = random.Random(51)
    c3 = VarContext.saddle(3, 12, 3)
    for _ in range(40):
        om = rand_form(rng, c3, 5, 5, 2)
        assert cycle_poly_to_sympy(cycle_integral_symbolic(om)) == residue_cycle_oracle(om)


def test_linearity_and_exact_forms():
    rng = random.Random(52)
    c3 = VarContext.saddle(3, 10, 3)
    for _ in range(200):
        h = rand_series(rng, c3, 5, 6)
        assert cycle_integral_symbolic(ext_d(h)).is_zero()
        a = rand_series(rng, c3, 4, 5)
        assert cycle_integral_symbolic(df_saddle(c3) * a).is_zero()
    for _ in range(50):
        e, f = rand_form(rng, c3, 4, 4), rand_form(rng, c3, 4, 4)
        lhs = cycle_poly_to_sympy(cycle_integral_symbolic(e + f))
        rhs = cycle_poly_to_sympy(cycle_integral_symbolic(e)) + cycle_poly_to_sympy(
            cycle_integral_symbolic(f))
        assert lhs == rhs.expand()


def test_truncated_input_reports_checked_range():
    c2 = VarContext.saddle(2, 7, 3)
    om = parse_form("exp(t*y)*d(x*y) + t*x*y*dx", c2)
    poly = cycle_integral_symbolic(om)
    assert not poly.exact and poly.max_m == 4 and poly.is_zero()
    assert poly.to_json() == {"powers": [], "checked_up_to_m": 4}


def test_quadrature_agrees_with_symbolic():
    rng = random.Random(53)
    c3 = VarContext.saddle(3, 10, 3)
    for _ in range(20):
        om = rand_form(rng, c3, 4, 5, 2)
        poly = cycle_integral_symbolic(om)
        for _ in range(3):
            c = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
            x0 = complex(rng.uniform(0.4, 1.2), rng.uniform(-0.4, 0.4))
            z = (complex(rng.uniform(-0.5, 0.5), 0),)
            t = rng.uniform(-0.8, 0.8)
            q = cycle_integral_numeric(om, CyclePath(c, x0, z, t), 256)
            assert abs(q - 2j * cmath.pi * poly.evaluate(c, z, t)) < 1e-9
