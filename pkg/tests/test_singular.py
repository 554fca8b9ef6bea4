import pytest

from saddle_deform.forms import TwoForm, df_saddle
from saddle_deform.integral import verify_first_integral
from saddle_deform.parser import parse_form, parse_scalar
from saddle_deform.series import VarContext
from saddle_deform.singular import CodimClass, classify_codim, wedge_with_df


@pytest.fixture
def c3():
    return VarContext.saddle(3, 10, 4)


def test_wedge_with_df_examples(c3):
    assert wedge_with_df(df_saddle(c3)).is_zero()
    a0 = wedge_with_df(parse_form("d(x*y) + t*(x*y)^2*dx", c3))
    assert str(a0) == "t*x^3*y^2*dx∧dy"
    a1 = wedge_with_df(parse_form("exp(t*y)*d(x*y) + t*x*y*dx", VarContext.saddle(2, 8, 4)))
    assert str(a1.coefficient((0, 1))) == "t*x^2*y"


def test_classify_examples(c3):
    rep = classify_codim(wedge_with_df(parse_form("d(x*y) + t*(x*y)^2*dx", c3)))
    assert rep.cls is CodimClass.CODIM_ONE
    assert str(rep.witness) == "x^3*y^2" and rep.stripped_t_power == 1
    assert rep.to_json() == {"class": "codim_one", "witness": "x^3*y^2", "stripped_t_power": 1}
    assert classify_codim(TwoForm.zero(c3)).cls is CodimClass.IDENTICALLY_ZERO
    alpha = wedge_with_df(parse_form("d(x*y) + t*d(z1*x + y)", c3))
    assert {k: str(v) for k, v in alpha.coeffs.items()} == {
        (0, 1): "-t*y + t*x*z1", (0, 2): "-t*x*y", (1, 2): "-t*x^2"}
    assert classify_codim(alpha).cls is CodimClass.CODIM_AT_LEAST_TWO


def test_truncated_input_is_inconclusive():
    c2 = VarContext.saddle(2, 8, 4)
    alpha = wedge_with_df(parse_form("exp(t*y)*d(x*y) + t*x*y*dx", c2))
    assert classify_codim(alpha).cls is CodimClass.INCONCLUSIVE
    rep = classify_codim(alpha, allow_jet=True)
    assert rep.cls is CodimClass.CODIM_ONE and rep.jet_only and str(rep.witness) == "x^2*y"


def test_unit_factor_does_not_change_class(c3):
    for text in ("d(x*y) + t*(x*y)^2*dx", "d(x*y) + t*d(z1*x + y)"):
        alpha = wedge_with_df(parse_form(text, c3))
        rep = classify_codim(alpha)
        scaled = classify_codim(alpha * parse_scalar("1 + x", c3))
        assert scaled.cls is rep.cls
        if rep.witness is not None:
            # the witness is a factor defined up to a unit
            assert scaled.witness == rep.witness * parse_scalar("1 + x", c3)


def test_multiplying_by_x_gives_codim_one(c3):
    alpha = wedge_with_df(parse_form("d(x*y) + t*d(z1*x + y)", c3))
    rep = classify_codim(alpha * parse_scalar("x", c3))
    assert rep.cls is CodimClass.CODIM_ONE and str(rep.witness) == "x"


def test_parameter_only_factor_is_stripped(c3):
    alpha = wedge_with_df(parse_form("d(x*y) + (t + t^2)*d(z1*x + y)", c3))
    rep = classify_codim(alpha)
    assert rep.cls is CodimClass.CODIM_AT_LEAST_TWO and rep.stripped_t_power == 1


def test_factor_unit_for_generic_t(c3):
    # common factor x + t vanishes at the origin only when t = 0
    alpha = wedge_with_df(parse_form("d(x*y) + t*(x + t)*(y*dx + dz1)", c3))
    rep = classify_codim(alpha)
    assert rep.cls is CodimClass.CODIM_AT_LEAST_TWO


def test_identically_zero_iff_xy_first_integral(c3):
    for text in ("(1 + t*x*y)*d(x*y)", "d(x*y) + t*d(z1*x + y)", "(1 + t*z1)*d(x*y)"):
        om = parse_form(text, c3)
        zero = classify_codim(wedge_with_df(om)).cls is CodimClass.IDENTICALLY_ZERO
        assert zero == verify_first_integral(parse_scalar("x*y", c3), om).passed
