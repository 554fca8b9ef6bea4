"""Codimension of the singular set of ``alpha = omega ^ d(xy)`` at the origin.

Classification is per generic value of ``t``: factors of the coefficient gcd
that depend on ``t`` alone are stripped (they only cut out finitely many
parameter values) and the remaining factor decides.  A remaining factor that
vanishes at the origin for every ``t`` gives a codimension-one component.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import AllZeroInput
from .forms import OneForm, TwoForm, df_saddle, wedge11
from .gcd import parameter_content, poly_gcd
from .series import TruncatedSeries, spatial_degree


class CodimClass(str, Enum):
    IDENTICALLY_ZERO = "identically_zero"
    CODIM_ONE = "codim_one"
    CODIM_AT_LEAST_TWO = "codim_at_least_two"
    INCONCLUSIVE = "inconclusive"


@dataclass
class CodimReport:
    cls: CodimClass
    witness: TruncatedSeries | None = None
    stripped_t_power: int = 0
    jet_only: bool = False
    reason: str = ""

    def to_json(self):
        out = {"class": self.cls.value,
               "witness": None if self.witness is None else str(self.witness),
               "stripped_t_power": self.stripped_t_power}
        if self.jet_only:
            out["jet_only"] = True
        if self.reason:
            out["reason"] = self.reason
        return out


def wedge_with_df(omega: OneForm) -> TwoForm:
    """``alpha = omega ^ d(xy)``."""
    return wedge11(omega, df_saddle(omega.ctx))


def classify_codim(alpha: TwoForm, allow_jet: bool = False) -> CodimReport:
    """Classify the singular set of ``alpha`` through the origin.

    Truncated coefficients give ``INCONCLUSIVE`` unless ``allow_jet`` is set;
    then the stored jet is classified as a polynomial and the report is
    flagged ``jet_only``.
    """
    coeffs = [c for c in alpha.coeffs.values()]
    jet_only = not all(c.exact for c in coeffs)
    if jet_only and not allow_jet:
        return CodimReport(CodimClass.INCONCLUSIVE,
                           reason="coefficients are truncated series, not polynomials")
    polys = [TruncatedSeries(c.ctx, c.terms) for c in coeffs if not c.is_zero()]
    if not polys:
        return CodimReport(CodimClass.IDENTICALLY_ZERO, jet_only=jet_only)
    try:
        g = poly_gcd(polys)
    except AllZeroInput:
        return CodimReport(CodimClass.IDENTICALLY_ZERO, jet_only=jet_only)
    content, g1 = parameter_content(g)
    tpow = min(idx[-1] for idx in content.terms)
    if all(spatial_degree(idx) == 0 for idx in g1.terms):
        return CodimReport(CodimClass.CODIM_AT_LEAST_TWO, None, tpow, jet_only)
    at_origin = [idx for idx in g1.terms if spatial_degree(idx) == 0]
    if at_origin:
        return CodimReport(CodimClass.CODIM_AT_LEAST_TWO, None, tpow, jet_only,
                           reason=f"common factor {g1} is a unit at the origin")
    return CodimReport(CodimClass.CODIM_ONE, g1, tpow, jet_only)
