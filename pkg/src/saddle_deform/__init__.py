"""Exact analysis of one-parameter deformations of the saddle ``d(xy) = 0``.

The pieces, bottom up:

- ``exact``: Gaussian rationals ``Q(i)``
- ``series``: truncated power series in ``(x, y, z1, ..., t)``
- ``forms``: one-, two- and three-forms, wedge and ``d``
- ``cycle``: cycle integrals on ``xy = c``, symbolic and by quadrature
- ``decompose``: ``omega = a d(xy) + dh``
- ``singular``: codimension of the singular set of ``omega ^ d(xy)``
- ``integral``: truncated first integrals
- ``realcenter``: deformations of ``d(x^2 + y^2)`` by complexification
- ``parser``, ``analysis``, ``corpus``, ``cli``: front end
"""
from .analysis import AnalysisConfig, AnalysisReport, analyze_text, parse_input_file, run_analysis
from .corpus import corpus_check
from .cycle import (CyclePath, CyclePolynomial, Obstruction, cycle_integral_numeric,
                    cycle_integral_symbolic, vanishing_obstructions)
from .decompose import StandardForm, divide_by_df, solve_h_2d, standard_form
from .errors import *  # noqa: F401,F403
from .exact import I, ONE, ZERO, GaussianRational, gq, parse_gaussian
from .forms import OneForm, ThreeForm, TwoForm, df_saddle, ext_d, wedge, wedge11, wedge12
from .gcd import parameter_content, poly_gcd
from .integral import FirstIntegral, ResidualReport, build_first_integral, verify_first_integral
from .linsolve import LinearSystem, Solution, exact_linear_solve
from .parser import parse_expression, parse_form, parse_scalar
from .realcenter import (RealCircle, center_context, center_pipeline, circle_integral_numeric,
                         circle_obstructions, complexify, decomplexify)
from .series import TruncatedSeries, VarContext, variables
from .singular import CodimClass, CodimReport, classify_codim, wedge_with_df

__version__ = "0.1.0"
