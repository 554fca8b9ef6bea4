"""Random generators and independent sympy oracles shared by the tests."""
from __future__ import annotations

import random
from fractions import Fraction

import sympy as sp

from saddle_deform.exact import GaussianRational
from saddle_deform.forms import OneForm
from saddle_deform.series import TruncatedSeries, VarContext


def rand_coeff(rng: random.Random, gaussian: bool = True) -> GaussianRational:
    re = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    im = Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if gaussian and rng.random() < 0.3 else 0
    return GaussianRational(re, im)


def rand_series(rng, ctx: VarContext, nterms=4, maxdeg=3, maxj=None, gaussian=True,
                spatial=None, constant=True) -> TruncatedSeries:
    """Exact polynomial with ``nterms`` random monomials.

    ``spatial`` limits which spatial variables may appear (a count from the left).
    """
    maxj = ctx.J if maxj is None else maxj
    nsp = ctx.n if spatial is None else spatial
    terms = {}
    for _ in range(nterms):
        deg = rng.randint(0 if constant else 1, maxdeg)
        e = [0] * ctx.nvars
        for _ in range(deg):
            e[rng.randrange(nsp)] += 1
        e[-1] = rng.randint(0, maxj)
        terms[tuple(e)] = rand_coeff(rng, gaussian)
    return TruncatedSeries(ctx, terms)


def rand_form(rng, ctx, nterms=3, maxdeg=3, maxj=None, gaussian=True, spatial=None) -> OneForm:
    nsp = ctx.n if spatial is None else spatial
    return OneForm(ctx, {(k,): rand_series(rng, ctx, nterms, maxdeg, maxj, gaussian, spatial)
                         for k in range(nsp)})


def symbols(ctx: VarContext):
    return [sp.Symbol(n) for n in ctx.names + (ctx.t,)]


def to_sympy(s: TruncatedSeries):
    syms = symbols(s.ctx)
    out = sp.Integer(0)
    for idx, c in s.terms.items():
        coef = sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(
            c.im.numerator, c.im.denominator)
        mono = sp.Integer(1)
        for v, e in zip(syms, idx):
            mono *= v ** e
        out += coef * mono
    return sp.expand(out)


def from_sympy(expr, ctx: VarContext) -> TruncatedSeries:
    syms = symbols(ctx)
    poly = sp.Poly(sp.expand(expr), *syms)
    terms = {}
    for mon, c in poly.terms():
        re, im = sp.re(c), sp.im(c)
        terms[tuple(mon)] = GaussianRational(Fraction(int(re.p), int(re.q)),
                                             Fraction(int(im.p), int(im.q)))
    return TruncatedSeries(ctx, terms)


def residue_cycle_oracle(form: OneForm):
    """``(1/2 pi i) * integral over the cycle`` via a Laurent residue.

    Pull back along ``x = s``, ``y = c/s`` (z frozen): the cycle is the
    counterclockwise unit circle in ``s`` and the integral is ``2 pi i``
    times the coefficient of ``s^-1``.
    """
    ctx = form.ctx
    syms = symbols(ctx)
    x, y = syms[0], syms[1]
    s, c = sp.Symbol("s"), sp.Symbol("c")
    A = to_sympy(form.component(0)).subs({x: s, y: c / s}, simultaneous=True)
    B = to_sympy(form.component(1)).subs({x: s, y: c / s}, simultaneous=True)
    integrand = sp.expand((A - B * c / s ** 2) * s)
    # coefficient of s^-1 of the original equals s^0 coefficient after multiplying by s
    return sp.expand(integrand.subs(s, 0) if not integrand.has(s) else
                     sp.Add(*[t for t in sp.Add.make_args(integrand) if not t.has(s)]))


def cycle_poly_to_sympy(poly):
    c = sp.Symbol("c")
    return sp.expand(sum((to_sympy(s) * c ** m for m, s in poly.coeffs.items()), sp.Integer(0)))
