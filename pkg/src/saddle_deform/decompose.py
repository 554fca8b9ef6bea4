"""Standard form ``eta = a * d(xy) + dh``.

Two variables: ``h`` comes from the monomial recurrence
``x h_x - y h_y = x A - y B`` and ``a`` from reading off ``(eta - dh) / d(xy)``.
Three or more variables: an exact linear solve per t-order and spatial
degree.  In both routes the diagonal monomials ``(xy)^k`` of ``h`` and its
constant term are fixed to zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .cycle import vanishing_obstructions
from .errors import (Infeasible, IntegrabilityHypothesisFailed, NotDivisible, Obstructed,
                     TruncationInconclusive)
from .exact import ZERO
from .forms import OneForm, df_saddle, ext_d, wedge
from .linsolve import LinearSystem, exact_linear_solve
from .series import TruncatedSeries


@dataclass
class StandardForm:
    a: TruncatedSeries
    h: TruncatedSeries
    exact: bool
    residual_degree: int | None = None

    def recombine(self) -> OneForm:
        return df_saddle(self.a.ctx) * self.a + ext_d(self.h)

    def to_json(self):
        return {"a": str(self.a), "h": str(self.h), "exact": self.exact,
                "residual_degree": self.residual_degree}


def _z_free(eta: OneForm) -> bool:
    if any(k[0] >= 2 for k in eta.coeffs):
        return False
    return all(not any(idx[2:-1]) for c in eta.coeffs.values() for idx in c.terms)


def _work_context(eta: OneForm):
    """Lift D so that ``h`` of degree ``deg(eta) + 1`` fits for exact input."""
    ctx = eta.ctx
    if eta.exact:
        deg = max((c.degree() for c in eta.coeffs.values()), default=0)
        if deg + 1 > ctx.D:
            return ctx.with_bounds(D=deg + 1)
    return ctx


def solve_h_2d(eta: OneForm) -> TruncatedSeries:
    """``h`` with ``x h_x - y h_y = x A - y B`` and no diagonal monomials.

    Raises :class:`Obstructed` when a diagonal coefficient ``A[m-1,m] - B[m,m-1]``
    is nonzero.
    """
    if not _z_free(eta):
        raise ValueError("solve_h_2d needs a form in x, y only")
    obs = vanishing_obstructions(eta)
    if obs:
        raise Obstructed(obs)
    ctx = _work_context(eta)
    A, B = eta.component(0), eta.component(1)
    out = {}
    for idx, c in A.items():
        m, n = idx[0] + 1, idx[1]
        if m != n:
            key = (m, n) + idx[2:]
            out[key] = out.get(key, ZERO) + c / (m - n)
    for idx, c in B.items():
        m, n = idx[0], idx[1] + 1
        if m != n:
            key = (m, n) + idx[2:]
            out[key] = out.get(key, ZERO) - c / (m - n)
    if eta.exact:
        return TruncatedSeries(ctx, out)
    Dv, Jv = eta.valid_box()
    return TruncatedSeries(ctx, out, prec=(Dv + 1, Jv))


def divide_by_df(rho: OneForm) -> TruncatedSeries:
    """The ``a`` with ``rho = a * d(xy)``; raises :class:`NotDivisible`."""
    ctx = rho.ctx
    if any(k[0] >= 2 and not c.is_zero() for k, c in rho.coeffs.items()):
        raise NotDivisible("rho has dz components")
    At, Bt = rho.component(0), rho.component(1)
    a1, a2 = {}, {}
    for idx, c in At.items():
        if idx[1] == 0:
            raise NotDivisible(f"dx coefficient has a term free of y: {At}")
        a1[(idx[0], idx[1] - 1) + idx[2:]] = c
    for idx, c in Bt.items():
        if idx[0] == 0:
            raise NotDivisible(f"dy coefficient has a term free of x: {Bt}")
        a2[(idx[0] - 1,) + idx[1:]] = c
    if rho.exact:
        sa, sb = TruncatedSeries(ctx, a1), TruncatedSeries(ctx, a2)
    else:
        Dv, Jv = rho.valid_box()
        sa = TruncatedSeries(ctx, a1, prec=(Dv - 1, Jv))
        sb = TruncatedSeries(ctx, a2, prec=(Dv - 1, Jv))
    if not sa.agrees(sb):
        raise NotDivisible("x*A != y*B: rho is not a multiple of d(xy)")
    return sa


def _monomials(n: int, d: int):
    """Exponent tuples of total degree ``d`` in ``n`` variables, fixed order."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def _jet_solve(eta: OneForm, ctx, dmax: int):
    """Solve ``eta = a d(xy) + dh`` degree by degree up to equation degree ``dmax``."""
    n = ctx.n
    comps = [eta.component(k) for k in range(n)]
    a_terms, h_terms = {}, {}
    jmax = max((c.t_order() for c in comps), default=-1)
    for j in range(jmax + 1):
        for d in range(dmax + 1):
            a_mons = _monomials(n, d - 1) if d >= 1 else []
            h_mons = _monomials(n, d + 1)
            col_a = {m: i for i, m in enumerate(a_mons)}
            col_h = {m: len(a_mons) + i for i, m in enumerate(h_mons)}
            system = LinearSystem(len(a_mons) + len(h_mons))
            nonzero_rhs = False
            for k in range(n):
                for mu in _monomials(n, d):
                    row = {}
                    up = list(mu)
                    up[k] += 1
                    row[col_h[tuple(up)]] = mu[k] + 1
                    # a*d(xy): dx gets a*y, dy gets a*x
                    if k in (0, 1):
                        other = 1 - k
                        if mu[other] > 0:
                            down = list(mu)
                            down[other] -= 1
                            row[col_a[tuple(down)]] = 1
                    rhs = comps[k].coeff(tuple(mu) + (j,))
                    nonzero_rhs = nonzero_rhs or bool(rhs)
                    system.add_row(row, rhs, label=(k, mu))
            if not nonzero_rhs:
                continue
            try:
                sol = exact_linear_solve(system)
            except Infeasible as exc:
                exc.t_order = j
                raise
            for m, c in col_a.items():
                if sol.values[c]:
                    a_terms[m + (j,)] = sol.values[c]
            for m, c in col_h.items():
                if sol.values[c]:
                    h_terms[m + (j,)] = sol.values[c]
    return a_terms, h_terms


def standard_form(eta: OneForm, route: str = "auto") -> StandardForm:
    """Decompose ``eta`` as ``a * d(xy) + dh``.

    ``route`` is ``"auto"`` (closed form for two variables, linear solve
    otherwise), ``"closed_form"`` or ``"jet"``.
    """
    ctx0 = eta.ctx
    obs = vanishing_obstructions(eta)
    if obs:
        raise Obstructed(obs)
    df0 = df_saddle(ctx0)
    if ctx0.n >= 3:
        hyp = wedge(ext_d(eta), df0)
        if not hyp.is_zero():
            raise IntegrabilityHypothesisFailed(
                f"d(eta) ^ d(xy) does not vanish: {hyp}", witness=hyp)
    if route == "auto":
        route = "closed_form" if ctx0.n == 2 else "jet"
    ctx = _work_context(eta)
    eta_w = eta.recontext(ctx) if ctx != ctx0 else eta
    Dv, Jv = eta_w.valid_box()

    if route == "closed_form":
        if not _z_free(eta_w):
            raise ValueError("closed-form route needs a form in x, y only")
        h = solve_h_2d(eta_w)
        rho = eta_w - ext_d(h)
        try:
            a = divide_by_df(rho)
        except NotDivisible as exc:
            raise TruncationInconclusive(str(exc), Dv - 1) from exc
    elif route == "jet":
        dmax = max((c.degree() for c in eta_w.coeffs.values()), default=0) if eta_w.exact else Dv - 1
        try:
            a_terms, h_terms = _jet_solve(eta_w, ctx, dmax)
        except Infeasible as exc:
            label = exc.witness.get("label")
            deg = sum(label[1]) if label else 0
            raise TruncationInconclusive(
                f"jet system infeasible at t-order {exc.t_order}, degree {deg}", deg - 1) from exc
        if eta_w.exact:
            a = TruncatedSeries(ctx, a_terms)
            h = TruncatedSeries(ctx, h_terms)
        else:
            a = TruncatedSeries(ctx, a_terms, prec=(Dv - 2, Jv))
            h = TruncatedSeries(ctx, h_terms, prec=(Dv, Jv))
    else:
        raise ValueError(f"unknown route {route!r}")

    residual = eta_w - df_saddle(ctx) * a - ext_d(h)
    if not residual.is_zero():
        raise AssertionError(f"standard form does not recombine: residual {residual}")
    exact = eta_w.exact and a.exact and h.exact
    residual_degree = None if exact else residual.valid_box()[0]
    return StandardForm(a, h, exact, residual_degree)


def diagonal_free(h: TruncatedSeries) -> bool:
    """True when ``h`` has no ``(xy)^k`` monomial (any t-order, no z)."""
    return not any(idx[0] == idx[1] and not any(idx[2:-1]) for idx in h.terms)

