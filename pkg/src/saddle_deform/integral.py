"""Truncated first integrals ``F = xy + sum_j t^j F_j`` of a deformation.

Order ``t^j`` of ``dF ^ omega = 0`` reads

    dF_j ^ d(xy) = - sum_{k<j} dF_k ^ omega_{j-k},

a linear system for the coefficients of ``F_j``.  The map
``G -> dG ^ d(xy)`` preserves spatial degree, so each order splits into
one block per degree.  Its kernel is spanned by the powers ``(xy)^k``;
those columns are left out, which fixes the gauge.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import Infeasible, PreconditionFailed
from .exact import ZERO
from .forms import OneForm, TwoForm, df_saddle, ext_d, wedge11, wedge12
from .linsolve import LinearSystem, exact_linear_solve
from .series import TruncatedSeries, monomial_str, spatial_degree


@dataclass
class FirstIntegral:
    F: TruncatedSeries
    verified_spatial_degree: int
    verified_t_order: int

    def to_json(self):
        return {"F": str(self.F), "verified_spatial_degree": self.verified_spatial_degree,
                "verified_t_order": self.verified_t_order}


@dataclass
class ResidualReport:
    passed: bool
    residual: TwoForm
    verified_spatial_degree: int
    verified_t_order: int
    lowest: dict | None = None

    def to_json(self):
        return {"passed": self.passed, "verified_spatial_degree": self.verified_spatial_degree,
                "verified_t_order": self.verified_t_order, "lowest": self.lowest}


def verify_first_integral(F: TruncatedSeries, omega: OneForm) -> ResidualReport:
    """Check ``dF ^ omega = 0`` inside the known truncation box."""
    residual = wedge11(ext_d(F), omega)
    Dv, Jv = residual.valid_box()
    best = None
    for key, c in residual.coeffs.items():
        for idx, v in c.items():
            rank = (idx[-1], spatial_degree(idx), tuple(-e for e in idx), key)
            if best is None or rank < best[0]:
                best = (rank, key, idx, v)
    if best is None:
        return ResidualReport(True, residual, Dv, Jv)
    _, key, idx, v = best
    lowest = {"t_order": idx[-1], "spatial_degree": spatial_degree(idx),
              "monomial": monomial_str(residual.ctx, idx) or "1",
              "basis": residual.basis_label(key), "value": str(v)}
    return ResidualReport(False, residual, Dv, Jv, lowest)


def _monomials(n, d):
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def _image(mono):
    """``d(m) ^ d(x0 x1)`` as ``{(basis, monomial): coefficient}``."""
    out = {}
    for i, e in enumerate(mono):
        if not e:
            continue
        base = list(mono)
        base[i] -= 1
        # d(x0 x1) = x1 dx0 + x0 dx1
        for k, other in ((0, 1), (1, 0)):
            if i == k:
                continue
            m = list(base)
            m[other] += 1
            key = (i, k) if i < k else (k, i)
            sign = 1 if i < k else -1
            m = tuple(m)
            out[(key, m)] = out.get((key, m), 0) + sign * e
    return {k: v for k, v in out.items() if v}


def _solve_order(rhs: TwoForm, n: int, dmax: int, j: int, cache: dict):
    """Coefficients of ``F_j`` from ``dF_j ^ d(xy) = rhs`` for degrees ``<= dmax``."""
    by_degree = {}
    for key, c in rhs.coeffs.items():
        for idx, v in c.items():
            by_degree.setdefault(spatial_degree(idx), {})[(key, idx[:-1])] = v
    terms = {}
    for e in range(1, dmax + 1):
        target = by_degree.get(e)
        if not target:
            continue
        cols = [m for m in _monomials(n, e)
                if not (m[0] == m[1] and not any(m[2:]))]
        rows = {}
        for ci, m in enumerate(cols):
            img = cache.get(m)
            if img is None:
                img = cache[m] = _image(m)
            for rk, v in img.items():
                rows.setdefault(rk, {})[ci] = v
        system = LinearSystem(len(cols))
        for rk in sorted(set(rows) | set(target)):
            system.add_row(rows.get(rk, {}), target.get(rk, ZERO), label=rk)
        try:
            sol = exact_linear_solve(system)
        except Infeasible as exc:
            exc.t_order = j
            raise
        for ci, m in enumerate(cols):
            if sol.values[ci]:
                terms[m + (0,)] = sol.values[ci]
    return terms


def build_first_integral(omega: OneForm, D: int | None = None, J: int | None = None) -> FirstIntegral:
    """Order-by-order first integral, verified before it is returned."""
    ctx = omega.ctx
    D = ctx.D if D is None else D
    J = ctx.J if J is None else J
    target = ctx.with_bounds(D, J)
    df = df_saddle(ctx)
    if not omega.t_coefficient(0).agrees(df):
        raise PreconditionFailed("the t^0 part of omega is not d(xy)")
    if not wedge12(omega, ext_d(omega)).is_zero():
        raise PreconditionFailed("omega is not integrable")
    if omega.exact:
        work = ctx.with_bounds(D + J + 1, J)
    else:
        work = ctx.with_bounds(min(ctx.D, omega.valid_box()[0]), min(J, omega.valid_box()[1]))
    om = omega.recontext(work)
    Jw = work.J
    parts = [om.t_coefficient(k) for k in range(Jw + 1)]
    x0 = TruncatedSeries.var(work, work.names[0])
    x1 = TruncatedSeries.var(work, work.names[1])
    Fs = [x0 * x1]
    dFs = [ext_d(Fs[0])]
    cache = {}
    total = Fs[0]
    for j in range(1, Jw + 1):
        rhs = TwoForm.zero(work)
        for k in range(j):
            rhs = rhs - wedge11(dFs[k], parts[j - k])
        Dv = rhs.valid_box()[0]
        terms = _solve_order(rhs, work.n, min(Dv, work.D), j, cache)
        Fj = TruncatedSeries(work, terms, prec=(min(Dv, work.D), work.J))
        Fs.append(Fj)
        dFs.append(ext_d(Fj))
        total = total + Fj.times_t_power(j)
    report = verify_first_integral(total, om)
    if not report.passed:
        raise AssertionError(f"first integral failed verification at {report.lowest}")
    F = total.recontext(target)
    return FirstIntegral(F, min(report.verified_spatial_degree, D),
                         min(report.verified_t_order, J))
