"""Deformations of the real center ``d(x^2 + y^2)`` via complexification.

With ``z = x + iy`` and ``w = x - iy`` the center becomes the saddle ``zw``.
The circle ``x^2 + y^2 = r^2`` run counterclockwise is the cycle of the
fiber ``zw = r^2`` with anchor ``z0 = r``, also counterclockwise in ``z``, so

    integral over the circle = 2 pi i * I(r^2)

where ``I`` is the normalized cycle integral of the complexified form.
Extra variables ``u1, u2, ...`` pass through unchanged.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cycle import vanishing_obstructions
from .errors import ContextMismatch, NotReal
from .exact import I, GaussianRational
from .forms import OneForm
from .series import TruncatedSeries, VarContext

HALF = GaussianRational(1) / 2
HALF_OVER_I = GaussianRational(1) / (2 * I)


def center_context(n: int = 2, D: int = 10, J: int = 4) -> VarContext:
    """Real coordinates ``(x, y, u1, ..., u_{n-2})``."""
    return VarContext(("x", "y") + tuple(f"u{k}" for k in range(1, n - 1)), D, J)


def complex_context(ctx: VarContext) -> VarContext:
    return VarContext(("z", "w") + tuple(ctx.names[2:]), ctx.D, ctx.J, ctx.t)


def real_context(ctx: VarContext) -> VarContext:
    return VarContext(("x", "y") + tuple(ctx.names[2:]), ctx.D, ctx.J, ctx.t)


@dataclass(frozen=True)
class RealCircle:
    r: float
    ustar: tuple = ()
    t: float = 0.0

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError("circle radius must be positive")


def _check_real_ctx(ctx):
    if ctx.names[:2] != ("x", "y"):
        raise ContextMismatch(f"expected real coordinates (x, y, ...), got {ctx.names}")


def complexify(obj):
    """Substitute ``x = (z+w)/2``, ``y = (z-w)/(2i)`` in a scalar or one-form."""
    ctx = obj.ctx
    _check_real_ctx(ctx)
    cctx = complex_context(ctx)
    z = TruncatedSeries.var(cctx, "z")
    w = TruncatedSeries.var(cctx, "w")
    images = {"x": (z + w).scale(HALF), "y": (z - w).scale(HALF_OVER_I)}

    def sub(s):
        return s.subst(images, cctx)

    if isinstance(obj, TruncatedSeries):
        return sub(obj)
    P, Q = sub(obj.component(0)), sub(obj.component(1))
    comps = {0: P.scale(HALF) + Q.scale(HALF_OVER_I), 1: P.scale(HALF) - Q.scale(HALF_OVER_I)}
    for k in range(2, ctx.n):
        comps[k] = sub(obj.component(k))
    return OneForm._new(cctx, {(k,): v for k, v in comps.items()})


def decomplexify(obj):
    """Substitute ``z = x + iy``, ``w = x - iy``; raises :class:`NotReal`."""
    ctx = obj.ctx
    if ctx.names[:2] != ("z", "w"):
        raise ContextMismatch(f"expected complex coordinates (z, w, ...), got {ctx.names}")
    rctx = real_context(ctx)
    x = TruncatedSeries.var(rctx, "x")
    y = TruncatedSeries.var(rctx, "y")
    iy = y.scale(I)
    images = {"z": x + iy, "w": x - iy}

    def sub(s):
        return s.subst(images, rctx)

    if isinstance(obj, TruncatedSeries):
        out = sub(obj)
        _require_real(out, "scalar")
        return out
    P, Q = sub(obj.component(0)), sub(obj.component(1))
    comps = {0: P + Q, 1: (P - Q).scale(I)}
    for k in range(2, ctx.n):
        comps[k] = sub(obj.component(k))
    for k, c in comps.items():
        _require_real(c, f"d{rctx.names[k]} coefficient")
    return OneForm._new(rctx, {(k,): v for k, v in comps.items()})


def _require_real(s, what):
    bad = [c for c in s.terms.values() if not c.is_real()]
    if bad:
        raise NotReal(f"{what} has a non-real coefficient: {s}")


def is_real_form(omega: OneForm) -> bool:
    return all(c.is_real() for s in omega.coeffs.values() for c in s.terms.values())


def reality_conjugate(obj):
    """Swap ``z <-> w`` (and ``dz <-> dw``) and conjugate every coefficient."""
    swap = {"z": "w", "w": "z"}
    if isinstance(obj, TruncatedSeries):
        return obj.permute_variables(swap).conjugate()
    comps = {}
    for key, c in obj.coeffs.items():
        k = key[0]
        k = {0: 1, 1: 0}.get(k, k)
        comps[(k,)] = c.permute_variables(swap).conjugate()
    return OneForm._new(obj.ctx, comps)


def is_reality_symmetric(obj) -> bool:
    return reality_conjugate(obj) == obj


def circle_obstructions(omega: OneForm) -> list:
    return vanishing_obstructions(complexify(omega))


def circle_integral_numeric(omega: OneForm, circle: RealCircle, samples: int = 256) -> float:
    """Trapezoidal rule on ``(r cos theta, r sin theta)``, counterclockwise."""
    if samples < 16:
        raise ValueError("need at least 16 samples")
    ctx = omega.ctx
    _check_real_ctx(ctx)
    theta = 2 * np.pi * np.arange(samples) / samples
    r = float(circle.r)
    x = r * np.cos(theta) + 0j
    y = r * np.sin(theta) + 0j
    point = {"x": x, "y": y, ctx.t: complex(circle.t)}
    ustar = tuple(circle.ustar) + (0.0,) * (ctx.n - 2 - len(circle.ustar))
    for name, v in zip(ctx.names[2:], ustar):
        point[name] = complex(v)
    integrand = np.zeros(samples, dtype=complex)
    P, Q = omega.component(0), omega.component(1)
    if P.terms:
        integrand = integrand + P.eval_float(point) * (-y)
    if Q.terms:
        integrand = integrand + Q.eval_float(point) * x
    integrand = np.broadcast_to(integrand, (samples,))
    return math.fsum(integrand.real) * (2 * math.pi / samples)


def center_pipeline(omega: OneForm, D: int | None = None, J: int | None = None, source=None,
                    rebuild=None):
    """Full report for a real deformation of ``d(x^2 + y^2)``."""
    from .analysis import AnalysisConfig, run_analysis

    cfg = AnalysisConfig(n=omega.ctx.n, mode="center",
                         D=omega.ctx.D if D is None else D, J=omega.ctx.J if J is None else J)
    return run_analysis(omega, cfg, source=source, rebuild=rebuild)
