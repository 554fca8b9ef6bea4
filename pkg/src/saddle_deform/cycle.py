"""Integrals of one-forms over the generating cycle of the fibers ``xy = c``.

The cycle is ``x = x0 e^{i theta}``, ``y = (c/x0) e^{-i theta}``, with ``z``
frozen, traversed counterclockwise in ``x``.  Along it ``x^k y^l dx`` picks up
``2 pi i c^l`` when ``l = k + 1`` and ``x^k y^l dy`` picks up ``-2 pi i c^k``
when ``k = l + 1``; every other monomial integrates to zero.  So the
normalized integral ``(1/2 pi i) * integral`` is

    I(c) = sum_m (A[m-1, m] - B[m, m-1]) c^m

per z-monomial and t-order, where ``A``, ``B`` are the dx and dy coefficients.
The quadrature routine below checks this sign convention independently.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidPath
from .exact import GaussianRational
from .forms import OneForm
from .series import TruncatedSeries, coeff_times, monomial_str


@dataclass(frozen=True)
class Obstruction:
    """A nonzero coefficient of ``c^m * z^alpha * t^j`` in the cycle integral."""

    m: int
    z: tuple
    j: int
    value: GaussianRational
    z_label: str = "1"

    def sort_key(self):
        return (self.j, self.m, sum(self.z), tuple(-e for e in self.z))

    def to_json(self):
        return {"m": self.m, "z": self.z_label, "j": self.j, "value": str(self.value)}


@dataclass
class CyclePolynomial:
    """``I(c) = sum_m coeffs[m] c^m`` with coefficients series in ``(z, t)``.

    For truncated input only ``m <= max_m`` is known; higher powers are not
    claimed to vanish.
    """

    ctx: object
    coeffs: dict = field(default_factory=dict)
    max_m: int | None = None

    @property
    def exact(self) -> bool:
        return self.max_m is None

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs.values())

    def evaluate(self, c: complex, zstar=(), t: complex = 0.0) -> complex:
        ctx = self.ctx
        point = {ctx.names[0]: 0.0, ctx.names[1]: 0.0, ctx.t: t}
        zstar = tuple(zstar) + (0.0,) * (ctx.n - 2 - len(zstar))
        for name, v in zip(ctx.names[2:], zstar):
            point[name] = v
        total = 0j
        for m in sorted(self.coeffs):
            total += self.coeffs[m].eval_float(point) * complex(c) ** m
        return total

    def to_json(self):
        powers = [{"m": m, "coeff": str(self.coeffs[m])}
                  for m in sorted(self.coeffs) if not self.coeffs[m].is_zero()]
        out = {"powers": powers}
        if self.max_m is not None:
            out["checked_up_to_m"] = self.max_m
        return out

    def __str__(self):
        parts = []
        for m in sorted(self.coeffs):
            s = self.coeffs[m]
            if s.is_zero():
                continue
            cm = "c" if m == 1 else f"c^{m}"
            if len(s.terms) == 1:
                (idx, v), = s.terms.items()
                mono = monomial_str(self.ctx, idx)
                neg, body = coeff_times(v, f"{mono}*{cm}" if mono else cm)
            else:
                neg, body = False, f"({s})*{cm}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts) if parts else "0"


def cycle_integral_symbolic(eta: OneForm) -> CyclePolynomial:
    """Normalized cycle integral ``(1/2 pi i) * integral over gamma_c``."""
    ctx = eta.ctx
    A, B = eta.component(0), eta.component(1)
    acc = {}

    def put(m, idx, c):
        key = (0, 0) + tuple(idx[2:])
        bucket = acc.setdefault(m, {})
        bucket[key] = bucket.get(key, 0) + c

    for idx, c in A.items():
        if idx[1] == idx[0] + 1:
            put(idx[1], idx, c)
    for idx, c in B.items():
        if idx[0] == idx[1] + 1:
            put(idx[0], idx, -c)

    if A.exact and B.exact:
        coeffs = {m: TruncatedSeries(ctx, terms) for m, terms in acc.items()}
        coeffs = {m: s for m, s in coeffs.items() if not s.is_zero()}
        return CyclePolynomial(ctx, coeffs, None)
    Dv = min(A.valid_box[0], B.valid_box[0])
    Jv = min(A.valid_box[1], B.valid_box[1])
    # c^m comes from degree 2m-1; z-degree budget shrinks accordingly
    max_m = (Dv + 1) // 2
    coeffs = {}
    for m in range(1, max_m + 1):
        s = TruncatedSeries(ctx, acc.get(m, {}), prec=(Dv - (2 * m - 1), Jv))
        if s.terms or m in acc:
            coeffs[m] = s
    return CyclePolynomial(ctx, {m: s for m, s in coeffs.items() if not s.is_zero()}, max_m)


def vanishing_obstructions(eta: OneForm) -> list:
    """Every nonzero graded coefficient of the cycle integral, sorted by (j, m, z)."""
    poly = eta if isinstance(eta, CyclePolynomial) else cycle_integral_symbolic(eta)
    ctx = poly.ctx
    out = []
    for m, s in poly.coeffs.items():
        for idx, v in s.items():
            z = tuple(idx[2:-1])
            label = monomial_str(ctx, (0, 0) + z + (0,)) or "1"
            out.append(Obstruction(m, z, idx[-1], v, label))
    out.sort(key=Obstruction.sort_key)
    return out


@dataclass(frozen=True)
class CyclePath:
    """``theta -> (x0 e^{i theta}, c/x0 e^{-i theta}, zstar)``, counterclockwise in x.

    ``t`` is the parameter value used when evaluating a deformation.
    """

    c: complex
    x0: complex = 1.0
    zstar: tuple = ()
    t: complex = 0.0
    orientation: int = 1

    def to_json(self):
        def cj(v):
            v = complex(v)
            return {"re": v.real, "im": v.imag}
        return {"c": cj(self.c), "x0": cj(self.x0), "z": [cj(v) for v in self.zstar],
                "t": cj(self.t)}


def cycle_integral_numeric(eta: OneForm, path: CyclePath, samples: int = 256) -> complex:
    """Trapezoidal rule on the cycle; spectrally accurate for polynomial integrands."""
    if samples < 16:
        raise ValueError("need at least 16 samples")
    c, x0 = complex(path.c), complex(path.x0)
    if x0 == 0 or c == 0:
        raise InvalidPath("cycle needs x0 != 0 and c != 0")
    ctx = eta.ctx
    theta = 2 * np.pi * np.arange(samples) / samples
    rot = np.exp(1j * theta) if path.orientation >= 0 else np.exp(-1j * theta)
    x = x0 * rot
    y = (c / x0) / rot
    point = {ctx.names[0]: x, ctx.names[1]: y, ctx.t: complex(path.t)}
    zstar = tuple(path.zstar) + (0.0,) * (ctx.n - 2 - len(path.zstar))
    for name, v in zip(ctx.names[2:], zstar):
        point[name] = complex(v)
    sign = 1.0 if path.orientation >= 0 else -1.0
    # dx/dtheta = i x, dy/dtheta = -i y; dz = 0 on the path
    integrand = np.zeros(samples, dtype=complex)
    A, B = eta.component(0), eta.component(1)
    if A.terms:
        integrand = integrand + A.eval_float(point) * (1j * sign) * x
    if B.terms:
        integrand = integrand - B.eval_float(point) * (1j * sign) * y
    integrand = np.broadcast_to(integrand, (samples,))
    w = 2 * math.pi / samples
    return complex(math.fsum(integrand.real) * w, math.fsum(integrand.imag) * w)
