"""Differential forms of degree 1..3 with truncated-series coefficients.

Sign convention: basis covectors are ordered by the context's spatial variable
order, ``dx < dy < dz1 < ...``.  A k-form stores only strictly increasing
index tuples; every wedge product sorts its merged index tuple and picks up
the sign of that permutation.  This module is the only place signs are decided.

The exterior derivative acts on spatial variables only: ``t`` is a parameter
and no ``dt`` component is ever produced.
"""
from __future__ import annotations

from typing import Mapping

from .errors import ContextMismatch
from .exact import GaussianRational
from .series import TruncatedSeries, VarContext, coeff_times, monomial_str

WEDGE = "∧"


def _sort_sign(idx):
    """Sorted tuple and permutation sign; sign 0 if an index repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return None, 0
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return tuple(idx), sign


class Form:
    """A k-form: ``{increasing index tuple: TruncatedSeries}``."""

    degree = None

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: VarContext, coeffs: Mapping = None):
        self.ctx = ctx
        clean = {}
        for key, c in (coeffs or {}).items():
            key = self._normalize_key(key)
            skey, sign = _sort_sign(key)
            if sign == 0:
                continue
            if not isinstance(c, TruncatedSeries):
                c = TruncatedSeries.const(ctx, c)
            if c.ctx != ctx:
                raise ContextMismatch("form coefficient lives in another context")
            c = c if sign == 1 else -c
            clean[skey] = clean[skey] + c if skey in clean else c
        self.coeffs = {k: v for k, v in clean.items() if not (v.is_zero() and v.exact)}

    def _normalize_key(self, key):
        if isinstance(key, (int, str)):
            key = (key,)
        out = []
        for k in key:
            if isinstance(k, str):
                name = k[1:] if k.startswith("d") and k[1:] in self.ctx.names else k
                k = self.ctx.names.index(name) if name in self.ctx.names else None
                if k is None:
                    raise KeyError(f"unknown basis covector {key}")
            out.append(k)
        if len(out) != self.degree:
            raise ValueError(f"basis element {key} has the wrong degree for a {self.degree}-form")
        if any(not 0 <= k < self.ctx.n for k in out):
            raise KeyError(f"basis index out of range: {key}")
        return tuple(out)

    @classmethod
    def _new(cls, ctx, coeffs):
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.coeffs = {k: v for k, v in coeffs.items() if not (v.is_zero() and v.exact)}
        return obj

    @classmethod
    def zero(cls, ctx):
        return cls._new(ctx, {})

    def coefficient(self, key) -> TruncatedSeries:
        skey, sign = _sort_sign(self._normalize_key(key))
        c = self.coeffs.get(skey)
        if c is None:
            return TruncatedSeries.zero(self.ctx)
        return c if sign == 1 else -c

    __getitem__ = coefficient

    @property
    def exact(self) -> bool:
        return all(c.exact for c in self.coeffs.values())

    def is_zero(self) -> bool:
        """Zero inside the known truncation box of every coefficient."""
        return all(c.is_zero() for c in self.coeffs.values())

    def _check(self, other):
        if not isinstance(other, Form) or other.degree != self.degree:
            raise TypeError("forms of different degree")
        if other.ctx != self.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return type(self)._new(self.ctx, out)

    def __neg__(self):
        return type(self)._new(self.ctx, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, Form):
            return NotImplemented
        if isinstance(scalar, TruncatedSeries):
            if scalar.ctx != self.ctx:
                raise ContextMismatch("scalar lives in another context")
            return type(self)._new(self.ctx, {k: scalar * v for k, v in self.coeffs.items()})
        c = GaussianRational.coerce(scalar)
        return type(self)._new(self.ctx, {k: v.scale(c) for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Form) or other.degree != self.degree:
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.ctx, frozenset(self.coeffs.items())))

    def agrees(self, other) -> bool:
        """Equality modulo the truncation boxes of the coefficients."""
        return (self - other).is_zero()

    def map(self, fn, ctx: VarContext | None = None):
        ctx = ctx or self.ctx
        return type(self)._new(ctx, {k: fn(v) for k, v in self.coeffs.items()})

    def t_coefficient(self, j: int):
        """The form ``omega_j`` multiplying ``t^j``."""
        return self.map(lambda c: c.t_coefficient(j))

    def truncate(self, D=None, J=None):
        return self.map(lambda c: c.truncate(D, J))

    def recontext(self, ctx: VarContext):
        return self.map(lambda c: c.recontext(ctx), ctx)

    def valid_box(self):
        boxes = [c.valid_box for c in self.coeffs.values()] or [(self.ctx.D, self.ctx.J)]
        return (min(b[0] for b in boxes), min(b[1] for b in boxes))

    def basis_label(self, key) -> str:
        return WEDGE.join("d" + self.ctx.names[k] for k in key)

    def items(self):
        return sorted(self.coeffs.items())

    def __str__(self):
        pieces = []
        for key, c in self.items():
            if c.is_zero():
                continue
            basis = self.basis_label(key)
            if len(c.terms) == 1:
                (idx, v), = c.terms.items()
                neg, body = coeff_times(v, monomial_str(self.ctx, idx))
                body = basis if body == "1" else f"{body}*{basis}"
            else:
                neg, body = False, f"({c})*{basis}"
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces) if pieces else "0"

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class OneForm(Form):
    """``A dx + B dy + sum C_i dz_i``."""

    degree = 1
    __slots__ = ()

    @classmethod
    def from_components(cls, ctx, comps):
        return cls(ctx, {k: v for k, v in enumerate(comps)})

    def component(self, k: int) -> TruncatedSeries:
        return self.coeffs.get((k,), TruncatedSeries.zero(self.ctx))


class TwoForm(Form):
    degree = 2
    __slots__ = ()


class ThreeForm(Form):
    degree = 3
    __slots__ = ()


_BY_DEGREE = {1: OneForm, 2: TwoForm, 3: ThreeForm}


def wedge(a, b):
    """Wedge product of forms (or a scalar series times a form)."""
    if isinstance(a, TruncatedSeries):
        return b * a
    if isinstance(b, TruncatedSeries):
        return a * b
    if a.ctx != b.ctx:
        raise ContextMismatch(f"{a.ctx} vs {b.ctx}")
    k = a.degree + b.degree
    if k > 3:
        raise ValueError("forms of degree >= 4 are not supported")
    if k > a.ctx.n:
        return _BY_DEGREE[k].zero(a.ctx)
    out = {}
    for ka, ca in a.coeffs.items():
        for kb, cb in b.coeffs.items():
            key, sign = _sort_sign(ka + kb)
            if sign == 0:
                continue
            p = ca * cb
            if sign < 0:
                p = -p
            out[key] = out[key] + p if key in out else p
    return _BY_DEGREE[k]._new(a.ctx, out)


def wedge11(eta: OneForm, xi: OneForm) -> TwoForm:
    return wedge(eta, xi)


def wedge12(eta: OneForm, beta: TwoForm) -> ThreeForm:
    return wedge(eta, beta)


def ext_d(obj):
    """Spatial exterior derivative of a scalar series or a 1- or 2-form."""
    if isinstance(obj, TruncatedSeries):
        ctx = obj.ctx
        return OneForm._new(ctx, {(i,): obj.diff(i) for i in range(ctx.n)})
    ctx = obj.ctx
    k = obj.degree + 1
    if k > 3:
        raise ValueError("forms of degree >= 4 are not supported")
    out = {}
    for key, c in obj.coeffs.items():
        for i in range(ctx.n):
            skey, sign = _sort_sign((i,) + key)
            if sign == 0:
                continue
            p = c.diff(i)
            if sign < 0:
                p = -p
            out[skey] = out[skey] + p if skey in out else p
    if k > ctx.n:
        return _BY_DEGREE[k]._new(ctx, {})
    return _BY_DEGREE[k]._new(ctx, out)


def df_saddle(ctx: VarContext) -> OneForm:
    """``d(x0 * x1)`` for the first two spatial variables (``d(xy)``, ``d(zw)``)."""
    a = TruncatedSeries.var(ctx, ctx.names[0])
    b = TruncatedSeries.var(ctx, ctx.names[1])
    return ext_d(a * b)
