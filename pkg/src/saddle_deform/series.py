"""Truncated multivariate power series over Q(i).

A series lives in a :class:`VarContext`: spatial variables ``(x, y, z1, ...)``
plus the deformation parameter ``t``.  Every stored monomial has spatial
degree ``<= D`` and t-order ``<= J``.

Truncation bookkeeping
----------------------
A series is either *exact* (``prec is None``: the stored terms are the whole
object, a genuine polynomial) or carries ``prec = (Dv, Jv)``: its stored terms
are the correct coefficients for every monomial of spatial degree ``<= Dv``
and t-order ``<= Jv`` and nothing is claimed outside that box.  Products use
the valuations of the known parts to keep the box as large as is provably
correct; derivatives shrink it by one in the differentiated direction.
Terms outside the box are never stored.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Mapping

from .errors import (ContextMismatch, MissingAssignment, NonlinearSubstitutionUnsupported,
                     NonzeroConstantTerm, UnknownVariable)
from .exact import ONE, ZERO, GaussianRational

import numpy as np

INF = float("inf")


@dataclass(frozen=True)
class VarContext:
    """Variable names and truncation bounds shared by a family of series."""

    names: tuple
    D: int = 10
    J: int = 4
    t: str = "t"

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) < 2:
            raise ValueError("need at least two spatial variables")
        if self.D < 1 or self.J < 0:
            raise ValueError("require D >= 1 and J >= 0")
        allnames = self.names + (self.t,)
        if len(set(allnames)) != len(allnames):
            raise ValueError(f"variable names must be distinct: {allnames}")

    @classmethod
    def saddle(cls, n: int = 2, D: int = 10, J: int = 4) -> "VarContext":
        """Coordinates ``(x, y, z1, ..., z_{n-2})``."""
        return cls(("x", "y") + tuple(f"z{k}" for k in range(1, n - 1)), D, J)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def nvars(self) -> int:
        return len(self.names) + 1

    def index_of(self, name: str) -> int:
        if name == self.t:
            return len(self.names)
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(f"unknown variable {name!r}; context has {self.names + (self.t,)}") from None

    def with_bounds(self, D: int | None = None, J: int | None = None) -> "VarContext":
        return VarContext(self.names, self.D if D is None else D, self.J if J is None else J, self.t)

    def same_variables(self, other: "VarContext") -> bool:
        return self.names == other.names and self.t == other.t


def spatial_degree(idx: tuple) -> int:
    return sum(idx) - idx[-1]


def _in_box(idx, D, J) -> bool:
    return idx[-1] <= J and sum(idx) - idx[-1] <= D


def _min_prec(p, q):
    if p is None:
        return q
    if q is None:
        return p
    return (min(p[0], q[0]), min(p[1], q[1]))


class TruncatedSeries:
    """Sparse truncated series; immutable by convention."""

    __slots__ = ("ctx", "terms", "prec")

    def __init__(self, ctx: VarContext, terms: Mapping | Iterable = (), prec=None):
        if isinstance(terms, Mapping):
            terms = terms.items()
        if prec is not None:
            prec = (min(prec[0], ctx.D), min(prec[1], ctx.J))
        D, J = (ctx.D, ctx.J) if prec is None else prec
        clean = {}
        dropped = False
        nv = ctx.nvars
        for idx, c in terms:
            idx = tuple(idx)
            if len(idx) != nv or any(e < 0 for e in idx):
                raise ValueError(f"bad multi-index {idx} for {nv} variables")
            c = GaussianRational.coerce(c)
            if not c:
                continue
            if not _in_box(idx, D, J):
                dropped = True
                continue
            clean[idx] = clean.get(idx, ZERO) + c
            if not clean[idx]:
                del clean[idx]
        if dropped and prec is None:
            prec = (ctx.D, ctx.J)
        self.ctx = ctx
        self.terms = clean
        self.prec = prec

    @classmethod
    def _make(cls, ctx, terms, prec):
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.terms = terms
        obj.prec = prec
        return obj

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, ctx: VarContext) -> "TruncatedSeries":
        return cls._make(ctx, {}, None)

    @classmethod
    def const(cls, ctx: VarContext, c) -> "TruncatedSeries":
        return cls(ctx, {(0,) * ctx.nvars: c})

    @classmethod
    def var(cls, ctx: VarContext, name: str) -> "TruncatedSeries":
        idx = [0] * ctx.nvars
        idx[ctx.index_of(name)] = 1
        return cls(ctx, {tuple(idx): ONE})

    @classmethod
    def monomial(cls, ctx: VarContext, exps: Mapping[str, int], c=ONE) -> "TruncatedSeries":
        idx = [0] * ctx.nvars
        for name, e in exps.items():
            idx[ctx.index_of(name)] += e
        return cls(ctx, {tuple(idx): c})

    # -- basic properties --------------------------------------------------
    @property
    def exact(self) -> bool:
        """True when this is a genuine polynomial, not a truncation."""
        return self.prec is None

    exact_flag = exact

    @property
    def valid_box(self) -> tuple:
        """``(Dv, Jv)`` box where the coefficients are known (ctx bounds if exact)."""
        return (self.ctx.D, self.ctx.J) if self.prec is None else self.prec

    def is_zero(self) -> bool:
        """No nonzero coefficient inside the known box."""
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def coeff(self, idx) -> GaussianRational:
        return self.terms.get(tuple(idx), ZERO)

    def degree(self) -> int:
        """Maximal spatial degree of a stored term (-1 for zero)."""
        return max((spatial_degree(i) for i in self.terms), default=-1)

    def t_order(self) -> int:
        return max((i[-1] for i in self.terms), default=-1)

    def valuation(self) -> tuple:
        """Minimal spatial degree and minimal t-order among stored terms."""
        if not self.terms:
            return (INF, INF)
        return (min(spatial_degree(i) for i in self.terms), min(i[-1] for i in self.terms))

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0,) * self.ctx.nvars, ZERO)

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            try:
                other = TruncatedSeries.const(self.ctx, other)
            except TypeError:
                return NotImplemented
        self._check(other)
        prec = _min_prec(self.prec, other.prec)
        terms = dict(self.terms)
        for idx, c in other.terms.items():
            s = terms.get(idx)
            if s is None:
                terms[idx] = c
            else:
                s = s + c
                if s:
                    terms[idx] = s
                else:
                    del terms[idx]
        if prec is not None:
            terms = {i: c for i, c in terms.items() if _in_box(i, *prec)}
        return TruncatedSeries._make(self.ctx, terms, prec)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._make(self.ctx, {i: -c for i, c in self.terms.items()}, self.prec)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            try:
                other = TruncatedSeries.const(self.ctx, other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TruncatedSeries":
        c = GaussianRational.coerce(c)
        if not c:
            return TruncatedSeries._make(self.ctx, {}, self.prec)
        return TruncatedSeries._make(self.ctx, {i: c * v for i, v in self.terms.items()}, self.prec)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        ctx = self.ctx
        a, b = self, other
        if a.exact and b.exact:
            if not a.terms or not b.terms:
                return TruncatedSeries.zero(ctx)
            prec = None
        else:
            va, vb = a.valuation(), b.valuation()
            cands = []
            if not a.exact:
                cands.append((a.prec[0] + vb[0], a.prec[1] + vb[1]))
            if not b.exact:
                cands.append((b.prec[0] + va[0], b.prec[1] + va[1]))
            if not a.exact and not b.exact:
                pa, pb = a.prec, b.prec
                cands.append(pb if (pb[0] >= pa[0] and pb[1] >= pa[1]) else pa)
            Dv = min([ctx.D] + [c[0] for c in cands])
            Jv = min([ctx.J] + [c[1] for c in cands])
            prec = (int(Dv), int(Jv))
        D, J = (ctx.D, ctx.J) if prec is None else prec
        bl = [(i, spatial_degree(i), i[-1], c) for i, c in b.terms.items()]
        out = {}
        overflow = {} if prec is None else None
        for ia, ca in a.terms.items():
            da, ja = spatial_degree(ia), ia[-1]
            for ib, db, jb, cb in bl:
                idx = tuple(p + q for p, q in zip(ia, ib))
                if da + db > D or ja + jb > J:
                    if overflow is not None:
                        overflow[idx] = overflow.get(idx, ZERO) + ca * cb
                    continue
                s = out.get(idx)
                out[idx] = ca * cb if s is None else s + ca * cb
        out = {i: c for i, c in out.items() if c}
        if overflow and any(overflow.values()):
            prec = (ctx.D, ctx.J)
        return TruncatedSeries._make(ctx, out, prec)

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = TruncatedSeries.const(self.ctx, ONE)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ctx == other.ctx and self.prec == other.prec and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, self.prec, frozenset(self.terms.items())))

    def agrees(self, other: "TruncatedSeries") -> bool:
        """Equality inside the common known box (exact equality if both exact)."""
        self._check(other)
        diff = self - other
        return diff.is_zero()

    # -- calculus and substitution ----------------------------------------
    def diff(self, var) -> "TruncatedSeries":
        """Formal partial derivative in a spatial variable or in t."""
        k = var if isinstance(var, int) else self.ctx.index_of(var)
        if not 0 <= k < self.ctx.nvars:
            raise UnknownVariable(f"variable index {k} out of range")
        out = {}
        for idx, c in self.terms.items():
            e = idx[k]
            if e:
                j = list(idx)
                j[k] = e - 1
                out[tuple(j)] = c * e
        prec = self.prec
        if prec is not None:
            if k == self.ctx.nvars - 1:
                prec = (prec[0], prec[1] - 1)
            else:
                prec = (prec[0] - 1, prec[1])
            out = {i: c for i, c in out.items() if _in_box(i, *prec)}
        return TruncatedSeries._make(self.ctx, out, prec)

    def subst(self, assignments: Mapping[str, "TruncatedSeries"], target: VarContext | None = None):
        """Linear change of spatial variables.

        ``assignments`` maps source variable names to homogeneous degree-one
        series in the target context; unassigned variables (and ``t``) map to
        the identically named target variable.
        """
        if target is None:
            if assignments:
                target = next(iter(assignments.values())).ctx
            else:
                target = self.ctx
        if (target.D, target.J) != (self.ctx.D, self.ctx.J) or target.t != self.ctx.t:
            raise ContextMismatch("substitution must preserve truncation bounds and the parameter name")
        images = []
        for name in self.ctx.names:
            if name in assignments:
                img = assignments[name]
                if img.ctx != target:
                    raise ContextMismatch(f"image of {name} lives in another context")
                if any(spatial_degree(i) != 1 or i[-1] != 0 for i in img.terms) or not img.exact:
                    raise NonlinearSubstitutionUnsupported(f"image of {name} is not a linear form")
                images.append(img)
            else:
                images.append(TruncatedSeries.var(target, name))
        for name in assignments:
            self.ctx.index_of(name)
            if name == self.ctx.t:
                raise NonlinearSubstitutionUnsupported("the parameter t cannot be substituted")
        powers = [{0: TruncatedSeries.const(target, ONE)} for _ in images]

        def power(k, e):
            cache = powers[k]
            if e not in cache:
                cache[e] = power(k, e - 1) * images[k]
            return cache[e]

        tpos = target.nvars - 1
        acc = {}
        for idx, c in sorted(self.terms.items()):
            term = TruncatedSeries.const(target, c)
            for k, e in enumerate(idx[:-1]):
                if e:
                    term = term * power(k, e)
            tj = idx[-1]
            for i2, c2 in term.terms.items():
                j = list(i2)
                j[tpos] += tj
                j = tuple(j)
                acc[j] = acc.get(j, ZERO) + c2
        return TruncatedSeries._make(target, {i: c for i, c in acc.items() if c}, self.prec)

    def exp(self) -> "TruncatedSeries":
        """``sum_k a^k / k!``; requires a zero constant term.  Always inexact."""
        if self.constant_term():
            raise NonzeroConstantTerm("exp() needs a series with zero constant term")
        ctx = self.ctx
        result = TruncatedSeries.const(ctx, ONE)
        power = TruncatedSeries.const(ctx, ONE)
        k = 0
        while True:
            k += 1
            power = power * self
            if power.is_zero():
                break
            result = result + power.scale(GaussianRational(1) / factorial(k))
            if k > ctx.D + ctx.J + 1:
                break
        prec = _min_prec(self.prec, (ctx.D, ctx.J))
        if self.is_zero() and self.exact:
            prec = None
        terms = {i: c for i, c in result.terms.items() if prec is None or _in_box(i, *prec)}
        return TruncatedSeries._make(ctx, terms, prec)

    # -- restructuring -----------------------------------------------------
    def recontext(self, ctx: VarContext) -> "TruncatedSeries":
        """Move to a context with the same variables and different bounds."""
        if not ctx.same_variables(self.ctx):
            raise ContextMismatch("recontext needs identical variable names")
        return TruncatedSeries(ctx, self.terms, self.prec)

    def truncate(self, D: int | None = None, J: int | None = None) -> "TruncatedSeries":
        """Keep only terms inside ``(D, J)`` without changing the context."""
        D = self.ctx.D if D is None else D
        J = self.ctx.J if J is None else J
        dropped = any(not _in_box(i, D, J) for i in self.terms)
        terms = {i: c for i, c in self.terms.items() if _in_box(i, D, J)}
        prec = self.prec
        if dropped or prec is not None:
            prec = _min_prec(prec, (D, J))
        return TruncatedSeries._make(self.ctx, terms, prec)

    def t_coefficient(self, j: int) -> "TruncatedSeries":
        """Coefficient of ``t^j`` as a t-free series in the same context."""
        out = {}
        for idx, c in self.terms.items():
            if idx[-1] == j:
                out[idx[:-1] + (0,)] = c
        prec = self.prec
        if prec is not None:
            if j > prec[1]:
                return TruncatedSeries._make(self.ctx, {}, (prec[0], -1))
            prec = (prec[0], self.ctx.J)
        return TruncatedSeries._make(self.ctx, out, prec)

    def times_t_power(self, j: int) -> "TruncatedSeries":
        return self * TruncatedSeries.monomial(self.ctx, {self.ctx.t: j})

    def evaluate_t_zero(self) -> "TruncatedSeries":
        return self.t_coefficient(0)

    def map_coefficients(self, fn) -> "TruncatedSeries":
        return TruncatedSeries(self.ctx, {i: fn(c) for i, c in self.terms.items()}, self.prec)

    def conjugate(self) -> "TruncatedSeries":
        return TruncatedSeries._make(self.ctx, {i: c.conjugate() for i, c in self.terms.items()}, self.prec)

    def permute_variables(self, perm: Mapping[str, str]) -> "TruncatedSeries":
        """Rename/permute spatial variables inside the same context."""
        ctx = self.ctx
        pos = list(range(ctx.nvars))
        for src, dst in perm.items():
            pos[ctx.index_of(src)] = ctx.index_of(dst)
        out = {}
        for idx, c in self.terms.items():
            j = [0] * ctx.nvars
            for k, e in enumerate(idx):
                j[pos[k]] += e
            out[tuple(j)] = c
        return TruncatedSeries._make(ctx, out, self.prec)

    # -- numerics ----------------------------------------------------------
    def eval_float(self, point: Mapping[str, complex]):
        """Horner evaluation, variables in context order; bit-reproducible.

        Values may be complex scalars or numpy arrays (evaluated elementwise).
        """
        names = self.ctx.names + (self.ctx.t,)
        missing = [n for n in names if n not in point]
        if missing:
            raise MissingAssignment(f"no value for {missing}")
        vals = [point[n] if isinstance(point[n], np.ndarray) else complex(point[n]) for n in names]
        items = sorted((idx, c.to_complex()) for idx, c in self.terms.items())
        return _horner(items, vals, 0)

    # -- rendering ---------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _term_key(kv[0]))

    def __str__(self):
        return render_terms(self.ctx, self.sorted_terms())

    def __repr__(self):
        flag = "" if self.exact else f", prec={self.prec}"
        return f"TruncatedSeries({self}{flag})"


def _horner(items, vals, k):
    # items sorted lexicographically by index; Horner in variable k, recursing on the rest
    if k == len(vals):
        return sum((c for _, c in items), 0j)
    groups = {}
    order = []
    for idx, c in items:
        e = idx[k]
        if e not in groups:
            groups[e] = []
            order.append(e)
        groups[e].append((idx, c))
    if not order:
        return 0j
    top = max(order)
    acc = 0j
    v = vals[k]
    for e in range(top, -1, -1):
        acc = acc * v
        if e in groups:
            acc = acc + _horner(groups[e], vals, k + 1)
    return acc


def _term_key(idx):
    return (sum(idx), tuple(-e for e in idx))


def monomial_str(ctx: VarContext, idx) -> str:
    parts = []
    order = [len(ctx.names)] + list(range(len(ctx.names)))
    names = ctx.names + (ctx.t,)
    for k in order:
        e = idx[k]
        if e == 1:
            parts.append(names[k])
        elif e > 1:
            parts.append(f"{names[k]}^{e}")
    return "*".join(parts)


def coeff_times(c: GaussianRational, mono: str) -> tuple:
    """Split ``c*mono`` into a sign and an unsigned string."""
    if c.is_real():
        neg = c.re < 0
        mag = -c if neg else c
        if mono:
            return neg, (mono if mag == 1 else f"{mag}*{mono}")
        return neg, str(mag)
    if not c.re:
        neg = c.im < 0
        mag = -c if neg else c
        s = str(mag)
        return neg, (f"{s}*{mono}" if mono else s)
    return False, (f"({c})*{mono}" if mono else f"({c})")


def render_terms(ctx: VarContext, items) -> str:
    pieces = []
    for idx, c in items:
        neg, body = coeff_times(c, monomial_str(ctx, idx))
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces) if pieces else "0"


def variables(ctx: VarContext) -> dict:
    """All context variables as series, keyed by name."""
    return {name: TruncatedSeries.var(ctx, name) for name in ctx.names + (ctx.t,)}
