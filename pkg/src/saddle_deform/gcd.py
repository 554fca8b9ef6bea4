"""Multivariate polynomial GCD over Q(i).

Polynomials are dicts ``{exponent tuple: GaussianRational}``.  The GCD is the
classical recursive scheme: split off the content with respect to the last
variable that occurs, run a primitive pseudo-remainder sequence on the
primitive parts, and multiply the contents' GCD back in.
"""
from __future__ import annotations

from .errors import AllZeroInput, ContextMismatch, NotExactPolynomial
from .exact import ONE, ZERO
from .series import TruncatedSeries


def _add(p, q, sign=1):
    out = dict(p)
    for e, c in q.items():
        s = out.get(e, ZERO) + (c if sign == 1 else -c)
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, ZERO) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _scale(p, c):
    return {e: c * v for e, v in p.items()} if c else {}


def _lead(p):
    e = max(p)
    return e, p[e]


def monic(p):
    """Divide by the coefficient of the lexicographically largest exponent."""
    if not p:
        return {}
    _, c = _lead(p)
    inv = c.inverse()
    return {e: v * inv for e, v in p.items()}


def divide_exact(p, d):
    """Quotient ``p / d`` if ``d`` divides ``p`` exactly, else ``None``."""
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    ed, cd = _lead(d)
    inv = cd.inverse()
    q = {}
    r = dict(p)
    while r:
        er, cr = _lead(r)
        shift = tuple(a - b for a, b in zip(er, ed))
        if any(s < 0 for s in shift):
            return None
        m = cr * inv
        q[shift] = q.get(shift, ZERO) + m
        r = _add(r, {tuple(a + b for a, b in zip(e, shift)): c * m for e, c in d.items()}, sign=-1)
    return {e: c for e, c in q.items() if c}


def _main_var(*polys):
    best = -1
    for p in polys:
        for e in p:
            for k in range(len(e) - 1, best, -1):
                if e[k]:
                    best = k
                    break
    return best


def _as_univariate(p, v):
    """``{degree in v: coefficient polynomial with v-exponent zeroed}``."""
    out = {}
    for e, c in p.items():
        k = e[v]
        base = e[:v] + (0,) + e[v + 1:]
        out.setdefault(k, {})[base] = c
    return out


def _shift(p, v, k):
    if not k:
        return p
    return {e[:v] + (e[v] + k,) + e[v + 1:]: c for e, c in p.items()}


def _content(p, v):
    g = {}
    for coeff in _as_univariate(p, v).values():
        g = _gcd(g, coeff)
        if len(g) == 1 and not any(next(iter(g))):
            break
    return g


def _primitive(p, v):
    c = _content(p, v)
    q = divide_exact(p, c)
    assert q is not None
    return q


def prem(a, b, v):
    """Pseudo-remainder of ``a`` by ``b`` as polynomials in variable ``v``."""
    ub = _as_univariate(b, v)
    db = max(ub)
    lcb = ub[db]
    r = dict(a)
    while r:
        ur = _as_univariate(r, v)
        dr = max(ur)
        if dr < db:
            break
        lcr = ur[dr]
        r = _add(_mul(lcb, r), _shift(_mul(lcr, b), v, dr - db), sign=-1)
    return r


def _gcd(p, q):
    if not p:
        return monic(q)
    if not q:
        return monic(p)
    v = _main_var(p, q)
    nv = len(next(iter(p)))
    one = {(0,) * nv: ONE}
    if v < 0:
        return one
    cp, cq = _content(p, v), _content(q, v)
    c = _gcd(cp, cq)
    a = divide_exact(p, cp)
    b = divide_exact(q, cq)
    da = max(e[v] for e in a)
    db = max(e[v] for e in b)
    if da < db:
        a, b, da, db = b, a, db, da
    if db == 0:
        g = one
    else:
        while b:
            r = prem(a, b, v)
            a = b
            if not r:
                b = {}
                break
            if max(e[v] for e in r) == 0:
                a = one
                break
            b = _primitive(r, v)
        g = _primitive(a, v) if max(e[v] for e in a) > 0 else one
    return monic(_mul(c, g))


def gcd_dicts(polys):
    nonzero = [p for p in polys if p]
    if not nonzero:
        raise AllZeroInput("gcd of all-zero input")
    g = {}
    for p in nonzero:
        g = _gcd(g, p)
    return g


def poly_gcd(polys) -> TruncatedSeries:
    """GCD of exact polynomial series, normalized to a monic lex-leading term."""
    polys = list(polys)
    if not polys:
        raise AllZeroInput("empty gcd input")
    ctx = polys[0].ctx
    for p in polys:
        if p.ctx != ctx:
            raise ContextMismatch("gcd inputs live in different contexts")
        if not p.exact:
            raise NotExactPolynomial("gcd needs exact polynomials, got a truncated series")
    return TruncatedSeries(ctx, gcd_dicts([p.terms for p in polys]))


def poly_divide(p: TruncatedSeries, d: TruncatedSeries):
    """Exact quotient series or ``None`` when ``d`` does not divide ``p``."""
    q = divide_exact(p.terms, d.terms)
    return None if q is None else TruncatedSeries(p.ctx, q)


def parameter_content(p: TruncatedSeries):
    """Split ``p = c(t) * q`` with ``c`` the GCD of the coefficients of ``p``
    viewed as a polynomial in the spatial variables over Q(i)[t].

    Returns ``(c, q)`` as series; ``c`` is monic.
    """
    if not p.exact:
        raise NotExactPolynomial("content needs an exact polynomial")
    groups = {}
    for e, c in p.terms.items():
        groups.setdefault(e[:-1], {})[(0,) * (len(e) - 1) + (e[-1],)] = c
    c = gcd_dicts(list(groups.values()))
    q = divide_exact(p.terms, c)
    return TruncatedSeries(p.ctx, c), TruncatedSeries(p.ctx, q)
