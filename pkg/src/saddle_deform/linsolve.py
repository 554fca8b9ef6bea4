"""Exact sparse linear systems over Q(i).

Rows are scaled to Gaussian-integer entries and eliminated fraction-free
(``row <- p*row - r*pivot_row`` followed by removal of the integer content).
The pivot of each incoming row is its first nonzero column after reduction
against the existing pivots, so the result depends only on row and column
order.  Free columns are set to zero.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import Infeasible
from .exact import ZERO, GaussianRational


@dataclass
class LinearSystem:
    ncols: int
    rows: list = field(default_factory=list)
    rhs: list = field(default_factory=list)
    col_labels: list | None = None
    row_labels: list | None = None

    def add_row(self, coeffs: dict, rhs=ZERO, label=None):
        self.rows.append({c: GaussianRational.coerce(v) for c, v in coeffs.items() if v})
        self.rhs.append(GaussianRational.coerce(rhs))
        if label is not None:
            if self.row_labels is None:
                self.row_labels = [None] * (len(self.rows) - 1)
            self.row_labels.append(label)
        elif self.row_labels is not None:
            self.row_labels.append(None)

    def __post_init__(self):
        if len(self.rows) != len(self.rhs):
            raise ValueError("rows and right-hand side have different lengths")
        self.rows = [{c: GaussianRational.coerce(v) for c, v in r.items() if v} for r in self.rows]
        self.rhs = [GaussianRational.coerce(v) for v in self.rhs]
        for r in self.rows:
            if any(not 0 <= c < self.ncols for c in r):
                raise ValueError("column index out of range")


@dataclass
class Solution:
    values: list
    free: list
    pivots: list

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _to_gauss_int(row: dict, rhs: GaussianRational):
    dens = [v.gaussian_integer_parts()[2] for v in row.values()]
    dens.append(rhs.gaussian_integer_parts()[2])
    L = 1
    for d in dens:
        L = L * d // gcd(L, d)
    out = {}
    for c, v in row.items():
        a, b, d = v.gaussian_integer_parts()
        out[c] = (a * (L // d), b * (L // d))
    a, b, d = rhs.gaussian_integer_parts()
    return out, (a * (L // d), b * (L // d))


def _content_reduce(row, rhs):
    g = 0
    for a, b in row.values():
        g = gcd(g, gcd(a, b))
        if g == 1:
            return row, rhs
    g = gcd(g, gcd(*rhs))
    if g <= 1:
        return row, rhs
    return {c: (a // g, b // g) for c, (a, b) in row.items()}, (rhs[0] // g, rhs[1] // g)


def _gmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _combine(p, row, rhs, r, prow, prhs):
    """``p*row - r*prow`` on Gaussian-integer rows."""
    out = {c: _gmul(p, v) for c, v in row.items()}
    for c, v in prow.items():
        a, b = _gmul(r, v)
        if c in out:
            oa, ob = out[c]
            a, b = oa - a, ob - b
            if a or b:
                out[c] = (a, b)
            else:
                del out[c]
        elif a or b:
            out[c] = (-a, -b)
    pr = _gmul(p, rhs)
    rr = _gmul(r, prhs)
    return out, (pr[0] - rr[0], pr[1] - rr[1])


def exact_linear_solve(system: LinearSystem) -> Solution:
    """One solution with every free variable zero; raises :class:`Infeasible`."""
    pivots = {}
    for i, (row, rhs) in enumerate(zip(system.rows, system.rhs)):
        row, grhs = _to_gauss_int(row, rhs)
        row, grhs = _content_reduce(row, grhs)
        while True:
            hit = [c for c in row if c in pivots]
            if not hit:
                break
            c = min(hit)
            prow, prhs = pivots[c]
            row, grhs = _combine(prow[c], row, grhs, row[c], prow, prhs)
            row, grhs = _content_reduce(row, grhs)
        if not row:
            if grhs[0] or grhs[1]:
                label = system.row_labels[i] if system.row_labels else None
                raise Infeasible(
                    f"inconsistent equation (row {i}{'' if label is None else f', {label}'}): 0 = nonzero",
                    row=i, witness={"label": label}, rhs=GaussianRational.from_parts(*grhs))
            continue
        pivots[min(row)] = (row, grhs)

    values = [ZERO] * system.ncols
    for c in sorted(pivots, reverse=True):
        prow, prhs = pivots[c]
        acc = GaussianRational.from_parts(*prhs)
        for k, v in prow.items():
            if k != c and values[k]:
                acc = acc - GaussianRational.from_parts(*v) * values[k]
        values[c] = acc / GaussianRational.from_parts(*prow[c])
    free = [c for c in range(system.ncols) if c not in pivots]
    return Solution(values, free, sorted(pivots))


def matrix_rank(rows: list, ncols: int) -> int:
    """Rank of a sparse matrix given as a list of ``{col: value}`` dicts."""
    sys = LinearSystem(ncols, [dict(r) for r in rows], [ZERO] * len(rows))
    return exact_linear_solve(sys).rank
