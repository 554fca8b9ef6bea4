"""
Symbolic cycle integrals against quadrature
===========================================

The cycle of the fiber xy = c is x = x0 e^{i theta}, y = (c/x0) e^{-i theta}.
Only monomials x^{m-1} y^m dx and x^m y^{m-1} dy survive the integration,
which gives the polynomial I(c).  The trapezoidal rule on the same path is
an independent check.
"""

import cmath
import random

import numpy as np

from saddle_deform import (CyclePath, OneForm, TruncatedSeries, VarContext,
                           cycle_integral_numeric, cycle_integral_symbolic, parse_form)

ctx = VarContext.saddle(3, 10, 3)

# y dx integrates to 2 pi i c for every anchor x0
om = parse_form("y*dx", ctx)
print(cycle_integral_symbolic(om))
for x0 in (1.0, 0.5 + 0.5j, -2j):
    print(x0, cycle_integral_numeric(om, CyclePath(0.25, x0)))

# a random polynomial form with Gaussian-rational coefficients
rng = random.Random(0)
names = ctx.names
terms = {}
for k in range(3):
    idx = tuple(rng.randint(0, 3) for _ in names) + (rng.randint(0, 2),)
    terms[idx] = rng.randint(-5, 5)
s = TruncatedSeries(ctx, terms)
om = OneForm(ctx, {"dx": s, "dy": s * TruncatedSeries.var(ctx, "x")}) + parse_form(
    "x*y^2*dx - 3*t*z1*y*dx + x^3*y^2*dy", ctx)
poly = cycle_integral_symbolic(om)
print("I(c) =", poly)

# quadrature error against 2 pi i I(c) on a few paths
errs = []
for c in (0.3, 0.2 + 0.1j, -0.25j):
    for x0 in (1.0, 0.7 + 0.2j):
        path = CyclePath(c, x0, (0.1,), 0.4)
        quad = cycle_integral_numeric(om, path, 256)
        errs.append(abs(quad - 2j * cmath.pi * poly.evaluate(c, (0.1,), 0.4)))
print("max abs error:", np.max(errs))
