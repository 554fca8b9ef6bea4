"""
The real center through complexification
========================================

With z = x + iy and w = x - iy the center d(x^2 + y^2) becomes the saddle
d(zw), and the circle of radius r becomes the cycle of zw = r^2.
"""

import math

from saddle_deform import (AnalysisConfig, RealCircle, analyze_text, center_context,
                           circle_integral_numeric, complexify, parse_form)

ctx = center_context(2, 10, 4)

# a rotation term: the circulation 2 pi r^2 is an obstruction
om = parse_form("d(x^2 + y^2) + t*(x*dy - y*dx)", ctx)
print(complexify(om))
for r in (0.5, 1.0):
    print(r, circle_integral_numeric(om, RealCircle(r, (), 1.0)), 2 * math.pi * r * r)

rep = analyze_text("d(x^2 + y^2) + t*(x*dy - y*dx)", AnalysisConfig(n=2, mode="center"))
print(rep.summary())
print()

# a center-cylinder: every stage passes and F comes back in real coordinates
rep = analyze_text("d(x^2 + y^2 + t*u1*x)", AnalysisConfig(n=3, mode="center"))
print(rep.summary())
