"""
Walking through the reference deformations
==========================================

Four small deformations of the saddle d(xy) = 0, each stressing a different
hypothesis: vanishing of the cycle integrals, the standard form
a d(xy) + dh, and the size of the singular set of omega ^ d(xy).
"""

from saddle_deform import AnalysisConfig, analyze_text, corpus_check

# A deformation whose cycle integrals all vanish.  The standard form exists,
# but omega ^ d(xy) = t x^3 y^2 dx^dy vanishes on the axes, a
# codimension-one set, so no holomorphic first integral is promised.
rep = analyze_text("d(x*y) + t*(x*y)^2*dx", AnalysisConfig(n=2))
print(rep.summary())
print()

# exp() is expanded to the truncation (D, J) = (8, 4).  The codim stage
# re-expands at (10, 5), sees the same jet and classifies from it.
rep = analyze_text("exp(t*y)*d(x*y) + t*x*y*dx", AnalysisConfig(n=2, D=8, J=4))
print(rep.summary())
print(rep.codim.reason)
print()

# Here the cycle integral is -t c^2, so everything downstream is skipped.
rep = analyze_text("(1 + t*x*y)*d(x*y) - t*x*y^2*dx + t*z1*dz1", AnalysisConfig(n=3))
print(rep.summary())
print()

# A product deformation: all stages pass and F is recovered exactly.
rep = analyze_text("d(x*y) + t*d(z1*x + y)", AnalysisConfig(n=3))
print(rep.summary())
print()

# The corpus checks bundle the exact identities behind each example.
for eid in ("ex0", "ex1", "ex2", "ex3"):
    res = corpus_check(eid)
    print(eid, "pass" if res.passed else "FAIL", sorted(res.checks))
