"""End-to-end analysis of a deformation and its JSON report.

Stages, in order:

    integrability   omega ^ d(omega) = 0
    cycle           cycle integral and its obstructions
    standard_form   omega = a d(xy) + dh            (needs cycle)
    codim           singular set of omega ^ d(xy)    (needs cycle)
    first_integral  truncated F with dF ^ omega = 0  (needs all of the above)
    decomplexify    real first integral              (center mode only)
    numeric         quadrature against the symbolic cycle integral

A stage whose prerequisite did not pass is recorded as ``skipped``.
"""
from __future__ import annotations

import cmath
import json
from dataclasses import dataclass, field

from .cycle import CyclePath, cycle_integral_numeric, cycle_integral_symbolic, vanishing_obstructions
from .decompose import standard_form
from .errors import (Infeasible, InputFileError, IntegrabilityHypothesisFailed, NotReal,
                     PreconditionFailed, TruncationInconclusive)
from .forms import OneForm, df_saddle, ext_d, wedge12
from .integral import build_first_integral
from .series import TruncatedSeries, VarContext
from .singular import CodimClass, classify_codim, wedge_with_df

NUMERIC_TOL = 1e-9
SADDLE_PATHS = ((0.3, 1.0), (0.2 + 0.1j, 0.7 + 0.2j), (-0.25j, 0.9 - 0.3j))
CENTER_RADII = (0.5, 1.0)
T_SAMPLE = 0.3
Z_SAMPLE = (0.2, -0.1, 0.15, 0.05)


@dataclass
class AnalysisConfig:
    n: int = 2
    mode: str = "saddle"
    D: int = 10
    J: int = 4
    samples: int = 256

    def context(self) -> VarContext:
        if self.mode == "center":
            from .realcenter import center_context
            return center_context(self.n, self.D, self.J)
        return VarContext.saddle(self.n, self.D, self.J)


@dataclass
class Stage:
    status: str
    detail: str = ""

    def to_json(self):
        return {"status": self.status, "detail": self.detail} if self.detail else {"status": self.status}


@dataclass
class AnalysisReport:
    input: str
    config: AnalysisConfig
    omega: OneForm
    cycle_polynomial: object = None
    obstructions: list = field(default_factory=list)
    standard_form: object = None
    integrability: dict = field(default_factory=dict)
    codim: object = None
    first_integral: object = None
    real_first_integral: TruncatedSeries | None = None
    numeric_checks: list = field(default_factory=list)
    stages: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "input": self.input,
            "mode": self.config.mode,
            "n": self.config.n,
            "truncation": {"D": self.config.D, "J": self.config.J},
            "cycle_polynomial": None if self.cycle_polynomial is None else self.cycle_polynomial.to_json(),
            "obstructions": [o.to_json() for o in self.obstructions],
            "standard_form": None if self.standard_form is None else self.standard_form.to_json(),
            "integrability": self.integrability,
            "codim": None if self.codim is None else self.codim.to_json(),
            "first_integral": None if self.first_integral is None else self.first_integral.to_json(),
            "numeric_checks": self.numeric_checks,
            "stages": {k: v.to_json() for k, v in self.stages.items()},
        }
        if self.config.mode == "center":
            out["real"] = True
            out["real_first_integral"] = (None if self.real_first_integral is None
                                          else str(self.real_first_integral))
        return out

    def dumps(self, pretty: bool = False) -> str:
        return json.dumps(self.to_json(), indent=2 if pretty else None, ensure_ascii=False,
                          sort_keys=False)

    def summary(self) -> str:
        lines = [f"input: {self.input}", f"mode: {self.config.mode}  n = {self.config.n}  "
                 f"D = {self.config.D}  J = {self.config.J}"]
        if self.cycle_polynomial is not None:
            lines.append(f"cycle integral / 2 pi i: {self.cycle_polynomial}")
        for name, st in self.stages.items():
            lines.append(f"  {name:15s} {st.status}" + (f"  ({st.detail})" if st.detail else ""))
        if self.standard_form is not None:
            lines.append(f"a = {self.standard_form.a}")
            lines.append(f"h = {self.standard_form.h}")
        if self.codim is not None:
            w = "" if self.codim.witness is None else f", witness {self.codim.witness}"
            lines.append(f"codim: {self.codim.cls.value}{w}")
        if self.first_integral is not None:
            lines.append(f"F = {self.first_integral.F}")
        if self.real_first_integral is not None:
            lines.append(f"F (real) = {self.real_first_integral}")
        return "\n".join(lines)


def _cj(v):
    v = complex(v)
    return {"re": v.real, "im": v.imag}


def _jet_stable(alpha, alpha2) -> bool:
    """Same stored terms inside the smaller box, and nothing new beyond it."""
    def flat(a):
        return {(k, idx): v for k, c in a.coeffs.items() for idx, v in c.terms.items()}
    return flat(alpha) == flat(alpha2)


def _codim_stage(omega, rebuild):
    alpha = wedge_with_df(omega)
    rep = classify_codim(alpha)
    if rep.cls is not CodimClass.INCONCLUSIVE or rebuild is None:
        return rep
    ctx = omega.ctx
    omega2 = rebuild(ctx.D + 2, ctx.J + 1)
    if _jet_stable(alpha, wedge_with_df(omega2)):
        rep = classify_codim(alpha, allow_jet=True)
        rep.reason = (f"jet unchanged at truncation (D, J) = ({ctx.D + 2}, {ctx.J + 1}); "
                      "classified from the stable jet")
    return rep


def _saddle_numeric(omega, poly, samples):
    n = omega.ctx.n
    zstar = tuple(Z_SAMPLE[k % len(Z_SAMPLE)] for k in range(n - 2))
    out = []
    for c, x0 in SADDLE_PATHS:
        path = CyclePath(c, x0, zstar, T_SAMPLE)
        quad = cycle_integral_numeric(omega, path, samples)
        sym = 2j * cmath.pi * poly.evaluate(c, zstar, T_SAMPLE)
        out.append({"path": path.to_json(), "symbolic": _cj(sym), "quadrature": _cj(quad),
                    "abs_error": abs(quad - sym)})
    return out


def _center_numeric(omega_real, poly, samples):
    from .realcenter import RealCircle, circle_integral_numeric
    n = omega_real.ctx.n
    ustar = tuple(Z_SAMPLE[k % len(Z_SAMPLE)] for k in range(n - 2))
    out = []
    for r in CENTER_RADII:
        quad = circle_integral_numeric(omega_real, RealCircle(r, ustar, T_SAMPLE), samples)
        sym = 2j * cmath.pi * poly.evaluate(r * r, ustar, T_SAMPLE)
        out.append({"circle": {"r": r, "u": list(ustar), "t": T_SAMPLE}, "symbolic": _cj(sym),
                    "quadrature": _cj(quad), "abs_error": abs(quad - sym)})
    return out


def check_base_point(omega: OneForm, mode: str = "saddle"):
    """Raise :class:`PreconditionFailed` unless the t^0 part is the model form."""
    ctx = omega.ctx
    x0 = TruncatedSeries.var(ctx, ctx.names[0])
    x1 = TruncatedSeries.var(ctx, ctx.names[1])
    base = ext_d(x0 * x0 + x1 * x1) if mode == "center" else df_saddle(ctx)
    if not omega.t_coefficient(0).agrees(base):
        want = "d(x^2 + y^2)" if mode == "center" else f"d({ctx.names[0]}*{ctx.names[1]})"
        raise PreconditionFailed(f"the t^0 part of omega is {omega.t_coefficient(0)}, not {want}")


def run_analysis(omega: OneForm, config: AnalysisConfig | None = None, source: str | None = None,
                 rebuild=None) -> AnalysisReport:
    """Run every stage; stage failures are recorded, never raised.

    ``rebuild(D, J)``, when given, re-creates ``omega`` at another truncation
    and lets the codim stage judge whether a truncated jet has stabilized.
    """
    if config is None:
        config = AnalysisConfig(n=omega.ctx.n, D=omega.ctx.D, J=omega.ctx.J)
    check_base_point(omega, config.mode)
    real_omega = None
    if config.mode == "center":
        from .realcenter import complexify
        real_omega = omega
        omega = complexify(omega)
        if rebuild is not None:
            base_rebuild = rebuild

            def rebuild(D, J):
                return complexify(base_rebuild(D, J))

    rep = AnalysisReport(source if source is not None else str(real_omega or omega), config, omega)
    st = rep.stages

    resid = wedge12(omega, ext_d(omega))
    integrable = resid.is_zero()
    rep.integrability = {"holds": integrable, "residual": str(resid),
                         "checked_box": list(resid.valid_box())}
    st["integrability"] = Stage("pass" if integrable else "fail",
                                "" if integrable else "omega ^ d(omega) is not zero")

    poly = cycle_integral_symbolic(omega)
    rep.cycle_polynomial = poly
    rep.obstructions = vanishing_obstructions(poly)
    if rep.obstructions:
        st["cycle"] = Stage("fail", f"{len(rep.obstructions)} nonzero cycle coefficient(s)")
    else:
        note = "" if poly.exact else f"checked powers c^1..c^{poly.max_m} within the truncation"
        st["cycle"] = Stage("pass", note)
    cycle_ok = not rep.obstructions

    if not cycle_ok:
        st["standard_form"] = Stage("skipped", "cycle integrals do not vanish")
    else:
        try:
            rep.standard_form = standard_form(omega)
            st["standard_form"] = Stage("pass")
        except IntegrabilityHypothesisFailed as exc:
            st["standard_form"] = Stage("fail", str(exc))
        except TruncationInconclusive as exc:
            st["standard_form"] = Stage("inconclusive", str(exc))

    if not cycle_ok:
        st["codim"] = Stage("skipped", "cycle integrals do not vanish")
    else:
        rep.codim = _codim_stage(omega, rebuild)
        cls = rep.codim.cls
        if cls is CodimClass.CODIM_ONE:
            st["codim"] = Stage("fail", f"codimension-one component {rep.codim.witness} = 0")
        elif cls is CodimClass.INCONCLUSIVE:
            st["codim"] = Stage("inconclusive", rep.codim.reason)
        else:
            st["codim"] = Stage("pass", rep.codim.reason)

    blockers = [k for k in ("integrability", "cycle", "codim") if st[k].status != "pass"]
    if blockers:
        st["first_integral"] = Stage("skipped", "prerequisite not met: " + ", ".join(blockers))
    else:
        try:
            rep.first_integral = build_first_integral(omega)
            st["first_integral"] = Stage("pass")
        except Infeasible as exc:
            st["first_integral"] = Stage("fail", f"t-order {exc.t_order}: {exc}")
        except PreconditionFailed as exc:
            st["first_integral"] = Stage("fail", str(exc))

    if config.mode == "center":
        if rep.first_integral is None:
            st["decomplexify"] = Stage("skipped", "no first integral")
        else:
            from .realcenter import decomplexify
            try:
                rep.real_first_integral = decomplexify(rep.first_integral.F)
                st["decomplexify"] = Stage("pass")
            except NotReal as exc:
                st["decomplexify"] = Stage("fail", str(exc))
        rep.numeric_checks = _center_numeric(real_omega, poly, config.samples)
    else:
        rep.numeric_checks = _saddle_numeric(omega, poly, config.samples)
    worst = max(c["abs_error"] for c in rep.numeric_checks)
    st["numeric"] = Stage("pass" if worst < NUMERIC_TOL else "fail", f"max abs error {worst:.3e}")
    return rep


@dataclass
class InputSpec:
    omega: str
    n: int = 2
    mode: str = "saddle"
    D: int = 10
    J: int = 4

    def config(self) -> AnalysisConfig:
        return AnalysisConfig(self.n, self.mode, self.D, self.J)


def parse_input_file(text: str) -> InputSpec:
    """Read ``key = value`` lines: n, mode, omega, deg, tdeg.  ``#`` starts a comment."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputFileError(f"line {lineno}: expected 'key = value'")
        key, val = (s.strip() for s in line.split("=", 1))
        if key not in ("n", "mode", "omega", "deg", "tdeg"):
            raise InputFileError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise InputFileError(f"line {lineno}: duplicate key {key!r}")
        values[key] = val
    if "omega" not in values:
        raise InputFileError("missing 'omega = ...'")
    spec = InputSpec(values["omega"])
    for key, attr in (("n", "n"), ("deg", "D"), ("tdeg", "J")):
        if key in values:
            try:
                setattr(spec, attr, int(values[key]))
            except ValueError:
                raise InputFileError(f"{key} must be an integer, got {values[key]!r}") from None
    if "mode" in values:
        if values["mode"] not in ("saddle", "center"):
            raise InputFileError(f"mode must be 'saddle' or 'center', got {values['mode']!r}")
        spec.mode = values["mode"]
    if spec.n < 2:
        raise InputFileError("n must be at least 2")
    if spec.D < 1 or spec.J < 0:
        raise InputFileError("need deg >= 1 and tdeg >= 0")
    return spec


def analyze_text(omega_text: str, config: AnalysisConfig) -> AnalysisReport:
    """Parse ``omega_text`` in the configured context and run the analysis."""
    from .parser import parse_form

    ctx = config.context()
    omega = parse_form(omega_text, ctx)

    def rebuild(D, J):
        return parse_form(omega_text, ctx.with_bounds(D, J))

    return run_analysis(omega, config, source=omega_text, rebuild=rebuild)
