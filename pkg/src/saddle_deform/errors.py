"""Exception hierarchy shared by all modules."""


class SaddleDeformError(Exception):
    pass


class ContextMismatch(SaddleDeformError):
    pass


class UnknownVariable(SaddleDeformError):
    pass


class NonlinearSubstitutionUnsupported(SaddleDeformError):
    pass


class NonzeroConstantTerm(SaddleDeformError):
    pass


class AllZeroInput(SaddleDeformError):
    pass


class NotExactPolynomial(SaddleDeformError):
    pass


class MissingAssignment(SaddleDeformError):
    pass


class InvalidPath(SaddleDeformError):
    pass


class NotDivisible(SaddleDeformError):
    pass


class NotReal(SaddleDeformError):
    pass


class PreconditionFailed(SaddleDeformError):
    pass


class IntegrabilityHypothesisFailed(SaddleDeformError):
    """``d(eta) ^ d(xy)`` does not vanish; carries the offending 3-form."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class TruncationInconclusive(SaddleDeformError):
    def __init__(self, message, residual_degree):
        super().__init__(message)
        self.residual_degree = residual_degree


class Obstructed(SaddleDeformError):
    """Nonzero cycle integrals block a standard form."""

    def __init__(self, obstructions):
        self.obstructions = list(obstructions)
        desc = ", ".join(f"(j={o.j}, m={o.m}, {o.z_label}: {o.value})" for o in self.obstructions[:4])
        more = "" if len(self.obstructions) <= 4 else f", ... ({len(self.obstructions)} total)"
        super().__init__(f"nonvanishing cycle integrals: {desc}{more}")


class Infeasible(SaddleDeformError):
    """A linear system has no solution.  ``witness`` maps column -> coefficient
    of the reduced row, ``rhs`` is its nonzero right-hand side."""

    def __init__(self, message, row=None, witness=None, rhs=None, t_order=None):
        super().__init__(message)
        self.row = row
        self.witness = witness or {}
        self.rhs = rhs
        self.t_order = t_order


class UnknownExample(SaddleDeformError):
    pass


class FormSyntaxError(SaddleDeformError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class InputFileError(SaddleDeformError):
    pass
