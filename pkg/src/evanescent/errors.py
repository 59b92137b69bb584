"""Exception hierarchy.

Every error raised by the computation modules derives from
:class:`EvanescentError`; the CLI maps the three families below onto
distinct exit codes.
"""


class EvanescentError(Exception):
    """Base class for all package errors."""


class DomainError(EvanescentError, ValueError):
    """An argument lies outside the region where an operation is defined."""


class ToleranceError(EvanescentError, ArithmeticError):
    """A requested accuracy cannot be certified."""


class SingularityError(DomainError):
    pass


class StokesRayError(DomainError):
    pass


class PoleOnPathError(DomainError):
    pass


class SubcriticalError(DomainError):
    pass


class CriticalIncidenceError(DomainError):
    pass


class GrazingError(DomainError):
    pass


class StripViolationError(DomainError):
    pass


class DegenerateJacobianError(DomainError):
    pass


class RegionError(DomainError):
    """Wrong region for the requested formula, or a stencil straddling y = 0."""


class ResolutionError(DomainError):
    pass


class DivergenceError(ToleranceError):
    """An asymptotic series was truncated past its smallest term."""


class ConvergenceError(ToleranceError):
    pass
