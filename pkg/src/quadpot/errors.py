"""Exception hierarchy shared by all quadpot modules."""


class QuadpotError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QuadpotError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class DegeneratePolygonError(DomainError):
    """Quadrilateral is degenerate: collinear vertices or not strictly convex."""


class OrientationError(DomainError):
    """Vertices are ordered counterclockwise; the solver requires clockwise."""


class PoleProximityError(QuadpotError):
    """Evaluation point is within the guard radius of a pole."""


class NumericalError(QuadpotError):
    """A quadrature or iteration failed to reach its accuracy target."""


class BracketingError(NumericalError):
    """No sign change found (or monotonicity violated) while bracketing a root."""


class ConvergenceError(NumericalError):
    """An iterative solve exceeded its iteration cap or residual tolerance."""


class NoAdmissibleRootError(QuadpotError):
    """No cubic root satisfies the pole-selection inequality (bad inputs)."""


class AmbiguousRootError(QuadpotError):
    """More than one cubic root satisfies the pole-selection inequality.

    Theory guarantees uniqueness, so this flags a numerical failure rather
    than a legitimate configuration.
    """
