"""Exception types raised across the package."""


class BaselGeomError(Exception):
    """Base class for all errors raised by :mod:`baselgeom`."""


class DomainError(BaselGeomError, ValueError):
    """An input lies outside (or too close to the edge of) the region a map is defined on."""


class ClampError(DomainError):
    """A cosine-rule argument left [-1, 1] by more than the rounding window."""


class EvaluationError(BaselGeomError, ArithmeticError):
    """A finite-difference stencil point could not be evaluated."""


class ToleranceNotMet(BaselGeomError, RuntimeError):
    """Adaptive quadrature ran out of budget before reaching the requested tolerance."""


class NotContained(BaselGeomError, ValueError):
    """A box is not contained in U0 with positive clearance."""


class BoundViolation(BaselGeomError, AssertionError):
    """A series inequality that should hold was observed to fail."""


class UnknownCheck(BaselGeomError, KeyError):
    pass


class UnknownFigure(BaselGeomError, KeyError):
    pass
