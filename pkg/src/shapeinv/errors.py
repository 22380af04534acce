"""Exception hierarchy shared by every module in the package."""


class ShapeInvError(Exception):
    """Base class for all package errors."""


class NoSignChange(ShapeInvError, ValueError):
    """Bracket endpoints do not straddle a root."""


class MaxIterations(ShapeInvError, RuntimeError):
    """Iterative solver did not reach its tolerance."""


class NegativeIntegrand(ShapeInvError, ValueError):
    """Integrand (or radicand) is negative inside the integration range."""


class NonConvergence(ShapeInvError, RuntimeError):
    """Quadrature or root bracketing failed to converge."""


class DimensionMismatch(ShapeInvError, ValueError):
    pass


class DomainViolation(ShapeInvError, ValueError):
    """Integration limits outside the admissible region of a closed form."""


class OutOfDomain(ShapeInvError, ValueError):
    """Coordinate outside the domain of a potential."""


class ParamViolation(ShapeInvError, ValueError):
    """Parameters outside the bound-state regime of a family."""


class NoTurningPoint(ShapeInvError, ValueError):
    """Energy at or above the continuum threshold on some side."""


class Unbound(ShapeInvError, ValueError):
    """Requested level does not exist as a bound state."""


class ZeroEnergy(ShapeInvError, ValueError):
    pass


class GridTooSmall(ShapeInvError, ValueError):
    """Finite-difference box truncates an eigenfunction."""
