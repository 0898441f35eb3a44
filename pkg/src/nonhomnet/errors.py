"""Exception hierarchy shared by all nonhomnet modules."""


class NonhomError(Exception):
    """Base class for all nonhomnet errors."""


class InvalidParameter(NonhomError):
    """A parameter violates its documented domain."""


class NonConvergence(NonhomError):
    """An iterative computation hit its term/iteration cap before tolerance."""


class PoleError(NonhomError):
    """Parameters land on (or within 1e-12 of) a cosecant pole."""


class DomainError(NonhomError):
    """Parameters are outside the regime where a closed form is valid."""


class BracketFailure(NonhomError):
    """Root bracketing found no sign change (degenerate fixed-point problem)."""


class QuadratureFailure(NonhomError):
    """Adaptive quadrature could not reach the requested accuracy."""


class DimensionMismatch(NonhomError):
    """Array shapes are inconsistent."""


class FactorizationFailure(NonhomError):
    """A covariance matrix was not positive definite."""


class ZeroRadiusNode(NonhomError):
    """A node was drawn at radius zero (degenerate, infinite power)."""
