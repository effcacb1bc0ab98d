"""Exception hierarchy shared by all transform families.

Domain problems (bad parameters, integrals that do not exist) are
``ValueError`` subclasses; budget exhaustion in series, continued
fractions or quadrature is a ``RuntimeError`` subclass, so callers can
distinguish "you asked for something meaningless" from "the requested
accuracy was not reached".
"""


class DomainError(ValueError):
    """Parameters violate a documented precondition."""


class DivergentIntegralError(DomainError):
    """The requested integral (or its closed form) does not exist."""


class UnsupportedError(DomainError):
    """No closed form is offered for these parameters; use the oracle."""


class PoleError(DomainError):
    """Evaluation at a pole of the function."""


class ConvergenceError(RuntimeError):
    """A series or continued fraction failed to converge within budget."""


class AccelerationStalledError(ConvergenceError):
    """The accelerated lobe series failed tolerance within its lobe budget."""


class MaxSubdivisionsError(ConvergenceError):
    """Adaptive quadrature exhausted its subdivision limit."""
