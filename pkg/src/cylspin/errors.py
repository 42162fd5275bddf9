"""Exception hierarchy shared by all cylspin modules."""


class CylspinError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(CylspinError, ValueError):
    """A parameter violates one of the documented bounds."""


class DomainError(CylspinError, ValueError):
    """A function argument lies outside the function's domain."""


class PoleProximityError(CylspinError):
    """The argument sits at (or numerically near) a zero of J_n.

    Root-bracketing code treats this as a bracket boundary, not a failure:
    the J-ratio characteristic functions have poles exactly at these points.
    """

    def __init__(self, order: int, x: float):
        self.order = order
        self.x = x
        super().__init__(f"J_{order}({x!r}) is too close to a zero; ratio pole")


class SolverError(CylspinError):
    """Root refinement failed; the message carries bracket diagnostics."""


class CutoffError(SolverError):
    """No bound mode exists at the requested quantum numbers."""


class InternalConsistencyError(CylspinError):
    """A solved quantity violates an exact internal identity (spurious root,
    ambiguous root pairing, non-positive normalization)."""
