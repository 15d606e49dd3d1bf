"""Exception hierarchy shared by every tropluk module."""


class TroplukError(Exception):
    """Base class for all errors raised by tropluk."""


class DimensionError(TroplukError, ValueError):
    pass


class DomainError(TroplukError, ValueError):
    """An entry lies outside the carrier an operation requires (e.g. [0, 1])."""


class DivergentValue(TroplukError, ArithmeticError):
    """TOP (+inf) reached an operation where it has no meaning."""


class PositiveCycleError(TroplukError):
    """A Kleene star was requested for a matrix with a positive cycle."""


class NoSolutionError(TroplukError):
    pass


class NormalizationError(TroplukError, ValueError):
    """Tropical convex coefficients whose maximum is not 0."""


class PreconditionError(TroplukError, ValueError):
    pass


class TransientCapExceeded(TroplukError):
    def __init__(self, cap, what="sequence"):
        self.cap = cap
        super().__init__(f"{what} did not become periodic within the cap of {cap} steps")


class NoEigenvectorsError(TroplukError):
    """No eigenvector of the requested kind exists.

    ``condition`` names the existence condition that failed.
    """

    def __init__(self, condition, message=None):
        self.condition = condition
        super().__init__(message or condition)
