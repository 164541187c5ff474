"""Exception types raised across the package."""


class ValidationError(ValueError):
    """Malformed or inconsistent input (bad ids, dimensions, non-normalized scores)."""


class ConvergenceError(RuntimeError):
    """An iterative procedure did not settle within its iteration budget."""


class GenerationError(RuntimeError):
    """The random matrix generator ran out of attempts."""


class NoUniqueConsensusError(ValueError):
    """The trust matrix has no unique nonnegative stationary vector."""
