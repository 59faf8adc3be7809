"""Exception types shared across the package."""


class ToepfactError(Exception):
    """Base class for all errors raised by this package."""


class NonGenericMatrixError(ToepfactError):
    """The input lies on the degenerate set excluded by an algorithm.

    ``stage`` is the 1-based elimination stage that failed, when known.
    """

    def __init__(self, message, stage=None):
        super().__init__(message)
        self.stage = stage


class SingularFactorError(NonGenericMatrixError):
    """A triangular Toeplitz factor has a (near-)zero main diagonal."""


class ConvergenceError(ToepfactError):
    """An iterative solver exhausted its restart budget.

    ``best_residual`` is the smallest relative residual seen across all
    restarts.
    """

    def __init__(self, message, best_residual=None):
        super().__init__(message)
        self.best_residual = best_residual


class FormatError(ToepfactError):
    """A matrix or chain file could not be parsed.

    ``line`` is the 1-based line number of the offending input, when known.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
