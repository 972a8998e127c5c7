from typing import Optional


class MatNormDiagError(Exception):
    """Base class of every error raised by matnormdiag."""

    def to_dict(self) -> dict:
        """Machine-readable form used by the command line error channel."""
        info = dict(error=type(self).__name__, message=str(self))
        for key in ('reason', 'iteration', 'lineno', 'scenario', 'seed'):
            value = getattr(self, key, None)
            if value is not None:
                info[key] = value
        return info


class NotPositiveDefinite(MatNormDiagError, ArithmeticError):
    """A covariance factorization hit a non-positive or negligible pivot.

    Args:
        message (str): Human readable description.
        iteration (int, optional): Flip-flop iteration that produced the
            offending factor. Defaults to None.
    """

    def __init__(self, message: str, iteration: Optional[int] = None):
        super().__init__(message)
        self.iteration = iteration


class DimensionMismatch(MatNormDiagError, ValueError):
    """Operands of a linear algebra operation have incompatible shapes."""


class CovarianceSingular(MatNormDiagError, ArithmeticError):
    """The unstructured covariance estimate does not exist.

    Args:
        message (str): Human readable description.
        reason (str): ``'dimension'`` when d >= N, ``'rank'`` when the
            estimate is numerically rank deficient.
    """

    def __init__(self, message: str, reason: str = 'rank'):
        super().__init__(message)
        self.reason = reason


class InfeasibleDiagnostic(CovarianceSingular):
    """A diagnostic that needs an unstructured fit was asked for N <= cr."""

    def __init__(self, message: str):
        super().__init__(message, reason='dimension')


class RejectionExhausted(MatNormDiagError, RuntimeError):
    """A rejection sampler ran out of redraws."""


class DegenerateTest(MatNormDiagError, ValueError):
    """A hypothesis test has zero degrees of freedom."""


class RedrawLimitExceeded(MatNormDiagError, RuntimeError):
    """Too many Monte Carlo replications failed and had to be redrawn."""


class ScenarioFailed(MatNormDiagError, RuntimeError):
    """A simulation scenario aborted; name and seed allow an exact replay."""

    def __init__(self, message: str, scenario: str, seed: int):
        super().__init__(message)
        self.scenario = scenario
        self.seed = seed


class ParseError(MatNormDiagError, ValueError):
    """Malformed matrix stack file.

    Args:
        message (str): Human readable description.
        lineno (int): 1-based line number of the offending line.
    """

    def __init__(self, message: str, lineno: int):
        super().__init__(f'line {lineno}: {message}')
        self.lineno = lineno


class ShapeMismatch(ParseError):
    """A block of a matrix stack file disagrees with the declared shape."""


class NonFiniteValue(ParseError):
    """A matrix stack file contains nan or inf."""
