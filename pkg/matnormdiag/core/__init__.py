from .exceptions import (CovarianceSingular, DegenerateTest, DimensionMismatch,
                         InfeasibleDiagnostic, MatNormDiagError,
                         NonFiniteValue, NotPositiveDefinite, ParseError,
                         RedrawLimitExceeded, RejectionExhausted,
                         ScenarioFailed, ShapeMismatch)
from .linalg import (SpdFactor, kron, solve_spd, spd_factorize, symmetrize,
                     unvectorize, vectorize)
from .structures import MatNormalParams, MatrixDataset, MvnParams

__all__ = [
    'MatrixDataset', 'MatNormalParams', 'MvnParams', 'SpdFactor', 'kron',
    'vectorize', 'unvectorize', 'spd_factorize', 'solve_spd', 'symmetrize',
    'MatNormDiagError', 'NotPositiveDefinite', 'DimensionMismatch',
    'CovarianceSingular', 'InfeasibleDiagnostic', 'RejectionExhausted',
    'DegenerateTest', 'RedrawLimitExceeded', 'ScenarioFailed', 'ParseError',
    'ShapeMismatch', 'NonFiniteValue'
]
