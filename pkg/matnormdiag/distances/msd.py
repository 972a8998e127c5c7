from dataclasses import dataclass

import numpy as np

from matnormdiag.core import MatNormalParams, MatrixDataset, MvnParams
from matnormdiag.core.exceptions import DimensionMismatch

MATRIX_BASED = 'matrix_based'
VECTOR_BASED = 'vector_based'


@dataclass(frozen=True, eq=False)
class MsdVector:
    """Mahalanobis squared distances of a dataset, in sample order.

    Args:
        values (np.ndarray): One nonnegative distance per sample.
        kind (str): ``'matrix_based'`` or ``'vector_based'``.
        dof (int): Degrees of freedom of the reference chi-square law.
    """
    values: np.ndarray
    kind: str
    dof: int

    def __post_init__(self):
        if self.kind not in (MATRIX_BASED, VECTOR_BASED):
            raise ValueError(f'unknown MSD kind {self.kind!r}')

    def __len__(self) -> int:
        return len(self.values)


def msd_matrix(data: MatrixDataset, params: MatNormalParams) -> MsdVector:
    """Matrix-based distances ``tr{Sigma_c^-1 D Sigma_r^-1 D^T}``.

    With ``D = X_n - M`` the trace equals ``||L_c^-1 D L_r^-T||_F^2``, so
    the batch needs two triangular solves against factors computed once,
    never the ``cr x cr`` matrix.
    """
    n, c, r = data.data.shape
    if (c, r) != (params.n_rows, params.n_cols):
        raise DimensionMismatch(
            f'dataset matrices are {c}x{r} but the parameters describe '
            f'{params.n_rows}x{params.n_cols} matrices')
    dev = data.data - params.mean
    # L_c^-1 applied to every D_n at once: (c, N * r)
    left = params.col_factor.whiten(dev.transpose(1, 0, 2).reshape(c, n * r))
    # L_r^-1 applied to every (L_c^-1 D_n)^T: (r, N * c)
    left = left.reshape(c, n, r).transpose(2, 1, 0).reshape(r, n * c)
    both = params.row_factor.whiten(left).reshape(r, n, c)
    values = np.einsum('knc,knc->n', both, both)
    return MsdVector(values=values, kind=MATRIX_BASED, dof=c * r)


def msd_vector(vectors: np.ndarray, params: MvnParams) -> MsdVector:
    """Vector-based distances ``(x_n - mu)^T Sigma^-1 (x_n - mu)``.

    Args:
        vectors (np.ndarray): ``(N, d)`` array, or a :class:`MatrixDataset`
            which is vectorized first.
        params (MvnParams): Mean and covariance of the vectorized data.
    """
    if isinstance(vectors, MatrixDataset):
        vectors = vectors.vectorize()
    vectors = np.atleast_2d(np.asarray(vectors, dtype=np.float64))
    if vectors.shape[1] != params.dim:
        raise DimensionMismatch(
            f'vectors have dimension {vectors.shape[1]} but the parameters '
            f'have dimension {params.dim}')
    white = params.factor.whiten((vectors - params.mean).T)
    values = np.einsum('dn,dn->n', white, white)
    return MsdVector(values=values, kind=VECTOR_BASED, dof=params.dim)
