from typing import Optional, Tuple, Union

import numpy as np

from matnormdiag.core import (MatNormalParams, MatrixDataset, MvnParams,
                              symmetrize)
from matnormdiag.core.exceptions import DimensionMismatch
from .rng import RngStream

DEFAULT_CONDITION_CAP = 100.0


def _check_count(count: int, minimum: int) -> None:
    if not isinstance(count, (int, np.integer)) or count < minimum:
        raise ValueError(
            f'count should be an integer >= {minimum}, but got {count}')


def sample_standard_normal(stream: RngStream, count: int) -> np.ndarray:
    """``count`` i.i.d. standard normal deviates drawn from ``stream``."""
    _check_count(count, 0)
    return stream.generator().standard_normal(count)


def random_orthogonal(gen: np.random.Generator, dim: int) -> np.ndarray:
    """Haar orthogonal matrix from the QR factorization of a Gaussian."""
    q, r = np.linalg.qr(gen.standard_normal((dim, dim)))
    return q * np.sign(np.diag(r))


def random_spd(stream: RngStream,
               dim: int,
               condition_cap: float = DEFAULT_CONDITION_CAP) -> np.ndarray:
    """Random ``Q D Q^T`` with log-uniform spectrum on ``[1, condition_cap]``.

    Args:
        stream (RngStream): Source of randomness.
        dim (int): Matrix dimension, at least 1.
        condition_cap (float): Upper bound of the condition number, at
            least 1. Defaults to 100.
    """
    if dim < 1:
        raise ValueError(f'dim should be at least 1, but got {dim}')
    if condition_cap < 1:
        raise ValueError(
            f'condition_cap should be at least 1, but got {condition_cap}')
    gen = stream.generator()
    q = random_orthogonal(gen, dim)
    spectrum = np.exp(gen.uniform(0.0, np.log(condition_cap), size=dim))
    return symmetrize((q * spectrum) @ q.T)


def random_matnormal_params(
        stream: RngStream,
        n_rows: int,
        n_cols: int,
        condition_cap: float = DEFAULT_CONDITION_CAP) -> MatNormalParams:
    """Random mean and trace-normalized Kronecker factors."""
    mean = stream.derive(0).generator().standard_normal((n_rows, n_cols))
    col_cov = random_spd(stream.derive(1), n_rows, condition_cap)
    row_cov = random_spd(stream.derive(2), n_cols, condition_cap)
    return MatNormalParams(mean, col_cov, row_cov).normalized()


def sample_matnormal(stream: RngStream, params: MatNormalParams,
                     count: int) -> MatrixDataset:
    """Draw ``M + L_c Z L_r^T`` with ``Z`` a ``c x r`` standard normal matrix.

    This realizes the covariance ``Sigma_r kron Sigma_c`` of ``vec(X)``
    without forming the ``cr x cr`` matrix.
    """
    _check_count(count, 1)
    z = stream.generator().standard_normal(
        (count, params.n_rows, params.n_cols))
    lower_c = params.col_factor.lower
    lower_r = params.row_factor.lower
    return MatrixDataset(params.mean + lower_c @ z @ lower_r.T)


def sample_mvn(
    stream: RngStream,
    params: MvnParams,
    count: int,
    shape: Optional[Tuple[int, int]] = None
) -> Union[np.ndarray, MatrixDataset]:
    """Draw ``mu + L z`` for ``count`` samples.

    Args:
        stream (RngStream): Source of randomness.
        params (MvnParams): Mean and covariance.
        count (int): Number of samples, at least 1.
        shape (tuple, optional): ``(c, r)`` with ``c * r == d``. When given,
            the vectors are folded back into matrices with the column-major
            vec order and a :class:`MatrixDataset` is returned.

    Returns:
        np.ndarray | MatrixDataset: ``(count, d)`` vectors, or the dataset.
    """
    _check_count(count, 1)
    if shape is not None and shape[0] * shape[1] != params.dim:
        raise DimensionMismatch(
            f'cannot fold dimension {params.dim} into shape {tuple(shape)}')
    z = stream.generator().standard_normal((count, params.dim))
    vectors = params.mean + z @ params.factor.lower.T
    if shape is None:
        return vectors
    return MatrixDataset.from_vectors(vectors, *shape)
