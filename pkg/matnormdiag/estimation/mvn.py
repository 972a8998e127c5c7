from typing import Union

import numpy as np

from matnormdiag.core import MatrixDataset, MvnParams, symmetrize
from matnormdiag.core.exceptions import CovarianceSingular, NotPositiveDefinite


def mvn_mle(vectors: Union[np.ndarray, MatrixDataset],
            ddof: int = 1) -> MvnParams:
    """Sample mean and unstructured covariance of vectorized data.

    Args:
        vectors (np.ndarray | MatrixDataset): ``(N, d)`` observations; a
            dataset is vectorized first.
        ddof (int): The covariance is divided by ``N - ddof``. The
            diagnostic plots use 1, the likelihood ratio test uses 0 (the
            actual maximum likelihood scaling). Defaults to 1.

    Returns:
        MvnParams: The fitted mean and covariance.
    """
    if isinstance(vectors, MatrixDataset):
        vectors = vectors.vectorize()
    vectors = np.atleast_2d(np.asarray(vectors, dtype=np.float64))
    n, d = vectors.shape
    if n < 2:
        raise ValueError(f'need at least 2 samples, but got {n}')
    if ddof not in (0, 1):
        raise ValueError(f'ddof should be 0 or 1, but got {ddof}')
    if d >= n:
        raise CovarianceSingular(
            f'the unstructured covariance needs N > d, but got d={d} >= '
            f'N={n}',
            reason='dimension')
    mean = vectors.mean(axis=0)
    dev = vectors - mean
    cov = symmetrize(dev.T @ dev / (n - ddof))
    try:
        return MvnParams(mean, cov)
    except NotPositiveDefinite as e:
        raise CovarianceSingular(
            f'the sample covariance is numerically rank deficient: {e}',
            reason='rank') from e
