from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import numpy as np

from .exceptions import DimensionMismatch
from .linalg import (SpdFactor, is_symmetric, kron, spd_factorize,
                     unvectorize, vectorize)


def _check_covariance(cov: np.ndarray, dim: int, name: str) -> None:
    if cov.shape != (dim, dim):
        raise DimensionMismatch(
            f'{name} must have shape ({dim}, {dim}), got {cov.shape}')
    if not is_symmetric(cov):
        raise ValueError(f'{name} is not symmetric')


@dataclass(frozen=True, eq=False)
class MatrixDataset:
    """N observations of a ``c x r`` real matrix.

    Args:
        data (np.ndarray): Array of shape ``(N, c, r)``.
    """
    data: np.ndarray

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.float64)
        if data.ndim != 3:
            raise DimensionMismatch(
                f'data must have shape (N, c, r), got {data.shape}')
        if data.shape[0] < 1 or data.shape[1] < 1 or data.shape[2] < 1:
            raise ValueError(f'empty dataset of shape {data.shape}')
        if not np.all(np.isfinite(data)):
            raise ValueError('dataset contains non-finite entries')
        object.__setattr__(self, 'data', data)

    @classmethod
    def from_vectors(cls, vectors: np.ndarray, n_rows: int,
                     n_cols: int) -> 'MatrixDataset':
        """Build a dataset from vectorized observations of shape (N, cr)."""
        vectors = np.atleast_2d(vectors)
        return cls(unvectorize(vectors, n_rows, n_cols))

    @property
    def n_samples(self) -> int:
        return self.data.shape[0]

    @property
    def n_rows(self) -> int:
        return self.data.shape[1]

    @property
    def n_cols(self) -> int:
        return self.data.shape[2]

    @property
    def dim(self) -> int:
        """Dimension ``d = c * r`` of the vectorized observations."""
        return self.n_rows * self.n_cols

    def vectorize(self) -> np.ndarray:
        return vectorize(self.data)

    def __len__(self) -> int:
        return self.n_samples

    def __getitem__(self, idx: int) -> np.ndarray:
        return self.data[idx]

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.data)


@dataclass(frozen=True, eq=False)
class MatNormalParams:
    """Parameters ``(M, Sigma_c, Sigma_r)`` of a matrix-variate normal law.

    ``vec(X)`` then has covariance ``row_cov kron col_cov``. Only that
    product is identified: ``(a * col_cov, row_cov / a)`` describes the same
    law for every ``a > 0``.
    """
    mean: np.ndarray
    col_cov: np.ndarray
    row_cov: np.ndarray

    def __post_init__(self):
        mean = np.asarray(self.mean, dtype=np.float64)
        if mean.ndim != 2:
            raise DimensionMismatch(
                f'mean must be a matrix, got shape {mean.shape}')
        col_cov = np.asarray(self.col_cov, dtype=np.float64)
        row_cov = np.asarray(self.row_cov, dtype=np.float64)
        _check_covariance(col_cov, mean.shape[0], 'col_cov')
        _check_covariance(row_cov, mean.shape[1], 'row_cov')
        object.__setattr__(self, 'mean', mean)
        object.__setattr__(self, 'col_cov', col_cov)
        object.__setattr__(self, 'row_cov', row_cov)
        # fail early on singular inputs
        self.col_factor, self.row_factor

    @property
    def n_rows(self) -> int:
        return self.mean.shape[0]

    @property
    def n_cols(self) -> int:
        return self.mean.shape[1]

    @cached_property
    def col_factor(self) -> SpdFactor:
        return spd_factorize(self.col_cov)

    @cached_property
    def row_factor(self) -> SpdFactor:
        return spd_factorize(self.row_cov)

    def rescaled(self, scale: float) -> 'MatNormalParams':
        """Return ``(M, scale * Sigma_c, Sigma_r / scale)``."""
        return MatNormalParams(self.mean, self.col_cov * scale,
                               self.row_cov / scale)

    def normalized(self) -> 'MatNormalParams':
        """Rescale so that ``trace(col_cov) == c``."""
        return self.rescaled(self.n_rows / np.trace(self.col_cov))

    def kron_cov(self) -> np.ndarray:
        """Dense ``row_cov kron col_cov``, the covariance of ``vec(X)``."""
        return kron(self.row_cov, self.col_cov)

    def to_mvn(self) -> 'MvnParams':
        return MvnParams(vectorize(self.mean), self.kron_cov())

    def to_dict(self) -> dict:
        return dict(
            mean=self.mean.tolist(),
            col_cov=self.col_cov.tolist(),
            row_cov=self.row_cov.tolist())

    @classmethod
    def from_dict(cls, info: dict) -> 'MatNormalParams':
        return cls(
            np.array(info['mean'], dtype=np.float64),
            np.array(info['col_cov'], dtype=np.float64),
            np.array(info['row_cov'], dtype=np.float64))


@dataclass(frozen=True, eq=False)
class MvnParams:
    """Mean vector and unstructured covariance of a multivariate normal."""
    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self):
        mean = np.asarray(self.mean, dtype=np.float64)
        if mean.ndim != 1:
            raise DimensionMismatch(
                f'mean must be a vector, got shape {mean.shape}')
        cov = np.asarray(self.cov, dtype=np.float64)
        _check_covariance(cov, mean.shape[0], 'cov')
        object.__setattr__(self, 'mean', mean)
        object.__setattr__(self, 'cov', cov)
        self.factor

    @property
    def dim(self) -> int:
        return self.mean.shape[0]

    @cached_property
    def factor(self) -> SpdFactor:
        return spd_factorize(self.cov)

    def to_dict(self) -> dict:
        return dict(mean=self.mean.tolist(), cov=self.cov.tolist())

    @classmethod
    def from_dict(cls, info: dict) -> 'MvnParams':
        return cls(
            np.array(info['mean'], dtype=np.float64),
            np.array(info['cov'], dtype=np.float64))
