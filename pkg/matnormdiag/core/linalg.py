"""Dense linear algebra shared by every other sub-package.

Covariances are never inverted explicitly: they are factorized once with
:func:`spd_factorize` and applied through triangular solves.
"""
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, cho_solve, cholesky, solve_triangular

from .exceptions import DimensionMismatch, NotPositiveDefinite

SYMMETRY_TOL = 1e-12
PIVOT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class SpdFactor:
    """Cholesky factor of a symmetric positive-definite matrix.

    Args:
        lower (np.ndarray): Lower triangular ``L`` with ``L @ L.T == S``.
        log_determinant (float): ``log|S| = 2 * sum(log(diag(L)))``.
    """
    lower: np.ndarray
    log_determinant: float

    @property
    def dim(self) -> int:
        return self.lower.shape[0]

    def reconstruct(self) -> np.ndarray:
        return self.lower @ self.lower.T

    def whiten(self, b: np.ndarray) -> np.ndarray:
        """Apply ``L^{-1}`` to the leading dimension of ``b``."""
        b = np.asarray(b, dtype=np.float64)
        _check_leading_dim(self.dim, b)
        return solve_triangular(
            self.lower, b, lower=True, check_finite=False)

    def solve(self, b: np.ndarray) -> np.ndarray:
        return solve_spd(self, b)


def _check_leading_dim(dim: int, b: np.ndarray) -> None:
    if b.ndim not in (1, 2) or b.shape[0] != dim:
        raise DimensionMismatch(
            f'expected an operand with leading dimension {dim}, '
            f'got shape {b.shape}')


def _as_finite_matrix(a, name: str) -> np.ndarray:
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2:
        raise DimensionMismatch(f'{name} must be 2-D, got shape {a.shape}')
    if not np.all(np.isfinite(a)):
        raise ValueError(f'{name} contains non-finite entries')
    return a


def symmetrize(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a + a.T)


def is_symmetric(a: np.ndarray, rtol: float = SYMMETRY_TOL) -> bool:
    scale = np.max(np.abs(a)) if a.size else 0.0
    return bool(np.max(np.abs(a - a.T), initial=0.0) <= rtol * scale)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; block ``(i, j)`` of the result is ``a[i, j] * b``."""
    a = _as_finite_matrix(a, 'a')
    b = _as_finite_matrix(b, 'b')
    return np.kron(a, b)


def vectorize(x: np.ndarray) -> np.ndarray:
    """Column-major stacking of a matrix, or of every matrix of a batch.

    Entry ``(i, j)`` of a ``c x r`` matrix lands at position ``j * c + i``,
    the order under which ``vec(A X B) = (B^T kron A) vec(X)``.

    Args:
        x (np.ndarray): A ``(c, r)`` matrix or an ``(N, c, r)`` batch.

    Returns:
        np.ndarray: A ``(c * r,)`` vector or an ``(N, c * r)`` array.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.ndim == 2:
        return x.reshape(-1, order='F')
    if x.ndim == 3:
        return x.transpose(0, 2, 1).reshape(x.shape[0], -1)
    raise DimensionMismatch(f'cannot vectorize an array of shape {x.shape}')


def unvectorize(v: np.ndarray, n_rows: int, n_cols: int) -> np.ndarray:
    """Inverse of :func:`vectorize` for a vector or an ``(N, d)`` batch."""
    v = np.asarray(v, dtype=np.float64)
    d = n_rows * n_cols
    if v.shape[-1] != d:
        raise DimensionMismatch(
            f'cannot reshape length {v.shape[-1]} into {n_rows}x{n_cols}')
    if v.ndim == 1:
        return v.reshape((n_rows, n_cols), order='F')
    if v.ndim == 2:
        return v.reshape(v.shape[0], n_cols, n_rows).transpose(0, 2, 1)
    raise DimensionMismatch(f'cannot unvectorize an array of shape {v.shape}')


def spd_factorize(s: np.ndarray,
                  pivot_tol: float = PIVOT_TOL,
                  symmetry_tol: float = SYMMETRY_TOL) -> SpdFactor:
    """Factorize a symmetric positive-definite matrix.

    The input is averaged with its transpose first, so asymmetries below
    ``symmetry_tol`` (relative to the largest entry) are absorbed.

    Args:
        s (np.ndarray): Square symmetric matrix.
        pivot_tol (float): Smallest admissible pivot relative to the largest
            diagonal entry. Defaults to 1e-12.
        symmetry_tol (float): Relative asymmetry tolerance.
            Defaults to 1e-12.

    Returns:
        SpdFactor: The lower factor and the log-determinant.
    """
    s = _as_finite_matrix(s, 's')
    if s.shape[0] != s.shape[1] or s.shape[0] == 0:
        raise DimensionMismatch(
            f'expected a non-empty square matrix, got shape {s.shape}')
    if not is_symmetric(s, symmetry_tol):
        raise ValueError('matrix is not symmetric within relative tolerance '
                         f'{symmetry_tol}')
    s = symmetrize(s)
    try:
        lower = cholesky(s, lower=True, check_finite=False)
    except LinAlgError as e:
        raise NotPositiveDefinite(f'cholesky factorization failed: {e}')
    pivots = np.diag(lower)**2
    largest = np.max(np.diag(s))
    if not largest > 0 or pivots.min() <= pivot_tol * largest:
        raise NotPositiveDefinite(
            f'smallest pivot {pivots.min():.3e} is below {pivot_tol:g} x '
            f'the largest diagonal entry {largest:.3e}')
    log_determinant = 2.0 * float(np.sum(np.log(np.diag(lower))))
    return SpdFactor(lower=lower, log_determinant=log_determinant)


def solve_spd(f: SpdFactor, b: np.ndarray) -> np.ndarray:
    """Return ``S^{-1} b`` through two triangular solves."""
    b = np.asarray(b, dtype=np.float64)
    _check_leading_dim(f.dim, b)
    return cho_solve((f.lower, True), b, check_finite=False)
