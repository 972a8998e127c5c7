"""Distance of a covariance from the Kronecker family.

A ``cr x cr`` matrix ``S`` is rearranged into the ``r^2 x c^2`` matrix
``R(S)`` whose rows are the flattened ``c x c`` blocks of ``S``. Then
``R(A kron B) = vec(A) vec(B)^T`` has rank one and the best Kronecker
approximation of ``S`` in Frobenius norm comes from the leading singular
pair of ``R(S)``.
"""
from typing import List, Sequence, Tuple

import numpy as np

from matnormdiag.core import MatrixDataset, spd_factorize
from matnormdiag.core.exceptions import DimensionMismatch, RejectionExhausted
from .rng import RngStream
from .samplers import DEFAULT_CONDITION_CAP, random_spd

RESIDUAL_THRESHOLD = 0.05
MAX_REDRAWS = 100


def rearrange(sigma: np.ndarray, n_rows: int, n_cols: int) -> np.ndarray:
    """Rearrange ``sigma`` (``cr x cr``) into ``r^2 x c^2`` block rows."""
    sigma = np.asarray(sigma, dtype=np.float64)
    d = n_rows * n_cols
    if sigma.shape != (d, d):
        raise DimensionMismatch(
            f'expected a {d}x{d} matrix for c={n_rows}, r={n_cols}, '
            f'got {sigma.shape}')
    blocks = sigma.reshape(n_cols, n_rows, n_cols, n_rows)
    return blocks.transpose(0, 2, 1, 3).reshape(n_cols * n_cols,
                                                n_rows * n_rows)


def _relative_tail(singular_values: np.ndarray) -> float:
    total = np.sum(singular_values**2)
    if total == 0:
        return 0.0
    return float(np.sqrt(np.sum(singular_values[1:]**2) / total))


def kronecker_residual(sigma: np.ndarray, n_rows: int, n_cols: int) -> float:
    """Relative Frobenius distance of ``sigma`` to its nearest ``A kron B``.
    """
    singular_values = np.linalg.svd(
        rearrange(sigma, n_rows, n_cols), compute_uv=False)
    return _relative_tail(singular_values)


def nearest_kronecker(sigma: np.ndarray, n_rows: int,
                      n_cols: int) -> Tuple[np.ndarray, np.ndarray]:
    """Best Frobenius approximation ``sigma ~ row_part kron col_part``.

    Returns:
        tuple: ``(col_part, row_part)`` of shapes ``(c, c)`` and ``(r, r)``,
        signed so that both have positive trace.
    """
    u, s, vt = np.linalg.svd(rearrange(sigma, n_rows, n_cols))
    scale = np.sqrt(s[0])
    row_part = (scale * u[:, 0]).reshape(n_cols, n_cols)
    col_part = (scale * vt[0]).reshape(n_rows, n_rows)
    if np.trace(row_part) < 0:
        row_part, col_part = -row_part, -col_part
    return col_part, row_part


def kronecker_sum_residual(col_covs: Sequence[np.ndarray],
                           row_covs: Sequence[np.ndarray]) -> float:
    """Residual of ``sum_k row_covs[k] kron col_covs[k]``, computed from the
    factors without forming the ``cr x cr`` sum."""
    left = np.stack([np.ravel(a) for a in row_covs], axis=1)
    right = np.stack([np.ravel(b) for b in col_covs], axis=1)
    _, left_r = np.linalg.qr(left)
    _, right_r = np.linalg.qr(right)
    singular_values = np.linalg.svd(left_r @ right_r.T, compute_uv=False)
    return _relative_tail(singular_values)


def _check_nonkron_shape(n_rows: int, n_cols: int) -> None:
    if n_rows < 1 or n_cols < 1 or n_rows * n_cols < 2:
        raise ValueError(
            f'need c, r >= 1 and cr >= 2, but got c={n_rows}, r={n_cols}')


def random_nonkron_spd(stream: RngStream,
                       n_rows: int,
                       n_cols: int,
                       condition_cap: float = DEFAULT_CONDITION_CAP,
                       threshold: float = RESIDUAL_THRESHOLD,
                       max_redraws: int = MAX_REDRAWS) -> np.ndarray:
    """Random SPD ``cr x cr`` matrix bounded away from every Kronecker
    product.

    Draws :func:`random_spd` candidates and rejects those whose nearest
    Kronecker residual is below ``threshold``. With ``c == 1`` or ``r == 1``
    every matrix is a Kronecker product and the rejection is exhausted.
    """
    _check_nonkron_shape(n_rows, n_cols)
    for attempt in range(max_redraws + 1):
        sigma = random_spd(
            stream.derive(attempt), n_rows * n_cols, condition_cap)
        if kronecker_residual(sigma, n_rows, n_cols) >= threshold:
            return sigma
    raise RejectionExhausted(
        f'no covariance with Kronecker residual >= {threshold} after '
        f'{max_redraws} redraws (c={n_rows}, r={n_cols})')


def random_kronecker_sum(
        stream: RngStream,
        n_rows: int,
        n_cols: int,
        n_terms: int = 2,
        condition_cap: float = DEFAULT_CONDITION_CAP,
        threshold: float = RESIDUAL_THRESHOLD,
        max_redraws: int = MAX_REDRAWS) -> List[Tuple[np.ndarray, np.ndarray]]:
    """Factors ``[(col_cov_k, row_cov_k)]`` of a non-separable covariance
    ``sum_k row_cov_k kron col_cov_k``.

    Each term is SPD, so the sum is SPD. Used where the dense
    :func:`random_nonkron_spd` would not fit in memory.
    """
    _check_nonkron_shape(n_rows, n_cols)
    if n_terms < 2:
        raise ValueError(f'n_terms should be at least 2, but got {n_terms}')
    for attempt in range(max_redraws + 1):
        base = stream.derive(attempt)
        terms = [(random_spd(base.derive(k, 0), n_rows, condition_cap),
                  random_spd(base.derive(k, 1), n_cols, condition_cap))
                 for k in range(n_terms)]
        residual = kronecker_sum_residual([t[0] for t in terms],
                                          [t[1] for t in terms])
        if residual >= threshold:
            return terms
    raise RejectionExhausted(
        f'no Kronecker sum with residual >= {threshold} after {max_redraws} '
        f'redraws (c={n_rows}, r={n_cols})')


def sample_kronecker_sum(stream: RngStream, mean: np.ndarray,
                         terms: Sequence[Tuple[np.ndarray, np.ndarray]],
                         count: int) -> MatrixDataset:
    """Draw ``M + sum_k L_c,k Z_k L_r,k^T`` with independent ``Z_k``.

    ``vec(X)`` then has covariance ``sum_k row_cov_k kron col_cov_k`` and
    no ``cr x cr`` matrix is ever formed.
    """
    mean = np.asarray(mean, dtype=np.float64)
    if count < 1:
        raise ValueError(f'count should be at least 1, but got {count}')
    out = np.broadcast_to(mean, (count, ) + mean.shape).copy()
    for k, (col_cov, row_cov) in enumerate(terms):
        if col_cov.shape[0] != mean.shape[0] or \
                row_cov.shape[0] != mean.shape[1]:
            raise DimensionMismatch(
                f'term {k} has factors {col_cov.shape} and {row_cov.shape} '
                f'for a {mean.shape} mean')
        lower_c = spd_factorize(col_cov).lower
        lower_r = spd_factorize(row_cov).lower
        z = stream.derive(k).generator().standard_normal(out.shape)
        out += lower_c @ z @ lower_r.T
    return MatrixDataset(out)
