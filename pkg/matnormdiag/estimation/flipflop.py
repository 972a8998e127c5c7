"""Maximum likelihood fit of the matrix-variate normal model.

The covariance factors have no closed form jointly, but each one does given
the other. :func:`flipflop_mle` alternates the two closed-form updates

    Sigma_c <- 1 / (N r) * sum_n D_n Sigma_r^-1 D_n^T
    Sigma_r <- 1 / (N c) * sum_n D_n^T Sigma_c^-1 D_n

with ``D_n = X_n - M_hat``, each of which maximizes the likelihood in one
factor, so the likelihood never decreases.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
from mmengine.logging import print_log

from matnormdiag.core import (MatNormalParams, MatrixDataset, SpdFactor,
                              spd_factorize, symmetrize)
from matnormdiag.core.exceptions import CovarianceSingular, NotPositiveDefinite
from matnormdiag.distances import msd_matrix

INIT_IDENTITY = 'identity'
INIT_DIAGONAL = 'diagonal'
FLIPFLOP_PIVOT_TOL = 1e-10

_LOG_2PI = float(np.log(2.0 * np.pi))


@dataclass(frozen=True)
class FlipFlopConfig:
    """Stopping rule and starting point of :func:`flipflop_mle`.

    Args:
        tolerance (float): Stop when the relative Frobenius change of both
            trace-normalized factors drops below this value. Defaults to
            1e-8.
        max_iterations (int): Iteration cap. Defaults to 100.
        init_row_cov (str): ``'identity'`` starts from ``Sigma_r = I``,
            ``'diagonal'`` from the diagonal of the row second moment
            ``sum_n D_n^T D_n / (N c)``. Defaults to ``'identity'``.
        pivot_tol (float): Relative pivot threshold below which an updated
            factor is declared singular. Defaults to 1e-10.
    """
    tolerance: float = 1e-8
    max_iterations: int = 100
    init_row_cov: str = INIT_IDENTITY
    pivot_tol: float = FLIPFLOP_PIVOT_TOL

    def __post_init__(self):
        if not 0 < self.tolerance < 1:
            raise ValueError(
                f'tolerance should be in (0, 1), but got {self.tolerance}')
        if int(self.max_iterations) != self.max_iterations or \
                self.max_iterations < 1:
            raise ValueError('max_iterations should be a positive integer, '
                             f'but got {self.max_iterations}')
        if self.init_row_cov not in (INIT_IDENTITY, INIT_DIAGONAL):
            raise ValueError(
                f'init_row_cov should be {INIT_IDENTITY!r} or '
                f'{INIT_DIAGONAL!r}, but got {self.init_row_cov!r}')
        if not 0 <= self.pivot_tol < 1:
            raise ValueError(
                f'pivot_tol should be in [0, 1), but got {self.pivot_tol}')
        object.__setattr__(self, 'max_iterations', int(self.max_iterations))

    def to_dict(self) -> dict:
        return dict(
            tolerance=self.tolerance,
            max_iterations=self.max_iterations,
            init_row_cov=self.init_row_cov,
            pivot_tol=self.pivot_tol)


@dataclass(frozen=True, eq=False)
class FlipFlopReport:
    """Outcome of :func:`flipflop_mle`.

    Args:
        params (MatNormalParams): Fitted parameters with
            ``trace(col_cov) == c``.
        iterations_used (int): Number of completed update cycles.
        log_likelihood_trace (np.ndarray): Log-likelihood after every cycle.
        converged (bool): Whether the tolerance was reached before the
            iteration cap.
    """
    params: MatNormalParams
    iterations_used: int
    log_likelihood_trace: np.ndarray = field(repr=False)
    converged: bool

    def to_dict(self) -> dict:
        return dict(
            params=self.params.to_dict(),
            iterations_used=self.iterations_used,
            log_likelihood_trace=[
                float(v) for v in self.log_likelihood_trace
            ],
            converged=self.converged)

    @classmethod
    def from_dict(cls, info: dict) -> 'FlipFlopReport':
        return cls(
            params=MatNormalParams.from_dict(info['params']),
            iterations_used=int(info['iterations_used']),
            log_likelihood_trace=np.array(
                info['log_likelihood_trace'], dtype=np.float64),
            converged=bool(info['converged']))


def matnormal_mean(data: MatrixDataset) -> np.ndarray:
    """Entrywise sample mean of the N matrices."""
    return data.data.mean(axis=0)


def matnormal_loglik(data: MatrixDataset, params: MatNormalParams) -> float:
    """Sum of the matrix normal log-densities of every sample.

    ``log p(X) = -cr/2 log(2 pi) - c/2 log|Sigma_r| - r/2 log|Sigma_c|
    - 1/2 tr{Sigma_c^-1 (X - M) Sigma_r^-1 (X - M)^T}``
    """
    n, c, r = data.data.shape
    distances = msd_matrix(data, params).values
    return float(-0.5 * (n * c * r * _LOG_2PI +
                         n * c * params.row_factor.log_determinant +
                         n * r * params.col_factor.log_determinant +
                         np.sum(distances)))


def _factorize(cov: np.ndarray, iteration: int, name: str,
               pivot_tol: float) -> SpdFactor:
    try:
        return spd_factorize(cov, pivot_tol=pivot_tol)
    except NotPositiveDefinite as e:
        raise NotPositiveDefinite(
            f'flip-flop iteration {iteration} produced a singular {name}: '
            f'{e}',
            iteration=iteration) from e


def _relative_change(new: np.ndarray, old: np.ndarray) -> float:
    return float(np.linalg.norm(new - old) / np.linalg.norm(old))


def _initial_row_cov(dev: np.ndarray, init: str) -> np.ndarray:
    n, c, r = dev.shape
    if init == INIT_IDENTITY:
        return np.eye(r)
    return np.diag(np.einsum('nab,nab->b', dev, dev) / (n * c))


def flipflop_mle(data: MatrixDataset,
                 config: Optional[FlipFlopConfig] = None) -> FlipFlopReport:
    """Fit ``(M, Sigma_c, Sigma_r)`` by alternating the two factor updates.

    Args:
        data (MatrixDataset): N samples of ``c x r`` matrices with ``N r > c``
            and ``N c > r``.
        config (FlipFlopConfig, optional): Stopping rule. Defaults to
            ``FlipFlopConfig()``.

    Returns:
        FlipFlopReport: Trace-normalized parameters and the likelihood
        trace. Hitting the iteration cap is reported through ``converged``,
        not raised.
    """
    config = config or FlipFlopConfig()
    n, c, r = data.data.shape
    if n < 2:
        raise ValueError(f'need at least 2 samples, but got {n}')
    if n * r <= c or n * c <= r:
        raise CovarianceSingular(
            f'flip-flop needs N*r > c and N*c > r, but got N={n}, c={c}, '
            f'r={r}',
            reason='dimension')

    mean = matnormal_mean(data)
    dev = data.data - mean
    # stacked columns [D_1 ... D_N] and rows [D_1^T ... D_N^T]
    by_col = dev.transpose(1, 0, 2).reshape(c, n * r)
    by_row = dev.transpose(2, 0, 1).reshape(r, n * c)

    row_cov = _initial_row_cov(dev, config.init_row_cov)
    _factorize(row_cov, 0, 'initial row covariance', config.pivot_tol)

    trace: List[float] = []
    previous = None
    converged = False
    iteration = 0
    col_cov = None
    for iteration in range(1, config.max_iterations + 1):
        row_factor = _factorize(row_cov, iteration, 'row covariance',
                                config.pivot_tol)
        white = row_factor.whiten(by_row).reshape(r * n, c)
        col_cov = symmetrize(white.T @ white / (n * r))

        col_factor = _factorize(col_cov, iteration, 'column covariance',
                                config.pivot_tol)
        white = col_factor.whiten(by_col).reshape(c * n, r)
        row_cov = symmetrize(white.T @ white / (n * c))
        row_factor = _factorize(row_cov, iteration, 'row covariance',
                                config.pivot_tol)

        # right after the row update the summed distances equal N c r
        trace.append(-0.5 * n *
                     (c * r * (_LOG_2PI + 1.0) +
                      c * row_factor.log_determinant +
                      r * col_factor.log_determinant))

        scale = c / np.trace(col_cov)
        current = (col_cov * scale, row_cov / scale)
        if previous is not None:
            change = max(
                _relative_change(current[0], previous[0]),
                _relative_change(current[1], previous[1]))
            if change < config.tolerance:
                converged = True
                break
        previous = current

    params = MatNormalParams(mean, col_cov, row_cov).normalized()
    if converged:
        print_log(
            f'flip-flop converged after {iteration} iterations '
            f'(c={c}, r={r}, N={n})',
            logger='current',
            level=logging.DEBUG)
    else:
        print_log(
            f'flip-flop did not reach tolerance {config.tolerance} within '
            f'{config.max_iterations} iterations (c={c}, r={r}, N={n})',
            logger='current',
            level=logging.WARNING)
    return FlipFlopReport(
        params=params,
        iterations_used=iteration,
        log_likelihood_trace=np.asarray(trace, dtype=np.float64),
        converged=converged)
