"""Monte Carlo check of the estimation error rates of the two distances.

With ``c = r`` the error of the vector-based distance evaluated at fitted
rather than true parameters grows like ``c^2 / sqrt(N)``, the error of the
matrix-based distance like ``c / sqrt(N)``. The experiment measures both
errors on a grid of ``(c, N)`` cells and fits log-log slopes against ``c``
and against ``N``. Only the exponents are tested; the rate constants are
unspecified.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from mmengine.logging import print_log
from scipy.stats import linregress

from matnormdiag.core.exceptions import (CovarianceSingular,
                                         NotPositiveDefinite,
                                         RedrawLimitExceeded)
from matnormdiag.distances import msd_matrix, msd_vector
from matnormdiag.distributions import (RngStream, random_matnormal_params,
                                       sample_matnormal)
from matnormdiag.estimation import FlipFlopConfig, flipflop_mle, mvn_mle
from matnormdiag.utils import ordered_map

MIN_REPLICATIONS = 30
MAX_REDRAW_FRACTION = 0.05

PARAM_ERRORS = ('mean_vector', 'mean_matrix', 'col_cov', 'row_cov',
                'unstructured_cov')
SLOPES = ('slope_vs_c_vector', 'slope_vs_c_matrix', 'slope_vs_n_vector',
          'slope_vs_n_matrix')


def _check_increasing(values: Sequence[int], name: str) -> Tuple[int, ...]:
    values = tuple(int(v) for v in values)
    if not values:
        raise ValueError(f'{name} should not be empty')
    if any(v < 1 for v in values) or any(
            a >= b for a, b in zip(values, values[1:])):
        raise ValueError(
            f'{name} should be strictly increasing positive integers, '
            f'but got {values}')
    return values


@dataclass(frozen=True)
class RateGrid:
    """Cells ``(c, N)`` of the rate experiment, all with ``c = r``.

    Args:
        c_values (Sequence[int]): Matrix sizes. Defaults to (2, 4, 8).
        n_values (Sequence[int]): Training sample sizes, each above
            ``c^2`` for every ``c``. Defaults to (250, 1000, 4000).
        replications (int): Replications per cell. Fewer than 30 is
            accepted with a warning. Defaults to 200.
        probe_samples (int): Fresh samples the distance errors are
            averaged over. Defaults to 100.
    """
    c_values: Tuple[int, ...] = (2, 4, 8)
    n_values: Tuple[int, ...] = (250, 1000, 4000)
    replications: int = 200
    probe_samples: int = 100

    def __post_init__(self):
        c_values = _check_increasing(self.c_values, 'c_values')
        n_values = _check_increasing(self.n_values, 'n_values')
        if n_values[0] <= c_values[-1]**2:
            raise ValueError(
                f'every cell needs N > c^2 for the unstructured fit, but '
                f'N={n_values[0]} and c={c_values[-1]}')
        if self.replications < 1 or self.probe_samples < 1:
            raise ValueError('replications and probe_samples should be '
                             'positive')
        if self.replications < MIN_REPLICATIONS:
            print_log(
                f'{self.replications} replications per cell are too few for '
                'stable slopes (at least 30 recommended)',
                logger='current',
                level=logging.WARNING)
        object.__setattr__(self, 'c_values', c_values)
        object.__setattr__(self, 'n_values', n_values)

    @property
    def cells(self) -> List[Tuple[int, int]]:
        return [(c, n) for c in self.c_values for n in self.n_values]

    @property
    def max_redraws(self) -> int:
        """Failed replications tolerated per cell."""
        return max(1, int(MAX_REDRAW_FRACTION * self.replications))

    def to_dict(self) -> dict:
        return dict(
            c_values=list(self.c_values),
            n_values=list(self.n_values),
            replications=self.replications,
            probe_samples=self.probe_samples)


@dataclass(frozen=True)
class SlopeFit:
    """Least squares slope of ``log(error)`` and its standard error."""
    slope: float
    stderr: float

    def to_dict(self) -> dict:
        return dict(slope=self.slope, stderr=self.stderr)


@dataclass(frozen=True)
class RateCell:
    """Mean errors of one ``(c, N)`` cell over its replications."""
    c: int
    n: int
    matrix_error: float
    vector_error: float
    matrix_error_sd: float
    vector_error_sd: float
    param_errors: Dict[str, float] = field(default_factory=dict)
    redraws: int = 0

    def to_dict(self) -> dict:
        return dict(
            c=self.c,
            n=self.n,
            matrix_error=self.matrix_error,
            vector_error=self.vector_error,
            matrix_error_sd=self.matrix_error_sd,
            vector_error_sd=self.vector_error_sd,
            param_errors=dict(self.param_errors),
            redraws=self.redraws)


@dataclass(frozen=True)
class RateReport:
    """Cell errors and fitted slopes of :func:`run_rate_experiment`.

    Slopes are None when the grid has a single level along the fitted axis
    (``insufficient_grid`` is then True).
    """
    grid: RateGrid
    seed: int
    cells: List[RateCell]
    slopes: Dict[str, Optional[SlopeFit]]
    param_slopes_vs_n: Dict[str, Optional[SlopeFit]]
    insufficient_grid: bool

    @property
    def redraws(self) -> int:
        return sum(cell.redraws for cell in self.cells)

    def cell(self, c: int, n: int) -> RateCell:
        for cell in self.cells:
            if (cell.c, cell.n) == (c, n):
                return cell
        raise KeyError(f'no cell c={c}, N={n}')

    def slope(self, name: str) -> Optional[float]:
        fit = self.slopes[name]
        return None if fit is None else fit.slope

    def to_dict(self) -> dict:

        def fits(table):
            return {
                k: None if v is None else v.to_dict()
                for k, v in table.items()
            }

        return dict(
            grid=self.grid.to_dict(),
            seed=self.seed,
            cells=[cell.to_dict() for cell in self.cells],
            slopes=fits(self.slopes),
            param_slopes_vs_n=fits(self.param_slopes_vs_n),
            insufficient_grid=self.insufficient_grid,
            redraws=self.redraws,
            note='O_p rates: only the exponents are tested, the constants '
            'are unspecified')

    @classmethod
    def from_dict(cls, info: dict) -> 'RateReport':

        def fits(table):
            return {
                k: None if v is None else SlopeFit(**v)
                for k, v in table.items()
            }

        return cls(
            grid=RateGrid(**info['grid']),
            seed=int(info['seed']),
            cells=[RateCell(**cell) for cell in info['cells']],
            slopes=fits(info['slopes']),
            param_slopes_vs_n=fits(info['param_slopes_vs_n']),
            insufficient_grid=bool(info['insufficient_grid']))


def replication_errors(stream: RngStream, c: int, n: int, probe_samples: int,
                       flipflop_cfg: FlipFlopConfig) -> Dict[str, float]:
    """Distance and parameter errors of one replication.

    True parameters, training data and probes come from three children of
    ``stream``. Distances are compared at fitted against true parameters on
    the probes only.
    """
    truth = random_matnormal_params(stream.derive(0), c, c)
    train = sample_matnormal(stream.derive(1), truth, n)
    probes = sample_matnormal(stream.derive(2), truth, probe_samples)

    fit_mat = flipflop_mle(train, flipflop_cfg).params
    fit_vec = mvn_mle(train)
    truth_vec = truth.to_mvn()

    matrix_dev = msd_matrix(probes, fit_mat).values - msd_matrix(
        probes, truth).values
    vector_dev = msd_vector(probes, fit_vec).values - msd_vector(
        probes, truth_vec).values
    return dict(
        matrix=float(np.mean(np.abs(matrix_dev))),
        vector=float(np.mean(np.abs(vector_dev))),
        mean_vector=float(np.linalg.norm(fit_vec.mean - truth_vec.mean)),
        mean_matrix=float(np.linalg.norm(fit_mat.mean - truth.mean)),
        col_cov=float(np.linalg.norm(fit_mat.col_cov - truth.col_cov)),
        row_cov=float(np.linalg.norm(fit_mat.row_cov - truth.row_cov)),
        unstructured_cov=float(np.linalg.norm(fit_vec.cov - truth_vec.cov)))


def _replication_task(task: tuple) -> Tuple[Optional[Dict[str, float]], int]:
    seed, stream_id, c, n, probe_samples, max_attempts, cfg = task
    base = RngStream(seed, stream_id)
    failures = 0
    for attempt in range(max_attempts):
        try:
            return replication_errors(
                base.derive(attempt), c, n, probe_samples,
                FlipFlopConfig(**cfg)), failures
        except (NotPositiveDefinite, CovarianceSingular) as e:
            failures += 1
            print_log(
                f'replication redrawn (c={c}, N={n}, attempt {attempt}): '
                f'{e}',
                logger='current',
                level=logging.DEBUG)
    return None, failures


def _fit_slope(x: Sequence[float], y: Sequence[float]) -> SlopeFit:
    fit = linregress(np.log(x), np.log(y))
    return SlopeFit(float(fit.slope), float(fit.stderr))


def _average_fits(fits: List[SlopeFit]) -> SlopeFit:
    """Mean of independent slope estimates and the standard error of the
    mean."""
    slope = float(np.mean([f.slope for f in fits]))
    stderr = math.sqrt(sum(f.stderr**2 for f in fits)) / len(fits)
    return SlopeFit(slope, stderr)


def _slope_vs_c(grid: RateGrid, table: Dict[Tuple[int, int], float]
                ) -> Optional[SlopeFit]:
    if len(grid.c_values) < 2:
        return None
    return _average_fits([
        _fit_slope(grid.c_values, [table[(c, n)] for c in grid.c_values])
        for n in grid.n_values
    ])


def _slope_vs_n(grid: RateGrid, table: Dict[Tuple[int, int], float]
                ) -> Optional[SlopeFit]:
    if len(grid.n_values) < 2:
        return None
    return _average_fits([
        _fit_slope(grid.n_values, [table[(c, n)] for n in grid.n_values])
        for c in grid.c_values
    ])


def run_rate_experiment(grid: RateGrid,
                        seed: int,
                        parallelism: Optional[int] = None,
                        flipflop_cfg: Optional[FlipFlopConfig] = None,
                        progress: bool = False) -> RateReport:
    """Measure the distance errors on every cell of ``grid``.

    Every replication owns the stream derived from ``(seed, cell index,
    replication index)``; a replication whose fit fails is redrawn from
    the next attempt index. The report is therefore identical for every
    ``parallelism``.

    Args:
        grid (RateGrid): Cells and replication counts.
        seed (int): 64-bit unsigned seed.
        parallelism (int, optional): Worker processes. Defaults to the
            ``MATNORM_DIAG_THREADS`` / CPU count resolution.
        flipflop_cfg (FlipFlopConfig, optional): Flip-flop stopping rule.
        progress (bool): Show a progress bar on stderr.
    """
    flipflop_cfg = flipflop_cfg or FlipFlopConfig()
    root = RngStream(seed)
    attempts = grid.max_redraws + 1
    tasks = []
    for cell_idx, (c, n) in enumerate(grid.cells):
        for rep in range(grid.replications):
            stream = root.derive(cell_idx, rep)
            tasks.append((stream.seed, stream.stream_id, c, n,
                          grid.probe_samples, attempts,
                          flipflop_cfg.to_dict()))
    outcomes = ordered_map(
        _replication_task, tasks, parallelism, progress=progress)

    cells = []
    matrix_table, vector_table = {}, {}
    param_tables = {key: {} for key in PARAM_ERRORS}
    for cell_idx, (c, n) in enumerate(grid.cells):
        chunk = outcomes[cell_idx * grid.replications:(cell_idx + 1) *
                         grid.replications]
        redraws = sum(failures for _, failures in chunk)
        records = [errors for errors, _ in chunk]
        if redraws > grid.max_redraws or any(r is None for r in records):
            raise RedrawLimitExceeded(
                f'cell c={c}, N={n} needed {redraws} redraws, more than '
                f'{grid.max_redraws} ({MAX_REDRAW_FRACTION:.0%} of '
                f'{grid.replications} replications)')
        if redraws:
            print_log(
                f'cell c={c}, N={n}: {redraws} replications redrawn',
                logger='current')
        matrix = np.array([rec['matrix'] for rec in records])
        vector = np.array([rec['vector'] for rec in records])
        params = {
            key: float(np.mean([rec[key] for rec in records]))
            for key in PARAM_ERRORS
        }
        cells.append(
            RateCell(
                c=c,
                n=n,
                matrix_error=float(matrix.mean()),
                vector_error=float(vector.mean()),
                matrix_error_sd=float(matrix.std()),
                vector_error_sd=float(vector.std()),
                param_errors=params,
                redraws=redraws))
        matrix_table[(c, n)] = float(matrix.mean())
        vector_table[(c, n)] = float(vector.mean())
        for key in PARAM_ERRORS:
            param_tables[key][(c, n)] = params[key]

    slopes = dict(
        slope_vs_c_vector=_slope_vs_c(grid, vector_table),
        slope_vs_c_matrix=_slope_vs_c(grid, matrix_table),
        slope_vs_n_vector=_slope_vs_n(grid, vector_table),
        slope_vs_n_matrix=_slope_vs_n(grid, matrix_table))
    param_slopes = {
        key: _slope_vs_n(grid, param_tables[key])
        for key in PARAM_ERRORS
    }
    insufficient = any(fit is None for fit in slopes.values())
    if insufficient:
        print_log(
            'grid has a single level along c or N; the affected slopes are '
            'undefined',
            logger='current',
            level=logging.WARNING)
    return RateReport(
        grid=grid,
        seed=seed,
        cells=cells,
        slopes=slopes,
        param_slopes_vs_n=param_slopes,
        insufficient_grid=insufficient)
