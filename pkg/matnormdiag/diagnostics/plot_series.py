"""Point series of the three probability-type diagnostic plots.

* ``mhealy``: sorted matrix-based distances pushed through the chi-square
  CDF with ``cr`` degrees of freedom, against nominal values ``n / N``.
  Needs only the Kronecker fit, so it exists for every ``N >= 1``.
* ``healy_type``: the same construction with vector-based distances. Needs
  the unstructured fit, which exists only for ``N > cr``.
* ``dd``: matrix-based against vector-based distance of every sample.
"""
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from matnormdiag.core import MatNormalParams, MatrixDataset, MvnParams
from matnormdiag.core.exceptions import InfeasibleDiagnostic
from matnormdiag.distances import msd_matrix, msd_vector
from matnormdiag.distributions import chi2_cdf

MHEALY = 'mhealy'
HEALY_TYPE = 'healy_type'
DD = 'dd'
SERIES_KINDS = (MHEALY, DD, HEALY_TYPE)
PROBABILITY_KINDS = (MHEALY, HEALY_TYPE)

NOMINAL = 'nominal'
N_PLUS_ONE = 'n_plus_one'


@dataclass(frozen=True, eq=False)
class PlotSeries:
    """Ordered points of a diagnostic plot; the reference line is ``y = x``.

    Args:
        x (np.ndarray): Horizontal coordinates.
        y (np.ndarray): Vertical coordinates, same length as ``x``.
        kind (str): One of ``'mhealy'``, ``'dd'``, ``'healy_type'``.
        n_samples (int): N of the dataset the series was built from.
        n_rows (int): c.
        n_cols (int): r.
        dof (int): Degrees of freedom of the reference law (``cr`` for
            ``mhealy`` and ``dd``, ``d`` for ``healy_type``).
    """
    x: np.ndarray = field(repr=False)
    y: np.ndarray = field(repr=False)
    kind: str
    n_samples: int
    n_rows: int
    n_cols: int
    dof: int

    def __post_init__(self):
        if self.kind not in SERIES_KINDS:
            raise ValueError(f'unknown series kind {self.kind!r}')
        x = np.asarray(self.x, dtype=np.float64).reshape(-1)
        y = np.asarray(self.y, dtype=np.float64).reshape(-1)
        if x.shape != y.shape:
            raise ValueError(
                f'x and y lengths differ: {x.shape[0]} vs {y.shape[0]}')
        object.__setattr__(self, 'x', x)
        object.__setattr__(self, 'y', y)

    @property
    def points(self) -> List[Tuple[float, float]]:
        return [(float(a), float(b)) for a, b in zip(self.x, self.y)]

    def __len__(self) -> int:
        return self.x.shape[0]

    def to_dict(self) -> dict:
        return dict(
            kind=self.kind,
            n_samples=self.n_samples,
            n_rows=self.n_rows,
            n_cols=self.n_cols,
            dof=self.dof,
            reference='y=x',
            x=self.x.tolist(),
            y=self.y.tolist())

    @classmethod
    def from_dict(cls, info: dict) -> 'PlotSeries':
        return cls(
            x=np.array(info['x'], dtype=np.float64),
            y=np.array(info['y'], dtype=np.float64),
            kind=info['kind'],
            n_samples=int(info['n_samples']),
            n_rows=int(info['n_rows']),
            n_cols=int(info['n_cols']),
            dof=int(info['dof']))


def nominal_values(n_samples: int,
                   plotting_position: str = NOMINAL) -> np.ndarray:
    """``n / N`` for ``n = 1..N``, or ``n / (N + 1)`` when requested."""
    if plotting_position == NOMINAL:
        denominator = n_samples
    elif plotting_position == N_PLUS_ONE:
        denominator = n_samples + 1
    else:
        raise ValueError(
            f'plotting_position should be {NOMINAL!r} or {N_PLUS_ONE!r}, '
            f'but got {plotting_position!r}')
    return np.arange(1, n_samples + 1, dtype=np.float64) / denominator


def check_unstructured_feasible(data: MatrixDataset, diagnostic: str) -> None:
    """Raise :class:`InfeasibleDiagnostic` unless ``N > cr``."""
    if data.n_samples <= data.dim:
        raise InfeasibleDiagnostic(
            f'{diagnostic} needs an unstructured covariance fit, which '
            f'requires N > cr; got N={data.n_samples} <= cr={data.dim} '
            f'(c={data.n_rows}, r={data.n_cols})')


def probability_series(distances: np.ndarray, dof: int, kind: str,
                       data: MatrixDataset,
                       plotting_position: str = NOMINAL) -> PlotSeries:
    """Sort ``distances`` and map them through the chi-square CDF."""
    ordered = np.sort(np.asarray(distances, dtype=np.float64), kind='stable')
    return PlotSeries(
        x=nominal_values(ordered.shape[0], plotting_position),
        y=chi2_cdf(dof, ordered),
        kind=kind,
        n_samples=data.n_samples,
        n_rows=data.n_rows,
        n_cols=data.n_cols,
        dof=dof)


def mhealy_series(data: MatrixDataset,
                  fitted: MatNormalParams,
                  plotting_position: str = NOMINAL) -> PlotSeries:
    """Probability plot of the matrix-based distances.

    Args:
        data (MatrixDataset): Samples to assess.
        fitted (MatNormalParams): Parameters fitted on (or supplied for)
            ``data``.
        plotting_position (str): ``'nominal'`` uses ``n / N`` (last point
            exactly 1), ``'n_plus_one'`` uses ``n / (N + 1)``. Defaults to
            ``'nominal'``.
    """
    distances = msd_matrix(data, fitted)
    return probability_series(distances.values, distances.dof, MHEALY, data,
                              plotting_position)


def healy_type_series(data: MatrixDataset,
                      fitted: MvnParams,
                      plotting_position: str = NOMINAL) -> PlotSeries:
    """Probability plot of the vector-based distances (``dof = d``)."""
    distances = msd_vector(data, fitted)
    return probability_series(distances.values, distances.dof, HEALY_TYPE,
                              data, plotting_position)


def dd_series(data: MatrixDataset, fitted_mat: MatNormalParams,
              fitted_vec: MvnParams) -> PlotSeries:
    """Matrix-based (x) against vector-based (y) distance, in sample order.
    """
    x = msd_matrix(data, fitted_mat)
    y = msd_vector(data, fitted_vec)
    return PlotSeries(
        x=x.values,
        y=y.values,
        kind=DD,
        n_samples=data.n_samples,
        n_rows=data.n_rows,
        n_cols=data.n_cols,
        dof=x.dof)
