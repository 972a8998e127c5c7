from dataclasses import dataclass
from typing import Mapping, Optional

import numpy as np

from .plot_series import DD, PlotSeries


@dataclass(frozen=True)
class AlignmentStats:
    """How far a plot series strays from the ``y = x`` reference line.

    Args:
        max_abs_dev (float): Largest ``|y - x|``.
        mean_abs_dev (float): Mean ``|y - x|``.
        ks_like_stat (float, optional): Kolmogorov-Smirnov type distance
            ``max_n max(n / N - y_n, y_n - (n - 1) / N)`` of the sorted
            probabilities. None for DD series.
    """
    max_abs_dev: float
    mean_abs_dev: float
    ks_like_stat: Optional[float] = None

    def within(self, thresholds: Mapping[str, float]) -> bool:
        """Whether every statistic named in ``thresholds`` is at or below
        its bound."""
        for key, bound in thresholds.items():
            value = getattr(self, key)
            if value is None or value > bound:
                return False
        return True

    def to_dict(self) -> dict:
        return dict(
            max_abs_dev=self.max_abs_dev,
            mean_abs_dev=self.mean_abs_dev,
            ks_like_stat=self.ks_like_stat)

    @classmethod
    def from_dict(cls, info: dict) -> 'AlignmentStats':
        return cls(**info)


def alignment(series: PlotSeries) -> AlignmentStats:
    """Summarize the deviations of ``series`` from the reference line.

    DD deviations are divided by the degrees of freedom ``cr`` so that
    regimes of different dimension are comparable.
    """
    if len(series) == 0:
        raise ValueError('cannot measure the alignment of an empty series')
    dev = np.abs(series.y - series.x)
    if series.kind == DD:
        return AlignmentStats(
            max_abs_dev=float(np.max(dev) / series.dof),
            mean_abs_dev=float(np.mean(dev) / series.dof))
    n = len(series)
    upper = np.arange(1, n + 1) / n
    ks_like = max(np.max(upper - series.y), np.max(series.y - (upper - 1 / n)))
    return AlignmentStats(
        max_abs_dev=float(np.max(dev)),
        mean_abs_dev=float(np.mean(dev)),
        ks_like_stat=float(max(ks_like, 0.0)))
