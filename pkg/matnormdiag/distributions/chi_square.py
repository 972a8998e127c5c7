from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.special import gammainc, gammaincc, gammaincinv

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class ChiSquare:
    """Chi-square law with ``dof`` degrees of freedom."""
    dof: int

    def __post_init__(self):
        if int(self.dof) != self.dof or self.dof < 1:
            raise ValueError(
                f'dof should be a positive integer, but got {self.dof}')
        object.__setattr__(self, 'dof', int(self.dof))


def _as_dist(dist: Union[ChiSquare, int]) -> ChiSquare:
    return dist if isinstance(dist, ChiSquare) else ChiSquare(dist)


def chi2_cdf(dist: Union[ChiSquare, int], x: ArrayLike) -> ArrayLike:
    """Regularized lower incomplete gamma ``P(dof / 2, x / 2)``.

    Negative ``x`` maps to 0 and ``+inf`` saturates at 1. Works elementwise
    on arrays.
    """
    dist = _as_dist(dist)
    x = np.asarray(x, dtype=np.float64)
    out = gammainc(0.5 * dist.dof, 0.5 * np.maximum(x, 0.0))
    return out if out.ndim else float(out)


def chi2_sf(dist: Union[ChiSquare, int], x: ArrayLike) -> ArrayLike:
    """Upper tail ``1 - chi2_cdf``, computed without cancellation."""
    dist = _as_dist(dist)
    x = np.asarray(x, dtype=np.float64)
    out = gammaincc(0.5 * dist.dof, 0.5 * np.maximum(x, 0.0))
    return out if out.ndim else float(out)


def chi2_ppf(dist: Union[ChiSquare, int], p: ArrayLike) -> ArrayLike:
    """Quantile function, the inverse of :func:`chi2_cdf` on ``[0, 1]``."""
    dist = _as_dist(dist)
    p = np.asarray(p, dtype=np.float64)
    if np.any((p < 0) | (p > 1)):
        raise ValueError('probabilities must lie in [0, 1]')
    out = 2.0 * gammaincinv(0.5 * dist.dof, p)
    return out if out.ndim else float(out)
