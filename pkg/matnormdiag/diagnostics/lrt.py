"""Likelihood ratio test of a Kronecker-structured covariance.

Under the null hypothesis ``Cov(vec X) = Sigma_r kron Sigma_c``;
under the alternative the covariance is unrestricted. With both models
fitted by maximum likelihood the statistic is

    N * (c log|Sigma_r| + r log|Sigma_c| - log|Sigma_ML|)

and is asymptotically chi-square with
``cr(cr + 1) / 2 - [c(c + 1) / 2 + r(r + 1) / 2 - 1]`` degrees of freedom.
The unstructured fit divides by N here (the diagnostic plots divide by
N - 1), otherwise the ratio is not a likelihood ratio.
"""
from dataclasses import dataclass
from typing import Optional

from matnormdiag.core import MatNormalParams, MatrixDataset
from matnormdiag.core.exceptions import DegenerateTest
from matnormdiag.distributions import chi2_sf
from matnormdiag.estimation import FlipFlopConfig, flipflop_mle, mvn_mle
from .plot_series import check_unstructured_feasible


@dataclass(frozen=True)
class LrtResult:
    """Outcome of :func:`separability_lrt`."""
    statistic: float
    dof: int
    p_value: float

    def rejects(self, alpha: float = 0.05) -> bool:
        return self.p_value < alpha

    def to_dict(self) -> dict:
        return dict(
            statistic=self.statistic, dof=self.dof, p_value=self.p_value)

    @classmethod
    def from_dict(cls, info: dict) -> 'LrtResult':
        return cls(
            statistic=float(info['statistic']),
            dof=int(info['dof']),
            p_value=float(info['p_value']))


def separability_dof(n_rows: int, n_cols: int) -> int:
    """Free parameters of the unstructured minus the Kronecker covariance."""
    d = n_rows * n_cols
    return d * (d + 1) // 2 - (n_rows * (n_rows + 1) // 2 + n_cols *
                               (n_cols + 1) // 2 - 1)


def separability_lrt(data: MatrixDataset,
                     fitted: Optional[MatNormalParams] = None,
                     flipflop_cfg: Optional[FlipFlopConfig] = None
                     ) -> LrtResult:
    """Test whether ``data`` has a Kronecker-structured covariance.

    Args:
        data (MatrixDataset): Samples with ``N > cr``, ``c >= 2`` and
            ``r >= 2``.
        fitted (MatNormalParams, optional): Flip-flop fit of ``data`` to
            reuse. Fitted here when None.
        flipflop_cfg (FlipFlopConfig, optional): Used when fitting.

    Returns:
        LrtResult: Statistic, degrees of freedom and upper-tail p-value.
    """
    c, r = data.n_rows, data.n_cols
    check_unstructured_feasible(data, 'the separability LRT')
    if c == 1 or r == 1:
        raise DegenerateTest(
            f'with c={c}, r={r} every covariance is a Kronecker product; '
            'the test has 0 degrees of freedom')
    if fitted is None:
        fitted = flipflop_mle(data, flipflop_cfg).params
    unstructured = mvn_mle(data, ddof=0)
    n = data.n_samples
    statistic = n * (c * fitted.row_factor.log_determinant +
                     r * fitted.col_factor.log_determinant -
                     unstructured.factor.log_determinant)
    # nonnegative up to rounding
    statistic = max(float(statistic), 0.0)
    dof = separability_dof(c, r)
    return LrtResult(
        statistic=statistic, dof=dof, p_value=float(chi2_sf(dof, statistic)))
