"""Two-phase assessment of matrix normality.

Phase one checks multivariate normality of ``vec(X)`` with the Healy-type
plot, phase two tests the Kronecker structure of the covariance with the
separability LRT. Both need the unstructured fit, so the assessment exists
only for ``N > cr``; the MHealy plot is the single-step alternative.
"""
from dataclasses import dataclass
from typing import Mapping, Optional

from mmengine.logging import print_log

from matnormdiag.core import MatrixDataset
from matnormdiag.core.exceptions import DegenerateTest
from matnormdiag.estimation import FlipFlopConfig, mvn_mle
from .alignment import AlignmentStats, alignment
from .lrt import LrtResult, separability_lrt
from .plot_series import (NOMINAL, check_unstructured_feasible,
                          healy_type_series)

MATRIX_NORMAL = 'matrix_normal'
NOT_NORMAL = 'not_multivariate_normal'
NOT_SEPARABLE = 'not_separable'


@dataclass(frozen=True)
class TwoPhaseResult:
    """Verdict of :func:`two_phase_assessment`.

    Args:
        healy (AlignmentStats): Alignment of the phase one Healy-type plot.
        normal (bool): Whether phase one accepted multivariate normality.
        lrt (LrtResult, optional): Phase two result; None when phase one
            rejected or the test is degenerate (``c == 1`` or ``r == 1``).
        separable (bool, optional): Whether phase two kept the Kronecker
            hypothesis.
        verdict (str): ``'matrix_normal'``, ``'not_multivariate_normal'``
            or ``'not_separable'``.
    """
    healy: AlignmentStats
    normal: bool
    lrt: Optional[LrtResult]
    separable: Optional[bool]
    verdict: str

    def to_dict(self) -> dict:
        return dict(
            healy=self.healy.to_dict(),
            normal=self.normal,
            lrt=None if self.lrt is None else self.lrt.to_dict(),
            separable=self.separable,
            verdict=self.verdict)


def two_phase_assessment(data: MatrixDataset,
                         healy_thresholds: Mapping[str, float],
                         alpha: float = 0.05,
                         flipflop_cfg: Optional[FlipFlopConfig] = None,
                         plotting_position: str = NOMINAL) -> TwoPhaseResult:
    """Run the Healy-type normality check, then the separability LRT.

    Args:
        data (MatrixDataset): Samples with ``N > cr``.
        healy_thresholds (Mapping[str, float]): Upper bounds on the
            :class:`AlignmentStats` fields for phase one to pass, e.g.
            ``dict(max_abs_dev=0.06)``.
        alpha (float): Level of the LRT. Defaults to 0.05.
        flipflop_cfg (FlipFlopConfig, optional): Flip-flop stopping rule.
        plotting_position (str): Nominal values of the Healy-type plot.
    """
    if not 0 < alpha < 1:
        raise ValueError(f'alpha should be in (0, 1), but got {alpha}')
    check_unstructured_feasible(data, 'the two-phase assessment')
    healy = alignment(
        healy_type_series(data, mvn_mle(data), plotting_position))
    normal = healy.within(healy_thresholds)
    if not normal:
        return TwoPhaseResult(healy, False, None, None, NOT_NORMAL)
    try:
        lrt = separability_lrt(data, flipflop_cfg=flipflop_cfg)
    except DegenerateTest as e:
        print_log(f'phase two skipped: {e}', logger='current')
        return TwoPhaseResult(healy, True, None, True, MATRIX_NORMAL)
    separable = not lrt.rejects(alpha)
    return TwoPhaseResult(healy, True, lrt, separable,
                          MATRIX_NORMAL if separable else NOT_SEPARABLE)
