from .alignment import AlignmentStats, alignment
from .lrt import LrtResult, separability_dof, separability_lrt
from .plot_series import (DD, HEALY_TYPE, MHEALY, N_PLUS_ONE, NOMINAL,
                          PROBABILITY_KINDS, SERIES_KINDS, PlotSeries,
                          check_unstructured_feasible, dd_series,
                          healy_type_series, mhealy_series, nominal_values)
from .two_phase import (MATRIX_NORMAL, NOT_NORMAL, NOT_SEPARABLE,
                        TwoPhaseResult, two_phase_assessment)

__all__ = [
    'PlotSeries', 'mhealy_series', 'healy_type_series', 'dd_series',
    'nominal_values', 'check_unstructured_feasible', 'AlignmentStats',
    'alignment', 'LrtResult', 'separability_lrt', 'separability_dof',
    'TwoPhaseResult', 'two_phase_assessment', 'MHEALY', 'DD', 'HEALY_TYPE',
    'SERIES_KINDS', 'PROBABILITY_KINDS', 'NOMINAL', 'N_PLUS_ONE',
    'MATRIX_NORMAL', 'NOT_NORMAL', 'NOT_SEPARABLE'
]
