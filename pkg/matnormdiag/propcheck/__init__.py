from .rate_experiment import (PARAM_ERRORS, SLOPES, RateCell, RateGrid,
                              RateReport, SlopeFit, replication_errors,
                              run_rate_experiment)

__all__ = [
    'RateGrid', 'RateCell', 'RateReport', 'SlopeFit', 'run_rate_experiment',
    'replication_errors', 'PARAM_ERRORS', 'SLOPES'
]
