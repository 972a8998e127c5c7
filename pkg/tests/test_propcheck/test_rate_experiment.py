import pytest

from matnormdiag.core import CovarianceSingular, RedrawLimitExceeded
from matnormdiag.propcheck import RateGrid, RateReport, run_rate_experiment
from matnormdiag.propcheck import rate_experiment


def test_grid_validation():
    with pytest.raises(ValueError, match='strictly increasing'):
        RateGrid(c_values=(4, 2), n_values=(100, ))
    with pytest.raises(ValueError, match='empty'):
        RateGrid(c_values=(), n_values=(100, ))
    with pytest.raises(ValueError, match='N > c'):
        RateGrid(c_values=(2, 4), n_values=(16, 100))
    with pytest.raises(ValueError, match='positive'):
        RateGrid(c_values=(2, ), n_values=(10, ), replications=0)


def test_grid_cells():
    grid = RateGrid(c_values=(2, 3), n_values=(20, 40), replications=40)
    assert grid.cells == [(2, 20), (2, 40), (3, 20), (3, 40)]
    assert grid.max_redraws == 2
    assert RateGrid(replications=5, c_values=(2, ),
                    n_values=(10, )).max_redraws == 1


def test_single_level_grid():
    grid = RateGrid(c_values=(2, ), n_values=(20, 40), replications=3)
    report = run_rate_experiment(grid, seed=1, parallelism=1)
    assert report.insufficient_grid
    assert report.slopes['slope_vs_c_vector'] is None
    assert report.slope('slope_vs_c_matrix') is None
    assert report.slope('slope_vs_n_matrix') is not None
    assert len(report.cells) == 2


def test_rates():
    grid = RateGrid(
        c_values=(2, 4), n_values=(100, 400), replications=30,
        probe_samples=100)
    report = run_rate_experiment(grid, seed=20240601, parallelism=1)
    assert not report.insufficient_grid
    cell = report.cell(4, 400)
    assert cell.matrix_error < cell.vector_error
    assert report.slope('slope_vs_c_vector') > report.slope(
        'slope_vs_c_matrix')
    assert report.slope('slope_vs_n_matrix') < 0
    assert set(cell.param_errors) == set(rate_experiment.PARAM_ERRORS)
    with pytest.raises(KeyError):
        report.cell(3, 100)


def test_parallelism_invariant():
    grid = RateGrid(c_values=(2, 3), n_values=(20, 40), replications=3)
    serial = run_rate_experiment(grid, seed=7, parallelism=1)
    pooled = run_rate_experiment(grid, seed=7, parallelism=2)
    assert serial.to_dict() == pooled.to_dict()


def test_report_round_trip():
    grid = RateGrid(c_values=(2, 3), n_values=(20, 40), replications=3)
    report = run_rate_experiment(grid, seed=3, parallelism=1)
    restored = RateReport.from_dict(report.to_dict())
    assert restored.to_dict() == report.to_dict()


def test_redraw_limit(monkeypatch):

    def always_singular(*args, **kwargs):
        raise CovarianceSingular('forced', reason='rank')

    monkeypatch.setattr(rate_experiment, 'replication_errors',
                        always_singular)
    grid = RateGrid(c_values=(2, ), n_values=(20, ), replications=3)
    with pytest.raises(RedrawLimitExceeded):
        run_rate_experiment(grid, seed=1, parallelism=1)
