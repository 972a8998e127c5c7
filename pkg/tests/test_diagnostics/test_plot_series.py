from unittest import TestCase

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal

from matnormdiag.core import (InfeasibleDiagnostic, MatNormalParams,
                              MatrixDataset)
from matnormdiag.diagnostics import (PlotSeries, check_unstructured_feasible,
                                     dd_series, healy_type_series,
                                     mhealy_series, nominal_values)
from matnormdiag.distributions import (RngStream, chi2_ppf,
                                       random_matnormal_params,
                                       sample_matnormal)
from matnormdiag.estimation import flipflop_mle, mvn_mle


class TestNominalValues(TestCase):

    def test_positions(self):
        assert_allclose(nominal_values(4), [.25, .5, .75, 1.])
        assert_allclose(nominal_values(4, 'n_plus_one'), [.2, .4, .6, .8])
        with self.assertRaisesRegex(ValueError, 'plotting_position'):
            nominal_values(4, 'median')


class TestPlotSeries(TestCase):

    def test_invalid(self):
        with self.assertRaisesRegex(ValueError, 'lengths differ'):
            PlotSeries([1., 2.], [1.], 'mhealy', 2, 1, 1, 1)
        with self.assertRaisesRegex(ValueError, 'unknown'):
            PlotSeries([], [], 'qq', 0, 1, 1, 1)

    def test_empty(self):
        series = PlotSeries([], [], 'dd', 0, 2, 2, 4)
        self.assertEqual(len(series), 0)
        self.assertEqual(series.points, [])

    def test_round_trip(self):
        series = PlotSeries([.5, 1.], [.4, .9], 'healy_type', 2, 1, 1, 1)
        restored = PlotSeries.from_dict(series.to_dict())
        self.assertEqual(restored.points, series.points)
        self.assertEqual(restored.kind, 'healy_type')
        self.assertEqual(series.to_dict()['reference'], 'y=x')


class TestMHealy(TestCase):

    def test_single_sample(self):
        params = MatNormalParams(np.zeros((2, 3)), np.eye(2), np.eye(3))
        data = MatrixDataset(np.ones((1, 2, 3)))
        series = mhealy_series(data, params)
        self.assertEqual(len(series), 1)
        self.assertEqual(series.x[0], 1.0)
        self.assertEqual(series.dof, 6)

    def test_known_probabilities(self):
        params = MatNormalParams([[0.]], [[1.]], [[1.]])
        # samples in scrambled order map back to sorted probabilities
        probs = np.array([.7, .2, .9, .45])
        values = np.sqrt(chi2_ppf(1, probs))
        data = MatrixDataset(values.reshape(4, 1, 1))
        series = mhealy_series(data, params)
        assert_allclose(series.x, [.25, .5, .75, 1.])
        assert_allclose(series.y, [.2, .45, .7, .9], rtol=1e-10)

    def test_rescale_invariant(self):
        params = random_matnormal_params(RngStream(1), 2, 3)
        data = sample_matnormal(RngStream(2), params, 30)
        a = mhealy_series(data, params)
        b = mhealy_series(data, params.rescaled(0.25))
        assert_allclose(a.y, b.y, rtol=1e-9)
        assert_array_equal(a.x, b.x)

    def test_true_params_align(self):
        params = random_matnormal_params(RngStream(3), 2, 2)
        data = sample_matnormal(RngStream(4), params, 1000)
        series = mhealy_series(data, params)
        self.assertTrue(np.all(np.diff(series.y) >= 0))
        self.assertLess(np.abs(series.y - series.x).max(), 0.06)


class TestUnstructuredSeries(TestCase):

    def test_feasibility(self):
        data = MatrixDataset(np.zeros((6, 2, 3)))
        with self.assertRaises(InfeasibleDiagnostic) as cm:
            check_unstructured_feasible(data, 'healy_type')
        self.assertEqual(cm.exception.reason, 'dimension')
        check_unstructured_feasible(MatrixDataset(np.zeros((7, 2, 3))), 'dd')

    def test_dd_on_reference_line(self):
        params = random_matnormal_params(RngStream(5), 3, 2)
        data = sample_matnormal(RngStream(6), params, 20)
        series = dd_series(data, params, params.to_mvn())
        self.assertEqual(series.kind, 'dd')
        self.assertEqual(series.dof, 6)
        assert_allclose(series.y, series.x, rtol=1e-9)

    def test_healy_matches_mhealy_for_row_vectors(self):
        params = random_matnormal_params(RngStream(7), 1, 3)
        data = sample_matnormal(RngStream(8), params, 40)
        fitted = flipflop_mle(data).params
        structured = mhealy_series(data, fitted)
        unstructured = healy_type_series(data, mvn_mle(data, ddof=0))
        self.assertEqual(unstructured.dof, 3)
        assert_allclose(unstructured.y, structured.y, rtol=1e-7)
