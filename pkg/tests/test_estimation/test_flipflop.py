from unittest import TestCase

import numpy as np
from numpy.testing import assert_allclose
from scipy.stats import multivariate_normal

from matnormdiag.core import (CovarianceSingular, MatNormalParams,
                              MatrixDataset, NotPositiveDefinite, kron)
from matnormdiag.distributions import (RngStream, random_matnormal_params,
                                       sample_matnormal)
from matnormdiag.estimation import (FlipFlopConfig, FlipFlopReport,
                                    flipflop_mle, matnormal_loglik, mvn_mle)


def _sample(seed, n_rows, n_cols, count):
    params = random_matnormal_params(RngStream(seed), n_rows, n_cols)
    return params, sample_matnormal(RngStream(seed, 1), params, count)


class TestFlipFlopConfig(TestCase):

    def test_invalid(self):
        with self.assertRaisesRegex(ValueError, 'tolerance'):
            FlipFlopConfig(tolerance=0)
        with self.assertRaisesRegex(ValueError, 'max_iterations'):
            FlipFlopConfig(max_iterations=0)
        with self.assertRaisesRegex(ValueError, 'init_row_cov'):
            FlipFlopConfig(init_row_cov='random')
        with self.assertRaisesRegex(ValueError, 'pivot_tol'):
            FlipFlopConfig(pivot_tol=1.5)

    def test_to_dict(self):
        cfg = FlipFlopConfig(max_iterations=7, init_row_cov='diagonal')
        self.assertEqual(FlipFlopConfig(**cfg.to_dict()), cfg)


class TestFlipFlopMle(TestCase):

    def test_scalar_collapse(self):
        x = np.random.default_rng(0).normal(3., 2., size=(100, 1, 1))
        report = flipflop_mle(MatrixDataset(x))
        self.assertTrue(report.converged)
        params = report.params
        assert_allclose(params.col_cov, [[1.]])
        assert_allclose(params.row_cov, [[np.var(x)]], rtol=1e-10)
        assert_allclose(params.mean, [[np.mean(x)]], rtol=1e-12)

    def test_identical_samples(self):
        data = MatrixDataset(np.ones((5, 2, 2)))
        with self.assertRaises(NotPositiveDefinite) as cm:
            flipflop_mle(data)
        self.assertEqual(cm.exception.iteration, 1)

    def test_preconditions(self):
        with self.assertRaisesRegex(ValueError, 'at least 2'):
            flipflop_mle(MatrixDataset(np.ones((1, 2, 2))))
        data = MatrixDataset(
            np.random.default_rng(1).standard_normal((2, 5, 2)))
        with self.assertRaises(CovarianceSingular) as cm:
            flipflop_mle(data)
        self.assertEqual(cm.exception.reason, 'dimension')

    def test_identity_truth(self):
        params = MatNormalParams(np.zeros((3, 2)), np.eye(3), np.eye(2))
        data = sample_matnormal(RngStream(2), params, 10000)
        report = flipflop_mle(data)
        self.assertTrue(report.converged)
        fitted = report.params
        assert_allclose(np.trace(fitted.col_cov), 3.)
        self.assertLess(np.abs(fitted.kron_cov() - np.eye(6)).max(), 0.05)
        self.assertLess(np.abs(fitted.mean).max(), 0.05)

    def test_monotone_trace(self):
        for seed in range(10):
            _, data = _sample(100 + seed, 3, 4, 20)
            report = flipflop_mle(data, FlipFlopConfig(tolerance=1e-10))
            trace = report.log_likelihood_trace
            self.assertEqual(len(trace), report.iterations_used)
            slack = 1e-8 * np.abs(trace[:-1]).max()
            self.assertTrue(np.all(np.diff(trace) >= -slack))

    def test_trace_matches_loglik(self):
        _, data = _sample(7, 3, 2, 50)
        report = flipflop_mle(data)
        assert_allclose(
            report.log_likelihood_trace[-1],
            matnormal_loglik(data, report.params),
            rtol=1e-9)

    def test_init_robust(self):
        _, data = _sample(8, 3, 4, 200)
        fits = [
            flipflop_mle(
                data,
                FlipFlopConfig(
                    tolerance=1e-10, max_iterations=500, init_row_cov=init))
            for init in ('identity', 'diagonal')
        ]
        a, b = (f.params.kron_cov() for f in fits)
        self.assertLess(np.linalg.norm(a - b) / np.linalg.norm(a), 1e-6)

    def test_agrees_with_unstructured(self):
        n = 5000
        _, data = _sample(9, 2, 2, n)
        structured = flipflop_mle(data).params.kron_cov()
        unstructured = mvn_mle(data, ddof=0).cov
        self.assertLess(
            np.linalg.norm(structured - unstructured) /
            np.linalg.norm(unstructured), 3 * 4 / np.sqrt(n))

    def test_iteration_cap(self):
        _, data = _sample(10, 3, 3, 30)
        report = flipflop_mle(data, FlipFlopConfig(max_iterations=1))
        self.assertFalse(report.converged)
        self.assertEqual(report.iterations_used, 1)
        self.assertEqual(len(report.log_likelihood_trace), 1)

    def test_report_round_trip(self):
        _, data = _sample(11, 2, 3, 30)
        report = flipflop_mle(data)
        restored = FlipFlopReport.from_dict(report.to_dict())
        self.assertEqual(restored.iterations_used, report.iterations_used)
        self.assertEqual(restored.converged, report.converged)
        assert_allclose(restored.params.col_cov, report.params.col_cov)
        assert_allclose(restored.log_likelihood_trace,
                        report.log_likelihood_trace)


class TestMatNormalLoglik(TestCase):

    def test_scalar(self):
        params = MatNormalParams([[0.]], [[1.]], [[1.]])
        data = MatrixDataset(np.zeros((1, 1, 1)))
        assert_allclose(
            matnormal_loglik(data, params), -0.5 * np.log(2 * np.pi))

    def test_rescale_invariant(self):
        params, data = _sample(12, 2, 3, 10)
        assert_allclose(
            matnormal_loglik(data, params.rescaled(7.5)),
            matnormal_loglik(data, params),
            rtol=1e-10)

    def test_matches_dense_density(self):
        params, data = _sample(13, 3, 2, 15)
        mvn = params.to_mvn()
        expected = multivariate_normal(mvn.mean, mvn.cov).logpdf(
            data.vectorize()).sum()
        assert_allclose(matnormal_loglik(data, params), expected, rtol=1e-9)

    def test_kron_order(self):
        col = np.array([[2., .3], [.3, 1.]])
        row = np.diag([1., 4., .5])
        params = MatNormalParams(np.zeros((2, 3)), col, row)
        assert_allclose(params.kron_cov(), kron(row, col))
