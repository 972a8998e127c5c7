from matnormdiag.core import MatrixDataset, MvnParams, vectorize
from matnormdiag.distributions import (DEFAULT_CONDITION_CAP, MAX_REDRAWS,
                                       RESIDUAL_THRESHOLD, RngStream,
                                       random_kronecker_sum,
                                       random_matnormal_params,
                                       random_nonkron_spd,
                                       sample_kronecker_sum, sample_matnormal,
                                       sample_mvn)
from matnormdiag.registry import GENERATORS


@GENERATORS.register_module(name='matnormal')
class MatNormalGenerator:
    """Matrix normal data with random mean and Kronecker factors.

    Args:
        condition_cap (float): Condition number bound of both factors.
            Defaults to 100.
    """

    def __init__(self, condition_cap: float = DEFAULT_CONDITION_CAP):
        self.condition_cap = condition_cap

    def __call__(self, stream: RngStream, n_samples: int, n_rows: int,
                 n_cols: int) -> MatrixDataset:
        params = random_matnormal_params(
            stream.derive(0), n_rows, n_cols, self.condition_cap)
        return sample_matnormal(stream.derive(1), params, n_samples)


@GENERATORS.register_module(name='strict_mvn')
class StrictMvnGenerator:
    """Normal ``vec(X)`` whose covariance is far from every Kronecker
    product.

    Up to ``dense_limit`` dimensions the covariance is a dense random SPD
    matrix; above it a sum of ``n_terms`` random Kronecker products, which
    is sampled without forming the ``cr x cr`` matrix. Both go through the
    same residual rejection rule.

    Args:
        condition_cap (float): Condition number bound. Defaults to 100.
        dense_limit (int): Largest ``cr`` drawn densely. Defaults to 2500.
        n_terms (int): Kronecker terms above ``dense_limit``. Defaults to 2.
        threshold (float): Minimum relative nearest-Kronecker residual.
            Defaults to 0.05.
        max_redraws (int): Rejection sampling budget. Defaults to 100.
    """

    def __init__(self,
                 condition_cap: float = DEFAULT_CONDITION_CAP,
                 dense_limit: int = 2500,
                 n_terms: int = 2,
                 threshold: float = RESIDUAL_THRESHOLD,
                 max_redraws: int = MAX_REDRAWS):
        self.condition_cap = condition_cap
        self.dense_limit = dense_limit
        self.n_terms = n_terms
        self.threshold = threshold
        self.max_redraws = max_redraws

    def __call__(self, stream: RngStream, n_samples: int, n_rows: int,
                 n_cols: int) -> MatrixDataset:
        d = n_rows * n_cols
        mean = stream.derive(1).generator().standard_normal((n_rows, n_cols))
        if d > self.dense_limit:
            terms = random_kronecker_sum(
                stream.derive(0),
                n_rows,
                n_cols,
                n_terms=self.n_terms,
                condition_cap=self.condition_cap,
                threshold=self.threshold,
                max_redraws=self.max_redraws)
            return sample_kronecker_sum(stream.derive(2), mean, terms,
                                        n_samples)
        cov = random_nonkron_spd(
            stream.derive(0),
            n_rows,
            n_cols,
            condition_cap=self.condition_cap,
            threshold=self.threshold,
            max_redraws=self.max_redraws)
        params = MvnParams(vectorize(mean), cov)
        return sample_mvn(
            stream.derive(2), params, n_samples, shape=(n_rows, n_cols))
