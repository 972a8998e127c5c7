from .chi_square import ChiSquare, chi2_cdf, chi2_ppf, chi2_sf
from .kronecker import (MAX_REDRAWS, RESIDUAL_THRESHOLD, kronecker_residual,
                        kronecker_sum_residual, nearest_kronecker,
                        random_kronecker_sum, random_nonkron_spd, rearrange,
                        sample_kronecker_sum)
from .rng import RngStream
from .samplers import (DEFAULT_CONDITION_CAP, random_matnormal_params,
                       random_orthogonal, random_spd, sample_matnormal,
                       sample_mvn, sample_standard_normal)

__all__ = [
    'RngStream', 'ChiSquare', 'chi2_cdf', 'chi2_sf', 'chi2_ppf',
    'sample_standard_normal', 'random_orthogonal', 'random_spd',
    'random_matnormal_params', 'sample_matnormal', 'sample_mvn',
    'random_nonkron_spd', 'random_kronecker_sum', 'sample_kronecker_sum',
    'kronecker_residual', 'kronecker_sum_residual', 'nearest_kronecker',
    'rearrange', 'DEFAULT_CONDITION_CAP', 'RESIDUAL_THRESHOLD', 'MAX_REDRAWS'
]
