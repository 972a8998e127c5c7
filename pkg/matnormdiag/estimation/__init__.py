from .flipflop import (FlipFlopConfig, FlipFlopReport, flipflop_mle,
                       matnormal_loglik, matnormal_mean)
from .mvn import mvn_mle

__all__ = [
    'mvn_mle', 'FlipFlopConfig', 'FlipFlopReport', 'flipflop_mle',
    'matnormal_loglik', 'matnormal_mean'
]
