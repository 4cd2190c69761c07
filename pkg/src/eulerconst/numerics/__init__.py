from .quadrature import (
    QuadratureResult,
    integrate_adaptive,
    integrate_half_line,
    integrate_semi_infinite,
)
from .rng import RngState, exp_from_uniform, exp_sample, exp_samples

__all__ = [
    "QuadratureResult",
    "integrate_adaptive",
    "integrate_half_line",
    "integrate_semi_infinite",
    "RngState",
    "exp_from_uniform",
    "exp_sample",
    "exp_samples",
]
