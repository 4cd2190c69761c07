"""Euler's constants e, gamma and delta: independent evaluation routes, the
generalized Hardy quantities and the exponential-ratio cascade probabilities."""

from .constants import ConstantId, best, constant, delta_m, gumbel_moment, sigma
from .errors import DomainError, PrecisionError, QuadratureError, TailBoundError
from .hardy import SequenceKind, mu_closed, mu_direct, sequence
from .cascade import pi_eval

__version__ = "0.1.0"

__all__ = [
    "ConstantId",
    "best",
    "constant",
    "delta_m",
    "gumbel_moment",
    "sigma",
    "DomainError",
    "PrecisionError",
    "QuadratureError",
    "TailBoundError",
    "SequenceKind",
    "mu_closed",
    "mu_direct",
    "sequence",
    "pi_eval",
]
