"""Counter-based SplitMix64 generator.

Output ``i`` of a stream is ``mix64(key + (i + 1) * GOLDEN)`` where ``key``
is derived from ``(seed, stream)``.  Everything is plain uint64 arithmetic,
so streams are bit-identical on every platform, and the ``i``-th draw does
not depend on how earlier draws were batched.

Parallel Monte Carlo uses ``stream = base_stream + worker_index``.
"""

from __future__ import annotations

import numpy as np

__all__ = ["RngState", "mix64", "exp_from_uniform", "exp_sample", "exp_samples"]

_MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """SplitMix64 finalizer on a Python int (reference, scalar)."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * _M1) & _MASK
    z = ((z ^ (z >> 27)) * _M2) & _MASK
    return z ^ (z >> 31)


def _mix64_array(z: np.ndarray) -> np.ndarray:
    # uint64 array ops wrap modulo 2**64
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
    return z ^ (z >> np.uint64(31))


class RngState:
    """Single-owner random stream identified by ``(seed, stream)``."""

    def __init__(self, seed: int, stream: int = 0):
        if not (0 <= seed <= _MASK and 0 <= stream <= _MASK):
            raise ValueError("seed and stream must be unsigned 64-bit integers")
        self.seed = seed
        self.stream = stream
        self.counter = 0
        self._key = mix64(seed ^ mix64(stream * GOLDEN + 1))

    def __repr__(self):
        return f"RngState(seed={self.seed}, stream={self.stream}, counter={self.counter})"

    def next_u64(self, size: int) -> np.ndarray:
        idx = np.arange(self.counter + 1, self.counter + 1 + size, dtype=np.uint64)
        self.counter += size
        with np.errstate(over="ignore"):
            return _mix64_array(np.uint64(self._key) + idx * np.uint64(GOLDEN))

    def uniform(self, size: int) -> np.ndarray:
        """Uniform doubles on [0, 1) with 53 random bits."""
        return (self.next_u64(size) >> np.uint64(11)).astype(np.float64) * 2.0**-53

    def exponential(self, size: int) -> np.ndarray:
        return exp_from_uniform(self.uniform(size))


def exp_from_uniform(u):
    """Inverse Exponential(1) CDF, ``-ln(1 - u)``, evaluated via log1p."""
    return -np.log1p(-np.asarray(u, dtype=float)) + 0.0


def exp_sample(rng: RngState) -> float:
    """One Exponential(1) variate by inverse CDF, ``-ln(1 - U)``."""
    return float(rng.exponential(1)[0])


def exp_samples(rng: RngState, size: int) -> np.ndarray:
    return rng.exponential(size)
