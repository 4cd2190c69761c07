"""Monte Carlo sampling of the cascade.

Each sample of ``Y_n`` consumes ``n`` consecutive Exponential(1) draws
``X_1..X_n`` from the stream.  ``Z_n = ln Y_n`` is accumulated in log
space: ``+ln X_i`` for ``i`` with the parity of ``n``, ``-ln X_i`` otherwise.
"""

from __future__ import annotations

import numpy as np

from ..errors import DomainError
from ..numerics import RngState

__all__ = ["sample_z", "sample_y", "count_below_one"]

DEFAULT_CHUNK = 1 << 20


def _signs(n: int) -> np.ndarray:
    idx = np.arange(1, n + 1)
    return np.where(idx % 2 == n % 2, 1.0, -1.0)


def sample_z(n: int, rng: RngState, size: int | None = None):
    if n < 1:
        raise DomainError("n must be a positive integer")
    count = 1 if size is None else int(size)
    x = rng.exponential(count * n).reshape(count, n)
    z = np.log(x) @ _signs(n)
    return float(z[0]) if size is None else z


def sample_y(n: int, rng: RngState, size: int | None = None):
    """Draw ``Y_n`` (one value, or an array of ``size`` values)."""
    z = sample_z(n, rng, size)
    return float(np.exp(z)) if size is None else np.exp(z)


def count_below_one(
    n: int,
    samples: int,
    seed: int,
    stream: int = 0,
    *,
    inverse: bool = False,
    chunk: int = DEFAULT_CHUNK,
) -> int:
    """Number of ``Y_n <= 1`` (or ``1/Y_n <= 1`` with ``inverse``) in ``samples`` draws.

    The count does not depend on ``chunk``: the generator is counter based.
    """
    rng = RngState(seed, stream)
    hits = 0
    remaining = samples
    while remaining:
        m = min(chunk, remaining)
        z = sample_z(n, rng, m)
        hits += int(np.count_nonzero(z >= 0.0 if inverse else z <= 0.0))
        remaining -= m
    return hits
