"""Generalized Hardy sums mu_{u,k} and the integer sequences A, B, B*.

``mu_{u,k} = E[u^N / (N + k)^2]`` with ``N ~ Poisson(1)`` and ``u = +-1``.
The closed forms need the exact sequences

* ``A_m  = m! H_m``                                (OEIS A000254)
* ``B_m  = m! sum_i (1/i) sum_{j<i} 1/j!``         (OEIS A093344)
* ``B*_m = m! sum_i (1/i) sum_{j<i} (-1)^j/j!``    (OEIS A381681)

which are generated here by integer-only recurrences.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

from .constants import ConstantId, best
from .errors import DomainError, PrecisionError

__all__ = [
    "MuSpec",
    "SequenceKind",
    "mu_direct",
    "mu_closed",
    "sequence",
    "sequence_table",
    "sequence_normalized",
    "asymptotic_report",
    "AsymptoticRow",
    "MU_CLOSED_MAX_K",
]

MU_CLOSED_MAX_K = 10


class SequenceKind(str, enum.Enum):
    A = "A"
    B = "B"
    B_star = "B_star"


@dataclass(frozen=True)
class MuSpec:
    u: int
    k: int

    def __post_init__(self):
        if self.u not in (-1, 1):
            raise DomainError(f"u must be -1 or +1, got {self.u!r}")
        if not isinstance(self.k, int) or self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k!r}")


def _as_spec(spec, k=None) -> MuSpec:
    if isinstance(spec, MuSpec):
        return spec
    return MuSpec(spec, k)


def mu_direct(spec: MuSpec | int, k: int | None = None) -> float:
    """Sum ``sum_i e^-1 u^i / (i! (i + k)^2)`` until terms drop below 1e-18.

    Accepts a :class:`MuSpec` or ``(u, k)``.
    """
    spec = _as_spec(spec, k)
    terms = []
    weight = math.exp(-1.0)  # e^-1 / i!
    i = 0
    while True:
        term = weight * spec.u**i / (i + spec.k) ** 2
        terms.append(term)
        if abs(term) < 1e-18:
            return math.fsum(terms)
        i += 1
        weight /= i


# -- exact sequences ---------------------------------------------------------

class _SequenceCache:
    """Grow-only tables of A, B, B* and their auxiliaries."""

    def __init__(self):
        self.A = [0]
        self.B = [0]
        self.B_star = [0]
        self.fact = [1]      # m!
        self.a = [1]         # a_n = sum_{j<=n} n!/j!
        self.derange = [1]   # D_n, derangement numbers

    def extend(self, m: int) -> None:
        while len(self.A) <= m:
            n = len(self.A)
            prev = n - 1
            # split off the i = n term of each defining sum
            self.A.append(n * self.A[prev] + self.fact[prev])
            self.B.append(n * self.B[prev] + self.a[prev])
            self.B_star.append(n * self.B_star[prev] + self.derange[prev])
            self.fact.append(n * self.fact[prev])
            self.a.append(n * self.a[prev] + 1)
            self.derange.append(n * self.derange[prev] + (-1) ** n)


_CACHE = _SequenceCache()


def sequence(kind: SequenceKind | str, m: int) -> int:
    """Exact ``A_m``, ``B_m`` or ``B*_m``."""
    kind = SequenceKind(kind)
    if m < 0:
        raise DomainError("m must be non-negative")
    _CACHE.extend(m)
    return getattr(_CACHE, kind.value)[m]


def sequence_table(kind: SequenceKind | str, m_max: int) -> list[int]:
    kind = SequenceKind(kind)
    _CACHE.extend(m_max)
    return list(getattr(_CACHE, kind.value)[: m_max + 1])


@functools.lru_cache(maxsize=None)
def sequence_normalized(kind: SequenceKind | str, m: int) -> float:
    """``sequence(kind, m) / m!`` as a floating sum, without factorials."""
    kind = SequenceKind(kind)
    if m < 0:
        raise DomainError("m must be non-negative")
    if kind is SequenceKind.A:
        return math.fsum(1.0 / i for i in range(1, m + 1))
    sign = -1.0 if kind is SequenceKind.B_star else 1.0
    terms = []
    inner = 0.0       # sum_{j<i} sign^j / j!
    inv_fact = 1.0    # 1 / j!
    for i in range(1, m + 1):
        j = i - 1
        inner += sign**j * inv_fact
        inv_fact /= i
        terms.append(inner / i)
    return math.fsum(terms)


def _hardy_constants():
    e = math.e
    g = best(ConstantId.gamma)
    return e, g, best(ConstantId.delta), best(ConstantId.delta_star)


def mu_closed(spec: MuSpec | int, k: int | None = None) -> float:
    """Closed form of ``mu_{u,k}`` in terms of e, gamma, delta (or delta*).

    Evaluated in normalized form, dividing the integer sequences by
    ``(k-1)!`` before combining.  The bracket still cancels to about
    ``e^2 mu / (k-1)!``, so ``k`` is capped at 10.
    """
    spec = _as_spec(spec, k)
    if spec.k > MU_CLOSED_MAX_K:
        raise PrecisionError(
            f"mu_closed loses too many digits for k > {MU_CLOSED_MAX_K} in binary64"
        )
    e, g, delta, delta_star = _hardy_constants()
    m = spec.k - 1
    scale = math.factorial(m) / (e * e)
    harmonic = sequence_normalized(SequenceKind.A, m)
    if spec.u == -1:
        bracket = math.fsum([delta, e * g, -e * harmonic, sequence_normalized(SequenceKind.B, m)])
        return scale * bracket
    bracket = math.fsum(
        [delta_star, e * g, -e * harmonic, e * e * sequence_normalized(SequenceKind.B_star, m)]
    )
    return (-1) ** spec.k * scale * bracket


@dataclass(frozen=True)
class AsymptoticRow:
    k: int
    quantity: str
    value: float
    limit: float

    @property
    def deviation(self) -> float:
        return self.value - self.limit


def asymptotic_report(k_max: int, k_min: int = 1) -> list[AsymptoticRow]:
    """Rows ``(k, quantity, value, limit)`` for the large-k behaviour of mu.

    Quantities per k:

    ``e2k2_mu_minus``  e^2 k^2 mu_{-1,k}, tends to 1
    ``e2k2_mu_plus``   e^2 k^2 mu_{+1,k}, tends to e^2
    ``limit_B``        (e H_k - B_k/k!) / e^2, tends to mu_{-1,1}
    ``limit_B_star``   (e H_k - e^2 B*_k/k!) / e^2, tends to -mu_{+1,1}

    Thresholds are left to the caller.
    """
    if k_max < 20:
        raise DomainError("k_max must be at least 20")
    e = math.e
    mu_minus_1 = mu_direct(-1, 1)
    mu_plus_1 = mu_direct(1, 1)
    rows = []
    for k in range(k_min, k_max + 1):
        harmonic = sequence_normalized(SequenceKind.A, k)
        rows.append(AsymptoticRow(k, "e2k2_mu_minus", e * e * k * k * mu_direct(-1, k), 1.0))
        rows.append(AsymptoticRow(k, "e2k2_mu_plus", e * e * k * k * mu_direct(1, k), e * e))
        rows.append(AsymptoticRow(
            k, "limit_B",
            (e * harmonic - sequence_normalized(SequenceKind.B, k)) / (e * e),
            mu_minus_1,
        ))
        rows.append(AsymptoticRow(
            k, "limit_B_star",
            (e * harmonic - e * e * sequence_normalized(SequenceKind.B_star, k)) / (e * e),
            -mu_plus_1,
        ))
    return rows
