"""The constants e, gamma, delta, delta*, plus sigma_m, delta_m and Gumbel moments.

Each constant can be computed by several independent routes; ``best``
returns the registry value used downstream.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .numerics import QuadratureResult, integrate_adaptive, integrate_semi_infinite
from .special import ei, zeta_small

__all__ = [
    "ConstantId",
    "ConstantValue",
    "SigmaDelta",
    "METHODS",
    "constant",
    "best",
    "sigma",
    "delta_m",
    "gumbel_moment",
    "sigma_delta",
    "hardy_integral",
]

_QUAD_TOL = 1e-14


class ConstantId(str, enum.Enum):
    e = "e"
    gamma = "gamma"
    delta = "delta"
    delta_star = "delta_star"


@dataclass(frozen=True)
class ConstantValue:
    id: ConstantId
    method: str
    value: float
    abs_error: float


@dataclass(frozen=True)
class SigmaDelta:
    m: int
    sigma_m: float
    delta_m: float


def _e_series():
    terms = []
    term = 1.0
    for k in range(1, 25):
        terms.append(term)
        term /= k
    return math.fsum(terms), 1e-16


def _gamma_harmonic(n: int = 10**6):
    # H_n - ln n - 1/(2n) = gamma - 1/(12 n^2) + O(n^-4)
    harmonic = math.fsum(1.0 / np.arange(1, n + 1, dtype=float))
    value = harmonic - math.log(n) - 0.5 / n
    return value, 1.0 / (12.0 * n * n) + 8.0 * math.ulp(harmonic)


def _gamma_integral_log():
    # gamma = -int_0^inf e^-t ln t dt, split at t = 1 (log singularity on the left)
    head = integrate_adaptive(lambda t: np.exp(-t) * np.log(t), 0.0, 1.0, _QUAD_TOL, vectorized=True)
    tail = integrate_semi_infinite(lambda s: np.exp(-1.0 - s) * np.log1p(s), _QUAD_TOL, vectorized=True)
    return -(head.value + tail.value), head.abs_error + tail.abs_error


def _gamma_unit_integrand(t):
    t = np.asarray(t, dtype=float)
    s = 1.0 - t
    near_one = s < 1e-3
    safe_s = np.where(near_one, 0.5, s)
    direct = 1.0 / np.log1p(-safe_s) + 1.0 / safe_s
    # 1/ln(1-s) + 1/s, Taylor in s
    series = 0.5 + s * (1 / 12 + s * (1 / 24 + s * (19 / 720 + s * (3 / 160))))
    return np.where(near_one, series, direct)


def _gamma_integral_unit():
    res = integrate_adaptive(_gamma_unit_integrand, 0.0, 1.0, _QUAD_TOL, vectorized=True)
    return res.value, res.abs_error


def _ei_form(x: float):
    value = -math.e * ei(x)
    return value, 4.0 * math.ulp(abs(value)) + 1e-15


def _delta_integral_ratio():
    res = integrate_semi_infinite(lambda t: np.exp(-t) / (t + 1.0), _QUAD_TOL, vectorized=True)
    return res.value, res.abs_error


def _delta_integral_log1p():
    res = integrate_semi_infinite(lambda t: np.exp(-t) * np.log1p(t), _QUAD_TOL, vectorized=True)
    return res.value, res.abs_error


def _delta_integral_unit():
    res = integrate_adaptive(lambda t: 1.0 / (1.0 - np.log(t)), 0.0, 1.0, _QUAD_TOL, vectorized=True)
    return res.value, res.abs_error


METHODS = {
    ConstantId.e: {"series": _e_series},
    ConstantId.gamma: {
        "harmonic_limit": _gamma_harmonic,
        "integral_log": _gamma_integral_log,
        "integral_unit": _gamma_integral_unit,
    },
    ConstantId.delta: {
        "ei_form": lambda: _ei_form(-1.0),
        "integral_ratio": _delta_integral_ratio,
        "integral_log1p": _delta_integral_log1p,
        "integral_unit": _delta_integral_unit,
    },
    ConstantId.delta_star: {"ei_form": lambda: _ei_form(1.0)},
}

_BEST = {
    ConstantId.e: "series",
    ConstantId.gamma: "integral_log",
    ConstantId.delta: "ei_form",
    ConstantId.delta_star: "ei_form",
}


@functools.lru_cache(maxsize=None)
def constant(id: ConstantId | str, method: str | None = None) -> ConstantValue:
    """Evaluate constant ``id`` by ``method`` (default: the registry's best)."""
    try:
        cid = ConstantId(id)
    except ValueError:
        raise DomainError(f"unknown constant {id!r}") from None
    if method is None:
        method = _BEST[cid]
    if method not in METHODS[cid]:
        raise DomainError(
            f"method {method!r} not supported for {cid.value}; "
            f"choose from {sorted(METHODS[cid])}"
        )
    value, abs_error = METHODS[cid][method]()
    return ConstantValue(cid, method, value, abs_error)


def best(id: ConstantId | str) -> float:
    return constant(id).value


def _check_m(m: int) -> None:
    if not isinstance(m, (int, np.integer)) or not 1 <= m <= 4:
        raise DomainError(f"m must be an integer in 1..4, got {m!r}")


def _sigma_series(m: int) -> float:
    terms = []
    inv_fact = 1.0
    i = 0
    while True:
        i += 1
        inv_fact /= i
        term = (-1.0) ** (i + 1) * inv_fact / i**m
        terms.append(term)
        if abs(term) < 1e-18:
            return math.fsum(terms)


def _gumbel_weight(u):
    return np.exp(-u - np.exp(-u))


def sigma_quadrature(m: int) -> QuadratureResult:
    """``(1/m!) int_0^inf u^m exp(-u - e^-u) du`` with its error estimate."""
    _check_m(m)
    res = integrate_semi_infinite(lambda u: u**m * _gumbel_weight(u), _QUAD_TOL, vectorized=True)
    scale = 1.0 / math.factorial(m)
    return QuadratureResult(res.value * scale, res.abs_error * scale, res.evaluations)


@functools.lru_cache(maxsize=None)
def sigma(m: int, method: str = "series") -> float:
    """``sigma_m = sum_{i>=1} (-1)^(i+1) / (i^m i!)``, for 1 <= m <= 4."""
    _check_m(m)
    if method == "series":
        return _sigma_series(m)
    if method == "gumbel_integral":
        return sigma_quadrature(m).value
    raise DomainError(f"unknown sigma method {method!r}")


@functools.lru_cache(maxsize=None)
def delta_m(m: int, method: str = "substitution") -> float:
    """``delta_m = -E[U^m | U <= 0]`` for standard Gumbel ``U``.

    ``substitution`` maps u = -ln(1 + s), which turns the doubly
    exponential left tail into ``(-1)^(m+1) int_0^inf log1p(s)^m e^-s ds``.
    ``truncated`` integrates the defining form on [-40, 0].
    """
    _check_m(m)
    if method == "substitution":
        res = integrate_semi_infinite(lambda s: np.log1p(s) ** m * np.exp(-s), _QUAD_TOL, vectorized=True)
        return (-1.0) ** (m + 1) * res.value
    if method == "truncated":
        res = integrate_adaptive(
            lambda u: u**m * _gumbel_weight(u), -40.0, 0.0, _QUAD_TOL, vectorized=True
        )
        return -math.e * res.value
    raise DomainError(f"unknown delta_m method {method!r}")


def gumbel_moment(m: int, method: str = "closed") -> float:
    """Raw moment ``E[U^m]`` of the standard Gumbel distribution.

    ``closed`` uses the polynomial in gamma and zeta values; ``quadrature``
    integrates ``u^m exp(-u - e^-u)`` over the real line.
    """
    _check_m(m)
    if method == "quadrature":
        right = integrate_semi_infinite(lambda u: u**m * _gumbel_weight(u), _QUAD_TOL, vectorized=True)
        left = integrate_adaptive(lambda u: u**m * _gumbel_weight(u), -40.0, 0.0, _QUAD_TOL, vectorized=True)
        return right.value + left.value
    if method != "closed":
        raise DomainError(f"unknown gumbel_moment method {method!r}")
    g = best(ConstantId.gamma)
    z2, z3, z4 = zeta_small(2), zeta_small(3), zeta_small(4)
    if m == 1:
        return g
    if m == 2:
        return g * g + z2
    if m == 3:
        return g**3 + 3 * g * z2 + 2 * z3
    return g**4 + 6 * z2 * g * g + 8 * z3 * g + 13.5 * z4


def sigma_delta(m: int) -> SigmaDelta:
    return SigmaDelta(m, sigma(m), delta_m(m))


def hardy_integral(tol: float = _QUAD_TOL) -> QuadratureResult:
    """``int_0^1 (1 - e^-t) / t dt``, the integral form of Hardy's sum."""
    return integrate_adaptive(lambda t: -np.expm1(-t) / t, 0.0, 1.0, tol, vectorized=True)
