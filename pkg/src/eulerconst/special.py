"""Exponential integral, Gamma on the line 1 + i*omega, and zeta(2..4)."""

from __future__ import annotations

import enum
import math

import numpy as np

from .errors import DomainError
from .numerics import integrate_adaptive, integrate_semi_infinite

__all__ = [
    "EULER_GAMMA",
    "EiMethod",
    "ei",
    "gamma_one_plus",
    "log_gamma_one_plus",
    "zeta_small",
    "ZETA",
    "pi_omega_over_sinh",
]

# Reference value used only inside the Ei series; the constants module
# computes gamma independently.
EULER_GAMMA = 0.57721566490153286061

GAMMA_CLAMP = 50.0

# Godfrey's Lanczos coefficients, g = 607/128, 15 terms.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = np.array([
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
])
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


class EiMethod(str, enum.Enum):
    power_series = "power_series"
    quadrature_oracle = "quadrature_oracle"


def _ei_series(x: float) -> float:
    terms = [EULER_GAMMA, math.log(abs(x))]
    term = 1.0
    partial = 0.0
    i = 0
    while True:
        i += 1
        term *= x / i
        contrib = term / i
        terms.append(contrib)
        partial += contrib
        if abs(contrib) < 1e-18 * max(abs(partial), 1e-300):
            break
    return math.fsum(terms)


def _e1_quad(x: float, tol: float) -> float:
    # E1(x) = int_0^inf exp(-(s + x)) / (s + x) ds, x > 0
    res = integrate_semi_infinite(lambda s: np.exp(-(s + x)) / (s + x), tol, vectorized=True)
    return res.value


def _sinhc(t):
    t = np.asarray(t, dtype=float)
    small = np.abs(t) < 1e-4
    safe = np.where(small, 1.0, t)
    return np.where(small, 1.0 + t * t / 6.0, np.sinh(safe) / safe)


def _ei_quadrature(x: float, tol: float = 1e-14) -> float:
    if x < 0:
        return -_e1_quad(-x, tol)
    # principal value: the (-x, x) part of e^t/t pairs up into 2 sinh(t)/t
    symmetric = integrate_adaptive(lambda t: 2.0 * _sinhc(t), 0.0, x, tol, vectorized=True)
    return symmetric.value - _e1_quad(x, tol)


def ei(x: float, method: EiMethod | str = EiMethod.power_series) -> float:
    """Exponential integral ``Ei(x) = PV int_{-inf}^x e^t / t dt``.

    ``power_series`` sums ``gamma + ln|x| + sum x^i / (i i!)``;
    ``quadrature_oracle`` integrates the definition and exists for cross-checks.
    """
    method = EiMethod(method)
    x = float(x)
    if x == 0.0 or not math.isfinite(x):
        raise DomainError("Ei is defined for finite nonzero x")
    if method is EiMethod.power_series:
        return _ei_series(x)
    return _ei_quadrature(x)


def log_gamma_one_plus(omega):
    """Principal-branch ``ln Gamma(1 + i omega)`` by the Lanczos formula."""
    z = 1j * np.asarray(omega, dtype=float)
    series = _LANCZOS_C[0] + sum(_LANCZOS_C[k] / (z + k) for k in range(1, len(_LANCZOS_C)))
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * np.log(t) - t + np.log(series)


def gamma_one_plus(omega, return_clamped: bool = False):
    """``Gamma(1 + i omega)`` for real ``omega`` (scalar or array).

    For ``|omega| > 50`` the modulus is below 1e-30 and the value is
    clamped to 0; pass ``return_clamped=True`` to also get the clamp mask.
    """
    w = np.asarray(omega, dtype=float)
    clamped = np.abs(w) > GAMMA_CLAMP
    inside = np.where(clamped, 0.0, w)
    value = np.where(clamped, 0.0 + 0.0j, np.exp(log_gamma_one_plus(inside)))
    # Gamma(1) = 1 exactly; the Lanczos sum is only good to a few ulp there
    value = np.where(w == 0.0, 1.0 + 0.0j, value)
    if value.ndim == 0:
        value = complex(value)
        clamped = bool(clamped)
    if return_clamped:
        return value, clamped
    return value


def pi_omega_over_sinh(omega):
    """``pi omega / sinh(pi omega)``, equal to ``|Gamma(1 + i omega)|**2``."""
    x = np.pi * np.abs(np.asarray(omega, dtype=float))
    small = x < 1e-4
    safe = np.where(small, 1.0, x)
    with np.errstate(over="ignore"):
        # x / sinh(x) = 2x e^-x / (1 - e^-2x); stays finite for large x
        big = 2.0 * safe * np.exp(-safe) / -np.expm1(-2.0 * safe)
    out = np.where(small, 1.0 - x * x / 6.0, big)
    return float(out) if out.ndim == 0 else out


def _zeta3(terms: int = 100_000) -> float:
    i = np.arange(terms, 0, -1, dtype=float)
    head = math.fsum(1.0 / i**3)
    n = float(terms)
    # Euler-Maclaurin tail of sum_{i>n} i^-3
    tail = 1.0 / (2 * n * n) - 1.0 / (2 * n**3) + 1.0 / (4 * n**4)
    return head + tail


ZETA = {
    2: math.pi**2 / 6.0,
    3: _zeta3(),
    4: math.pi**4 / 90.0,
}


def zeta_small(m: int) -> float:
    """Riemann zeta at ``m`` in {2, 3, 4}."""
    if m not in ZETA:
        raise DomainError(f"zeta_small supports m in {{2, 3, 4}}, got {m!r}")
    return ZETA[m]
