"""Distributions of the exponential cascade Y_n and its logarithm Z_n.

``Y_n`` is an alternating ratio of products of IID Exponential(1)
variates; ``Z_n = ln Y_n``.  For even ``n``, ``Z_n`` is a sum of ``n/2``
independent standard logistic variables.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from ..errors import DomainError
from ..numerics import QuadratureResult, integrate_adaptive, integrate_semi_infinite
from ..special import EULER_GAMMA, ei, gamma_one_plus, pi_omega_over_sinh

__all__ = [
    "SurvivalFn",
    "cdf_y_closed",
    "survival_z",
    "char_fn_z",
    "cdf_z_gil_pelaez",
    "gil_pelaez_integrand",
    "omega_cutoff",
]

Z_LIMIT = 40.0
_TAYLOR_RADIUS = 0.1
_TAYLOR_TERMS = 24


class SurvivalFn(enum.IntEnum):
    """Even convolution order ``n - 1`` of the logistic survival function."""

    order2 = 2
    order4 = 4
    order6 = 6


def _check_n(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"cascade index must be a positive integer, got {n!r}")
    return int(n)


# -- closed forms --------------------------------------------------------------

def _half_taylor(s, sign: float):
    """``1/2 + sign * sum_{k>=1} (-1)^(k+1) s^k / ((k+1)(k+2))``."""
    acc = np.zeros_like(s)
    for k in range(_TAYLOR_TERMS, 0, -1):
        acc = (acc + (-1) ** (k + 1) / ((k + 1) * (k + 2))) * s
    return 0.5 + sign * acc


def _cdf_y4(y):
    # y (y - ln y - 1) / (y - 1)^2 ; Taylor about y = 1
    s = y - 1.0
    near = np.abs(s) < _TAYLOR_RADIUS
    ss = np.where(near, 0.5, s)
    yy = 1.0 + ss
    direct = yy * (ss - np.log1p(ss)) / (ss * ss)
    return np.where(near, _half_taylor(np.where(near, s, 0.0), 1.0), direct)


def _f_y3(y: float) -> float:
    if y <= 2.0:
        return -y * math.exp(y) * ei(-y)
    # y e^y E1(y) = int_0^inf e^-t / (1 + t/y) dt; the Ei series cancels badly here
    res = integrate_semi_infinite(lambda t: np.exp(-t) / (1.0 + t / y), 1e-15, vectorized=True)
    return res.value


def cdf_y_closed(n: int, y):
    """Closed-form CDF of ``Y_n`` for ``n <= 4``."""
    n = _check_n(n)
    if n > 4:
        raise DomainError("closed-form CDF of Y_n is only available for n <= 4")
    y_arr = np.asarray(y, dtype=float)
    if np.any(~(y_arr > 0)) or np.any(~np.isfinite(y_arr)):
        raise DomainError("y must be finite and positive")
    if n == 1:
        out = -np.expm1(-y_arr)
    elif n == 2:
        out = y_arr / (y_arr + 1.0)
    elif n == 3:
        out = np.vectorize(_f_y3, otypes=[float])(y_arr)
    else:
        out = _cdf_y4(y_arr)
    return float(out) if out.ndim == 0 else out


def _survival2(z):
    w = np.exp(-np.abs(z))
    return np.where(z > 0, w / (1.0 + w), 1.0 / (1.0 + w))


def _survival4(z):
    # (y ln y - y + 1) / (y - 1)^2 with y = e^z, rewritten in w = e^-z for z > 0
    s = np.expm1(z)
    near = np.abs(s) < _TAYLOR_RADIUS
    zz = np.where(near, 1.0, z)
    w = np.exp(-np.abs(zz))
    pos = (zz * w - w + w * w) / (1.0 - w) ** 2
    neg = (w * zz - w + 1.0) / (1.0 - w) ** 2
    return np.where(near, _half_taylor(np.where(near, s, 0.0), -1.0), np.where(zz > 0, pos, neg))


def _survival6(z):
    lz = z
    a = 0.5 * (lz * lz - 4.0 * lz + math.pi**2 + 2.0)
    b = 0.5 * (lz * lz + 4.0 * lz + math.pi**2 - 4.0)
    w = np.exp(-np.abs(z))
    # numerator a y^2 - b y + 1 over (y + 1)^3, divided through by y^3 when y > 1
    pos = (a * w - b * w * w + w**3) / (1.0 + w) ** 3
    neg = (a * w * w - b * w + 1.0) / (w + 1.0) ** 3
    return np.where(z > 0, pos, neg)


_SURVIVAL = {2: _survival2, 4: _survival4, 6: _survival6}


def survival_z(order: SurvivalFn | int, log_y):
    """Survival function of the ``order/2``-fold logistic sum at ``z = ln y``."""
    order = SurvivalFn(order)
    z = np.asarray(log_y, dtype=float)
    if not np.all(np.isfinite(z)):
        raise DomainError("log_y must be finite")
    out = _SURVIVAL[int(order)](z)
    return float(out) if out.ndim == 0 else out


# -- characteristic function and inversion -------------------------------------

def char_fn_z(n: int, omega):
    """Characteristic function of ``Z_n``.

    Odd ``n``: ``Gamma(1+iw)^((n+1)/2) * Gamma(1-iw)^((n-1)/2)``;
    even ``n``: ``(pi w / sinh(pi w))^(n/2)``.
    """
    n = _check_n(n)
    w = np.asarray(omega, dtype=float)
    if np.any(np.abs(w) > 50.0):
        raise DomainError("|omega| must not exceed 50")
    if n % 2 == 0:
        out = pi_omega_over_sinh(w) ** (n // 2) + 0j
        out = np.asarray(out)
    else:
        g = np.asarray(gamma_one_plus(w))
        out = g ** ((n + 1) // 2) * np.conj(g) ** ((n - 1) // 2)
    return complex(out) if out.ndim == 0 else out


_SMALL_OMEGA = 1e-6


def gil_pelaez_integrand(n: int, z: float):
    """Vectorized ``omega -> dF/d(omega)`` whose integral over (0, inf) is ``F_{Z_n}(z) - 1/2``.

    The odd-``n`` inner integral over ``t`` is folded into
    ``Im[e^{i z w} conj(Gamma(1 + i w))]``.
    """
    n = _check_n(n)
    z = float(z)
    if n % 2 == 0:
        power = n // 2

        def integrand(w):
            w = np.asarray(w, dtype=float)
            small = w < _SMALL_OMEGA
            ws = np.where(small, 1.0, w)
            kernel = pi_omega_over_sinh(w) ** power
            return np.where(small, z / math.pi, np.sin(z * ws) / (math.pi * ws) * kernel)

        return integrand

    power = (n - 1) // 2

    def integrand(w):
        w = np.asarray(w, dtype=float)
        small = w < _SMALL_OMEGA
        ws = np.where(small, 1.0, w)
        g = np.asarray(gamma_one_plus(ws))
        phase = np.imag(np.exp(1j * z * ws) * np.conj(g))
        kernel = pi_omega_over_sinh(ws) ** power if power else 1.0
        return np.where(small, (z + EULER_GAMMA) / math.pi, kernel * phase / (math.pi * ws))

    return integrand


def _envelope(n: int, w: float) -> float:
    # |integrand| <= (pi w / sinh pi w)^(n/2) / (pi w) for every n and z
    return pi_omega_over_sinh(w) ** (n / 2.0) / (math.pi * w)


def omega_cutoff(n: int, tol: float) -> tuple[float, float]:
    """Truncation point ``W`` and the bound on ``int_W^inf |integrand|``.

    For ``w >= 1`` the envelope decays at log-rate at least ``n pi / 4``,
    so the tail is below ``envelope(W) * 4 / (n pi)``.
    """
    rate = n * math.pi / 4.0
    w = 1.0
    while True:
        tail = _envelope(n, w) / rate
        if tail < tol / 10.0 or w >= 50.0:
            return w, tail
        w += 0.5


def cdf_z_gil_pelaez(n: int, z: float, tol: float = 1e-13) -> QuadratureResult:
    """``F_{Z_n}(z)`` by Gil-Pelaez inversion of the characteristic function."""
    n = _check_n(n)
    z = float(z)
    if not abs(z) <= Z_LIMIT:
        raise DomainError(f"|z| must not exceed {Z_LIMIT}")
    if n % 2 == 0 and z == 0.0:
        # sin(0) makes the integrand vanish identically
        return QuadratureResult(0.5, 0.0, 1)
    cut, tail = omega_cutoff(n, tol)
    res = integrate_adaptive(
        gil_pelaez_integrand(n, z), 0.0, cut, tol - tail, vectorized=True, max_panels=8000,
    )
    return QuadratureResult(0.5 + res.value, res.abs_error + tail, res.evaluations)
