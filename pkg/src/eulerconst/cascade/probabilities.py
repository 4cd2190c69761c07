"""The probabilities Pi_n = Pr{Y_n <= 1} = F_{Z_n}(0) by four methods."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ..constants import ConstantId, constant, delta_m, sigma
from ..errors import DomainError
from ..numerics import integrate_semi_infinite
from ..special import zeta_small
from .distributions import cdf_z_gil_pelaez, survival_z
from .sampling import count_below_one

__all__ = [
    "PiMethod",
    "PiEstimate",
    "pi_eval",
    "pi7_closed",
    "pi_monte_carlo",
    "TABLE1",
    "TABLE2",
]

# Published values: six printed digits for n <= 10 ...
TABLE1 = {
    1: "0.632120", 2: "0.5", 3: "0.596347", 4: "0.5", 5: "0.577215",
    6: "0.5", 7: "0.566094", 8: "0.5", 9: "0.558672", 10: "0.5",
}
TABLE1_NOTES = {1: "1 - e^-1", 3: "delta", 5: "gamma"}

# ... and 50 decimals for odd n <= 15.
TABLE2 = {
    1: "0.63212055882855767840447622983853913255418886896823",
    3: "0.59634736232319407434107849936927937607417786015254",
    5: "0.57721566490153286060651209008240243104215933593992",
    7: "0.56609435541264796901908591583288674247188413864361",
    9: "0.55867279019459907350395199904241483559079945290197",
    11: "0.55328267668997479292771549900978480433113900145274",
    13: "0.54914332831601761785791255217329440945377229653973",
    15: "0.54583694813712457806697974073677754090116258346196",
}


class PiMethod(str, enum.Enum):
    closed = "closed"
    gil_pelaez = "gil_pelaez"
    survival_integral = "survival_integral"
    monte_carlo = "monte_carlo"


@dataclass(frozen=True)
class PiEstimate:
    n: int
    method: PiMethod
    value: float
    error_bound: float
    samples_or_evals: int
    seed: int | None = None


def pi7_closed(form: str = "zeta_sigma") -> float:
    """Closed expressions for Pi_7.

    ``zeta_sigma``: in gamma, zeta(2), zeta(3), sigma_1..3;
    ``delta_m``: in gamma, zeta(2), delta_1..3.
    """
    g = constant(ConstantId.gamma).value
    z2 = zeta_small(2)
    if form == "zeta_sigma":
        z3 = zeta_small(3)
        s1, s2, s3 = sigma(1), sigma(2), sigma(3)
        inner = math.fsum([
            -g**3, 3 * s1 * g * g, -21 * g * z2, -2 * z3, 21 * s1 * z2, -6 * s2 * g, 6 * s3,
        ])
        return math.fsum([5.0 / 6.0 * math.e * inner, -1.5 * (g * g + 2.0 / 3.0 * g + 7 * z2)])
    if form == "delta_m":
        d1, d2, d3 = delta_m(1), delta_m(2), delta_m(3)
        return math.fsum([
            (2.5 * d1 - 1.5) * (g * g + 7 * z2),
            -(2.5 * d2 + 1.0) * g,
            5.0 / 6.0 * d3,
        ])
    raise DomainError(f"unknown Pi_7 form {form!r}")


def _closed(n: int) -> PiEstimate:
    if n % 2 == 0:
        return PiEstimate(n, PiMethod.closed, 0.5, 0.0, 0)
    if n == 1:
        return PiEstimate(n, PiMethod.closed, -math.expm1(-1.0), 1e-16, 0)
    if n == 3:
        c = constant(ConstantId.delta)
        return PiEstimate(n, PiMethod.closed, c.value, c.abs_error, 0)
    if n == 5:
        c = constant(ConstantId.gamma)
        return PiEstimate(n, PiMethod.closed, c.value, c.abs_error, 0)
    if n == 7:
        # inputs are good to ~1e-15; the bracket cancels from ~60 down to 0.57
        return PiEstimate(n, PiMethod.closed, pi7_closed("zeta_sigma"), 1e-13, 0)
    raise DomainError(f"no closed form for Pi_{n}")


def _survival_integral(n: int, tol: float) -> PiEstimate:
    if n not in (3, 5, 7):
        raise DomainError("survival_integral is available for n in {3, 5, 7}")
    order = n - 1

    def integrand(x):
        return survival_z(order, np.log(x)) * np.exp(-x)

    res = integrate_semi_infinite(integrand, tol, vectorized=True, breakpoints=(1.0,))
    return PiEstimate(n, PiMethod.survival_integral, res.value, res.abs_error, res.evaluations)


def pi_monte_carlo(
    n: int, samples: int, seed: int, stream: int = 0, *, inverse: bool = False
) -> PiEstimate:
    """Frequency of ``Y_n <= 1``; ``error_bound`` is four binomial standard errors."""
    if samples < 1:
        raise DomainError("samples must be positive")
    hits = count_below_one(n, samples, seed, stream, inverse=inverse)
    p = hits / samples
    sd = math.sqrt(max(p * (1.0 - p), 0.0) / samples)
    return PiEstimate(n, PiMethod.monte_carlo, p, 4.0 * sd, samples, seed)


def pi_eval(
    n: int,
    method: PiMethod | str = PiMethod.gil_pelaez,
    *,
    tol: float = 1e-13,
    samples: int = 10**7,
    seed: int | None = None,
    stream: int = 0,
) -> PiEstimate:
    """``Pi_n = F_{Y_n}(1)`` by the requested method.

    ``closed`` covers even ``n`` and ``n`` in {1, 3, 5, 7};
    ``survival_integral`` covers ``n`` in {3, 5, 7};
    ``gil_pelaez`` and ``monte_carlo`` cover every ``n >= 1``.
    Monte Carlo requires an explicit ``seed``.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    try:
        method = PiMethod(method)
    except ValueError:
        raise DomainError(f"unknown method {method!r}") from None
    if method is PiMethod.closed:
        return _closed(n)
    if method is PiMethod.survival_integral:
        return _survival_integral(n, tol)
    if method is PiMethod.monte_carlo:
        if seed is None:
            raise DomainError("monte_carlo needs an explicit seed")
        return pi_monte_carlo(n, samples, seed, stream)
    res = cdf_z_gil_pelaez(n, 0.0, tol)
    return PiEstimate(n, PiMethod.gil_pelaez, res.value, res.abs_error, res.evaluations)
