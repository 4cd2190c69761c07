"""Consistency diagnostics: the survival-function recursion and the CLT."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import DomainError, QuadratureError
from ..numerics import integrate_half_line
from ..special import EULER_GAMMA
from .distributions import cdf_z_gil_pelaez, survival_z

__all__ = [
    "RecursionPoint",
    "recursion_check",
    "CltReport",
    "clt_report",
    "normal_cdf",
]


@dataclass(frozen=True)
class RecursionPoint:
    y: float
    lhs: float
    rhs: float
    quad_error: float
    error: str | None = None

    @property
    def abs_diff(self) -> float:
        return abs(self.lhs - self.rhs)


def _recursion_rhs(order: int, y: float, rel_step: float, tol: float):
    """``-y d/dy int_0^inf S_{order-2}(ln v) / (v + y) dv`` by central difference.

    The difference quotient is taken under the integral sign:
    ``[1/(v+y+h) - 1/(v+y-h)] / (2h) = -1 / ((v+y)^2 - h^2)``, which is the
    same finite difference without subtracting two nearly equal integrals.
    """
    h = rel_step * y
    lower = order - 2

    def integrand(v):
        return survival_z(lower, np.log(v)) / ((v + y) ** 2 - h * h)

    res = integrate_half_line(integrand, tol, scale=y, vectorized=True)
    return y * res.value, y * res.abs_error


def recursion_check(
    target_order: int,
    y_points,
    *,
    rel_step: float = 1e-4,
    tol: float = 1e-11,
) -> list[RecursionPoint]:
    """Compare the closed survival function of ``target_order`` (4 or 6) with
    the integral recursion built from the previous order, point by point."""
    if target_order not in (4, 6):
        raise DomainError("target_order must be 4 or 6")
    out = []
    for y in y_points:
        y = float(y)
        if not 0.1 < y < 10.0:
            raise DomainError(f"y={y} outside (0.1, 10)")
        if target_order == 4 and abs(y - 1.0) < 0.05:
            raise DomainError("order-4 check needs |y - 1| >= 0.05")
        lhs = survival_z(target_order, math.log(y))
        try:
            rhs, err = _recursion_rhs(target_order, y, rel_step, tol)
        except QuadratureError as exc:
            out.append(RecursionPoint(y, lhs, exc.value, exc.abs_error, str(exc)))
            continue
        out.append(RecursionPoint(y, lhs, rhs, err))
    return out


def normal_cdf(x):
    x = np.asarray(x, dtype=float)
    out = 0.5 * np.vectorize(math.erfc, otypes=[float])(-x / math.sqrt(2.0))
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class CltReport:
    n: int
    grid: tuple[float, ...]
    ks_distance: float
    mean_offset: float
    cdf: tuple[float, ...] = field(repr=False, default=())
    normal: tuple[float, ...] = field(repr=False, default=())


def clt_report(n: int, grid, tol: float = 1e-10) -> CltReport:
    """Distance between ``F_{Z_n}`` and its normal limit on a grid of ``z`` values.

    ``Z_n / (pi sqrt(n/6))`` is compared with ``Normal(offset, 1)`` where the
    offset is ``-gamma / (pi sqrt(n/6))`` for odd ``n`` and 0 for even ``n``;
    the grid is on the raw ``z`` scale.
    """
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise DomainError("clt_report needs n >= 2")
    scale = math.pi * math.sqrt(n / 6.0)
    offset = -EULER_GAMMA / scale if n % 2 else 0.0
    grid = tuple(float(z) for z in grid)
    cdf = tuple(cdf_z_gil_pelaez(n, z, tol).value for z in grid)
    normal = tuple(float(v) for v in np.atleast_1d(normal_cdf(np.array(grid) / scale - offset)))
    ks = max(abs(a - b) for a, b in zip(cdf, normal))
    return CltReport(int(n), grid, ks, offset, cdf, normal)
