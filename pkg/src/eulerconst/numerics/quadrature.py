"""Adaptive Gauss-Kronrod quadrature on finite and semi-infinite intervals.

All integrators return a :class:`QuadratureResult`.  The error estimate of a
panel is the plain ``|K15 - G7|`` difference, which for smooth integrands is
a (very) conservative bound on the error of the Kronrod value actually
returned.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..errors import QuadratureError, TailBoundError

__all__ = [
    "QuadratureResult",
    "integrate_adaptive",
    "integrate_semi_infinite",
    "integrate_half_line",
]

# 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# Nodes on [-1, 1] in ascending order; weights aligned with them.
NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[[1, 3, 5]] = _WG[:3]
GAUSS_WEIGHTS[7] = _WG[3]
GAUSS_WEIGHTS[[9, 11, 13]] = _WG[2::-1]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error: float
    evaluations: int


def _sampler(f: Callable, vectorized: bool) -> Callable[[np.ndarray], np.ndarray]:
    if vectorized:
        return lambda x: np.asarray(f(x), dtype=float)
    return lambda x: np.fromiter((f(float(t)) for t in x), dtype=float, count=len(x))


def _panel(fx: Callable, a: float, b: float) -> tuple[float, float, bool]:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    y = fx(mid + half * NODES)
    if not np.all(np.isfinite(y)):
        bad = float((mid + half * NODES)[~np.isfinite(y)][0])
        raise QuadratureError(f"integrand not finite at x={bad!r}", float("nan"), float("inf"), 0)
    kron = half * float(np.dot(KRONROD_WEIGHTS, y))
    gauss = half * float(np.dot(GAUSS_WEIGHTS, y))
    err = abs(kron - gauss)
    mass = abs(half) * float(np.dot(KRONROD_WEIGHTS, np.abs(y)))
    # below ~50 ulps of the panel mass, splitting cannot improve anything
    at_floor = err <= 50.0 * _EPS * mass
    return kron, max(err, _EPS * mass), at_floor


def integrate_adaptive(
    f: Callable,
    a: float,
    b: float,
    tol: float = 1e-12,
    *,
    vectorized: bool = False,
    max_panels: int = 4000,
    breakpoints=(),
) -> QuadratureResult:
    """Integrate ``f`` over ``[a, b]`` to absolute tolerance ``tol``.

    Globally adaptive bisection: the panel with the largest error estimate
    is split until the summed estimate drops below ``tol``.  ``f`` is never
    evaluated at ``a`` or ``b``.  With ``vectorized=True`` it receives a
    numpy array of 15 nodes per call.

    Raises :class:`QuadratureError` (carrying the best estimate) when
    ``max_panels`` is exhausted first.  If every remaining error sits at
    the roundoff floor of its panel, the result is returned with that
    (honest, possibly > tol) error instead.
    """
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise ValueError(f"need finite a < b, got [{a}, {b}]")
    if not tol > 0:
        raise ValueError("tol must be positive")
    fx = _sampler(f, vectorized)

    edges = [a, *sorted(p for p in breakpoints if a < p < b), b]
    heap: list[tuple[float, float, float, float, bool]] = []
    total_err = 0.0
    evaluations = 0
    for lo, hi in zip(edges[:-1], edges[1:]):
        val, err, at_floor = _panel(fx, lo, hi)
        evaluations += 15
        heapq.heappush(heap, (-err, lo, hi, val, at_floor))
        total_err += err

    while total_err > tol:
        if len(heap) >= max_panels:
            value = math.fsum(item[3] for item in heap)
            raise QuadratureError(
                f"no convergence on [{a}, {b}] within {max_panels} panels",
                value, total_err, evaluations,
            )
        if heap[0][4]:
            # worst remaining panel is roundoff-limited: no split can help
            break
        neg_err, lo, hi, val, _ = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            heapq.heappush(heap, (neg_err, lo, hi, val, True))
            continue
        v1, e1, f1 = _panel(fx, lo, mid)
        v2, e2, f2 = _panel(fx, mid, hi)
        evaluations += 30
        heapq.heappush(heap, (-e1, lo, mid, v1, f1))
        heapq.heappush(heap, (-e2, mid, hi, v2, f2))
        total_err += e1 + e2 + neg_err

        if len(heap) % 64 == 0:
            # refresh the running sum to stop drift
            total_err = math.fsum(-item[0] for item in heap)

    value = math.fsum(item[3] for item in heap)
    abs_error = math.fsum(-item[0] for item in heap)
    return QuadratureResult(value, abs_error, evaluations)


def _tail_envelope(fx: Callable, cut: float, decay: float) -> float:
    """Bound ``int_cut^inf |f|`` assuming ``|f(t)| <= M exp(-decay (t - cut))``.

    ``M`` is estimated from samples on ``[cut, 4 cut]``; growth beyond the
    assumed envelope shows up as a larger ``M`` rather than being ignored.
    """
    t = cut + cut * np.linspace(0.0, 3.0, 25)
    with np.errstate(over="ignore", invalid="ignore"):
        y = np.abs(fx(t))
    if not np.all(np.isfinite(y)):
        return math.inf
    envelope = float(np.max(y * np.exp(decay * (t - cut))))
    return envelope / decay


def integrate_semi_infinite(
    f: Callable,
    tol: float = 1e-12,
    *,
    decay: float = 1.0,
    cut: float | None = None,
    vectorized: bool = False,
    max_cut: float = 1000.0,
    max_panels: int = 4000,
    breakpoints=(),
) -> QuadratureResult:
    """Integrate ``f`` over ``(0, inf)``.

    ``|f|`` must eventually be dominated by ``C exp(-decay t)``.  The range
    is cut at the first ``T`` (doubling from 1) whose sampled tail envelope
    is below ``tol/10``; ``[0, T]`` is then integrated adaptively and the
    tail bound is added to the reported error.  An explicit ``cut`` skips
    the search but is still checked.
    """
    if not decay > 0:
        raise ValueError("decay rate must be positive")
    fx = _sampler(f, vectorized)
    tail_tol = tol / 10.0
    if cut is None:
        cut = 1.0
        tail = _tail_envelope(fx, cut, decay)
        while tail > tail_tol:
            cut *= 2.0
            if cut > max_cut:
                raise TailBoundError(
                    f"tail of integrand not below {tail_tol:g} by t={max_cut:g}",
                    float("nan"), tail, 0,
                )
            tail = _tail_envelope(fx, cut, decay)
    else:
        tail = _tail_envelope(fx, cut, decay)
        if tail > tail_tol:
            raise TailBoundError(
                f"tail bound {tail:g} beyond t={cut:g} exceeds {tail_tol:g}",
                float("nan"), tail, 0,
            )
    body = integrate_adaptive(
        fx, 0.0, cut, tol - tail, vectorized=True,
        max_panels=max_panels, breakpoints=breakpoints,
    )
    return QuadratureResult(body.value, body.abs_error + tail, body.evaluations + 50)


def integrate_half_line(
    f: Callable,
    tol: float = 1e-12,
    *,
    scale: float = 1.0,
    vectorized: bool = False,
    max_panels: int = 4000,
) -> QuadratureResult:
    """Integrate ``f`` over ``(0, inf)`` through ``x = scale * s / (1 - s)``.

    Meant for algebraically decaying integrands (``|f| = O(x^-2)`` or
    faster), where an exponential tail cut does not apply.
    """
    fx = _sampler(f, vectorized)

    def mapped(s):
        one_minus = 1.0 - s
        x = scale * s / one_minus
        return fx(x) * (scale / (one_minus * one_minus))

    return integrate_adaptive(mapped, 0.0, 1.0, tol, vectorized=True, max_panels=max_panels)
