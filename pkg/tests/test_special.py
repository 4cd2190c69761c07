import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerconst.errors import DomainError
from eulerconst.numerics import integrate_semi_infinite
from eulerconst.special import (
    EULER_GAMMA,
    EiMethod,
    ei,
    gamma_one_plus,
    log_gamma_one_plus,
    pi_omega_over_sinh,
    zeta_small,
)

DELTA = 0.59634736232319407434
DELTA_STAR = -5.151464322989328


@pytest.mark.parametrize("x", [-2.0, -1.0, -0.5, 0.5, 1.0, 2.0])
def test_ei_series_vs_quadrature_oracle(x):
    a = ei(x, EiMethod.power_series)
    b = ei(x, EiMethod.quadrature_oracle)
    assert a == pytest.approx(b, abs=1e-10)
    assert a == pytest.approx(float(mpmath.ei(x)), rel=1e-14)


def test_ei_examples():
    assert ei(-1.0) == pytest.approx(-DELTA / math.e, abs=1e-15)
    assert abs(ei(-1.0) - (-0.219384)) < 5e-7
    assert ei(1.0) == pytest.approx(-DELTA_STAR / math.e, abs=1e-14)
    assert abs(ei(1.0) - 1.895118) < 5e-7
    assert -1.0 * math.e * ei(-1.0) == pytest.approx(DELTA, abs=1e-15)


def test_ei_zero_is_domain_error():
    with pytest.raises(DomainError):
        ei(0.0)


def test_gamma_at_zero():
    assert gamma_one_plus(0.0) == 1 + 0j


def test_gamma_at_i_examples():
    g = gamma_one_plus(1.0)
    assert abs(g) ** 2 == pytest.approx(math.pi / math.sinh(math.pi), abs=1e-14)
    assert abs(g - complex(0.498016, -0.154950)) < 1e-6


def test_gamma_at_i_vs_defining_integral():
    # Re / Im of int_0^inf e^-t t^{i} dt, split at t = 1
    def re(t):
        return math.exp(-t) * math.cos(math.log(t)) if t > 0 else 0.0

    def im(t):
        return math.exp(-t) * math.sin(math.log(t)) if t > 0 else 0.0

    parts = []
    for f in (re, im):
        # t = e^-s on (0, 1] unwinds the oscillation of t^{i} near 0
        head = integrate_semi_infinite(lambda s: f(math.exp(-s)) * math.exp(-s), 1e-13)
        tail = integrate_semi_infinite(lambda t: f(t + 1.0), 1e-13)
        parts.append(head.value + tail.value)
    g = gamma_one_plus(1.0)
    assert g.real == pytest.approx(parts[0], abs=1e-12)
    assert g.imag == pytest.approx(parts[1], abs=1e-12)


@pytest.mark.parametrize("omega", [0.01, 0.3, 1.0, 2.5, 7.0, 15.0, 30.0, 45.0])
def test_gamma_vs_mpmath(omega):
    ref = complex(mpmath.gamma(mpmath.mpc(1, omega)))
    got = gamma_one_plus(omega)
    assert abs(got - ref) <= 1e-13 * abs(ref)


def test_reflection_identity_grid():
    omega = np.round(np.arange(1, 101) * 0.1, 10)
    g = gamma_one_plus(omega)
    lhs = np.abs(g) ** 2
    rhs = pi_omega_over_sinh(omega)
    assert np.max(np.abs(lhs - rhs)) <= 1e-12


@settings(max_examples=60, deadline=None)
@given(st.floats(0.0, 50.0))
def test_conjugate_symmetry(omega):
    a = gamma_one_plus(-omega)
    b = gamma_one_plus(omega).conjugate()
    assert abs(a - b) <= 1e-15 * max(1.0, abs(b))


def test_small_omega_expansion():
    w = 1e-6
    assert abs(gamma_one_plus(w).imag / w + EULER_GAMMA) <= 1e-5


def test_gamma_clamp_flag():
    val, clamped = gamma_one_plus(60.0, return_clamped=True)
    assert val == 0 and clamped
    val, clamped = gamma_one_plus(10.0, return_clamped=True)
    assert val != 0 and not clamped


def test_log_gamma_consistent():
    for w in (0.5, 3.0, 20.0):
        assert cmath.exp(log_gamma_one_plus(w)) == pytest.approx(gamma_one_plus(w), rel=1e-14)


def test_pi_omega_over_sinh_small_and_large():
    assert pi_omega_over_sinh(0.0) == 1.0
    assert pi_omega_over_sinh(1e-9) == pytest.approx(1.0, abs=1e-15)
    x = math.pi * 3.0
    assert pi_omega_over_sinh(3.0) == pytest.approx(x / math.sinh(x), rel=1e-14)


def test_zeta_values():
    assert zeta_small(2) == pytest.approx(math.pi**2 / 6, abs=1e-16)
    assert zeta_small(4) == pytest.approx(math.pi**4 / 90, abs=1e-15)
    assert abs(zeta_small(4) - 1.082323) < 5e-7
    # direct partial sum bracketed by integral tail bounds
    n = 2000
    partial = math.fsum(1.0 / i**3 for i in range(1, n + 1))
    lower = partial + 1.0 / (2 * (n + 1) ** 2)
    upper = partial + 1.0 / (2 * n**2)
    assert lower <= zeta_small(3) <= upper
    assert zeta_small(3) == pytest.approx(float(mpmath.zeta(3)), abs=1e-15)


def test_zeta_domain():
    with pytest.raises(DomainError):
        zeta_small(5)
