import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, stats

from eulerconst import cascade, constants
from eulerconst.cascade import (
    PiMethod,
    cdf_y_closed,
    cdf_z_gil_pelaez,
    char_fn_z,
    clt_report,
    count_below_one,
    pi_eval,
    recursion_check,
    sample_y,
    survival_z,
)
from eulerconst.errors import DomainError
from eulerconst.numerics import RngState, exp_sample
from eulerconst.special import EULER_GAMMA

GRID = np.linspace(-8.0, 8.0, 65)
DELTA = constants.best("delta")


def logistic(z):
    return 1.0 / (1.0 + math.exp(-z))


# -- closed distribution functions --------------------------------------------

def test_cdf_y_closed_examples():
    assert cdf_y_closed(4, 1.0) == pytest.approx(0.5, abs=1e-15)
    assert cdf_y_closed(3, 1.0) == pytest.approx(DELTA, abs=1e-14)
    assert cdf_y_closed(1, 1.0) == pytest.approx(1 - math.exp(-1), abs=1e-15)
    assert cdf_y_closed(2, 1.0) == pytest.approx(0.5, abs=1e-15)


@pytest.mark.parametrize("y", [0.05, 0.5, 1.7, 2.0, 2.0001, 3.0, 12.0])
def test_cdf_y3_vs_mpmath(y):
    ref = float(-y * mpmath.exp(y) * mpmath.ei(-y))
    assert cdf_y_closed(3, y) == pytest.approx(ref, abs=1e-14)


@settings(max_examples=50, deadline=None)
@given(st.floats(-0.2, 0.2))
def test_cdf_y4_near_one_vs_mpmath(s):
    y = 1.0 + s
    mpmath.mp.dps = 40
    if y == 1.0:
        ref = 0.5
    else:
        yy = mpmath.mpf(y)
        ref = float(yy * (yy - mpmath.log(yy) - 1) / (yy - 1) ** 2)
    assert cdf_y_closed(4, y) == pytest.approx(ref, abs=2e-15)


def test_cdf_y_domain():
    with pytest.raises(DomainError):
        cdf_y_closed(5, 1.0)
    with pytest.raises(DomainError):
        cdf_y_closed(3, 0.0)


def test_survival_examples():
    assert survival_z(2, 0.0) == 0.5
    assert survival_z(4, math.log(2)) == pytest.approx(2 * math.log(2) - 1, abs=1e-15)
    assert survival_z(6, 0.0) == pytest.approx(0.5, abs=1e-15)
    assert survival_z(4, math.log(0.5)) == pytest.approx((0.5 * math.log(0.5) + 0.5) / 0.25, abs=1e-15)


@settings(max_examples=50, deadline=None)
@given(st.floats(-30, 30))
def test_survival_orders_are_probabilities_and_symmetric(z):
    for order in (2, 4, 6):
        s = survival_z(order, z)
        assert 0.0 <= s <= 1.0
        # Z_n for even n is symmetric about 0
        assert s + survival_z(order, -z) == pytest.approx(1.0, abs=1e-14)


def test_survival_large_argument_no_overflow():
    for order in (2, 4, 6):
        assert survival_z(order, 700.0) >= 0.0
        assert survival_z(order, -700.0) <= 1.0


def test_survival_array_input():
    z = np.array([-1.0, 0.0, 1e-9, 1.0])
    out = survival_z(4, z)
    assert out.shape == (4,)
    assert out[1] == pytest.approx(0.5)


# -- characteristic function and Gil-Pelaez ------------------------------------

def test_char_fn_examples():
    for n in (1, 2, 5):
        assert char_fn_z(n, 0.0) == pytest.approx(1 + 0j, abs=1e-15)
    assert char_fn_z(2, 1.0) == pytest.approx(math.pi / math.sinh(math.pi), abs=1e-14)
    assert abs(char_fn_z(1, 1.0) - complex(0.498016, -0.154950)) < 1e-6


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 15), st.floats(1e-3, 50.0))
def test_char_fn_bound(n, omega):
    assert abs(char_fn_z(n, omega)) < 1.0


def test_char_fn_domain():
    with pytest.raises(DomainError):
        char_fn_z(3, 51.0)


def test_gil_pelaez_examples():
    r = cdf_z_gil_pelaez(2, 0.0)
    assert r.value == 0.5 and r.abs_error == 0.0
    assert cdf_z_gil_pelaez(1, 0.0).value == pytest.approx(1 - math.exp(-1), abs=1e-13)
    assert cdf_z_gil_pelaez(2, 1.0).value == pytest.approx(logistic(1.0), abs=1e-13)
    assert abs(cdf_z_gil_pelaez(2, 1.0).value - 0.731059) < 5e-7


def test_gil_pelaez_vs_closed_oracles():
    for z in GRID:
        assert abs(cdf_z_gil_pelaez(1, z).value - (-math.expm1(-math.exp(z)))) <= 1e-8
        assert abs(cdf_z_gil_pelaez(2, z).value - logistic(z)) <= 1e-8
        assert abs(1 - cdf_z_gil_pelaez(4, z).value - survival_z(4, z)) <= 1e-8
        assert abs(1 - cdf_z_gil_pelaez(6, z).value - survival_z(6, z)) <= 1e-8


@pytest.mark.parametrize("n", [3, 4])
def test_gil_pelaez_vs_closed_cdf_of_y(n):
    for z in (-3.0, -0.7, 0.4, 2.5):
        assert cdf_z_gil_pelaez(n, z).value == pytest.approx(cdf_y_closed(n, math.exp(z)), abs=1e-12)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_even_symmetry(n):
    for z in GRID[GRID > 0]:
        a, b = cdf_z_gil_pelaez(n, z), cdf_z_gil_pelaez(n, -z)
        assert abs(a.value + b.value - 1.0) <= max(2 * (a.abs_error + b.abs_error), 1e-15)


def test_gil_pelaez_domain():
    with pytest.raises(DomainError):
        cdf_z_gil_pelaez(3, 41.0)
    with pytest.raises(DomainError):
        cdf_z_gil_pelaez(0, 0.0)


def test_literal_double_integral_oracle():
    # Pi_3 = 1/2 - int_0^inf int_0^inf e^-t sin(w ln t)/(pi w) * K(w) dt dw, K = pi w / sinh(pi w)
    def inner(w):
        head = integrate.quad(lambda s: math.exp(-math.exp(-s) - s) * math.sin(-w * s), 0, 60, limit=400)[0]
        tail = integrate.quad(lambda t: math.exp(-t) * math.sin(w * math.log(t)), 1, 60, limit=400)[0]
        kern = math.pi * w / math.sinh(math.pi * w)
        return (head + tail) * kern / (math.pi * w)

    outer = integrate.quad(inner, 1e-9, 12.0, limit=200)[0]
    assert abs(0.5 - outer - DELTA) <= 1e-4


# -- Pi_n --------------------------------------------------------------------

def test_pi_examples():
    r5 = pi_eval(5, "gil_pelaez")
    assert abs(r5.value - 0.577215664901) < 1e-11 and r5.error_bound <= 1e-11
    r9 = pi_eval(9, "gil_pelaez")
    assert abs(r9.value - 0.558672790194) < 1e-11 and r9.error_bound <= 1e-11
    r7 = pi_eval(7, "survival_integral")
    assert abs(r7.value - 0.566094355412) < 1e-9 and r7.error_bound <= 1e-9


def test_pi7_closed_forms():
    a = cascade.pi7_closed("zeta_sigma")
    b = cascade.pi7_closed("delta_m")
    assert abs(a - 0.566094355412648) < 1e-12
    assert abs(a - b) <= 1e-11
    assert abs(a - pi_eval(7, "gil_pelaez").value) <= 2e-11
    with pytest.raises(DomainError):
        cascade.pi7_closed("meijer")


@pytest.mark.parametrize("n", [3, 5, 7])
def test_method_agreement(n):
    vals = [pi_eval(n, m).value for m in ("closed", "gil_pelaez", "survival_integral")]
    assert max(vals) - min(vals) <= 2e-9


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_exact_halves(n):
    r = pi_eval(n, "gil_pelaez")
    assert r.value == 0.5 and r.error_bound == 0.0
    assert pi_eval(n, "closed").value == 0.5


def test_pi_monotone_over_odd_n():
    vals = [pi_eval(n).value for n in range(1, 16, 2)]
    assert all(v > 0.5 for v in vals)
    assert all(a > b for a, b in zip(vals, vals[1:]))
    for n, v in zip(range(1, 16, 2), vals):
        assert abs(v - float(cascade.TABLE2[n])) <= 5e-12


def test_pi_eval_domain():
    with pytest.raises(DomainError):
        pi_eval(9, "closed")
    with pytest.raises(DomainError):
        pi_eval(9, "survival_integral")
    with pytest.raises(DomainError):
        pi_eval(3, "monte_carlo")
    with pytest.raises(DomainError):
        pi_eval(0)
    with pytest.raises(DomainError):
        pi_eval(3, "bogus")


# -- sampling ----------------------------------------------------------------

def test_n1_sample_is_the_draw():
    assert sample_y(1, RngState(99)) == exp_sample(RngState(99))


def test_sample_y_structure():
    # Y_3 = X_1 X_3 / X_2, each sample consuming three consecutive draws
    r = RngState(3)
    y = sample_y(3, r, 5)
    assert y.shape == (5,) and r.counter == 15
    x = RngState(3).exponential(15).reshape(5, 3)
    np.testing.assert_allclose(y, x[:, 0] * x[:, 2] / x[:, 1], rtol=1e-13)


def test_count_independent_of_chunking():
    a = count_below_one(5, 10_000, seed=1, chunk=10_000)
    b = count_below_one(5, 10_000, seed=1, chunk=777)
    assert a == b


def test_mc_n2_seed7():
    r = cascade.pi_monte_carlo(2, 10**6, seed=7)
    assert abs(r.value - 0.5) <= 0.002
    assert r.seed == 7 and r.method is PiMethod.monte_carlo


def test_mc_n3_seed7():
    r = cascade.pi_monte_carlo(3, 10**7, seed=7)
    assert abs(r.value - DELTA) <= 6.2e-4


@pytest.mark.parametrize("n", [2, 4])
def test_y_and_inverse_same_distribution(n):
    samples = 10**6
    a = cascade.pi_monte_carlo(n, samples, seed=11, stream=0)
    b = cascade.pi_monte_carlo(n, samples, seed=11, stream=1, inverse=True)
    joint = 4 * math.sqrt(2 * 0.25 / samples)
    assert abs(a.value - b.value) <= joint


# -- diagnostics -------------------------------------------------------------

def test_recursion_examples():
    (p,) = recursion_check(4, [2.0])
    assert abs(p.rhs - 0.386294) < 1e-6
    (p,) = recursion_check(6, [1.0])
    assert abs(p.rhs - 0.5) < 1e-6
    (p,) = recursion_check(4, [0.5])
    assert abs(p.rhs - 0.613706) < 1e-6


@pytest.mark.parametrize("order", [4, 6])
def test_recursion_points(order):
    for p in recursion_check(order, [0.3, 0.5, 2.0, 3.0, 5.0, 9.0]):
        assert p.error is None
        assert p.abs_diff <= 1e-6


def test_recursion_domain():
    with pytest.raises(DomainError):
        recursion_check(4, [1.02])
    with pytest.raises(DomainError):
        recursion_check(6, [0.05])
    with pytest.raises(DomainError):
        recursion_check(5, [2.0])


def test_clt_n2_is_logistic_gap():
    rep = clt_report(2, GRID, tol=1e-10)
    scale = math.pi / math.sqrt(3)
    gap = max(abs(logistic(z) - stats.norm.cdf(z / scale)) for z in GRID)
    assert rep.ks_distance == pytest.approx(gap, abs=1e-10)
    assert rep.mean_offset == 0.0


def test_clt_offset_odd():
    rep = clt_report(5, [0.0])
    assert rep.mean_offset == pytest.approx(-EULER_GAMMA / (math.pi * math.sqrt(5 / 6)), abs=1e-15)
    assert abs(rep.mean_offset - (-0.20127)) < 1e-5


def test_clt_convergence():
    ks10 = clt_report(10, GRID).ks_distance
    ks40 = clt_report(40, GRID).ks_distance
    assert ks40 < ks10 < 0.05


def test_clt_domain():
    with pytest.raises(DomainError):
        clt_report(1, GRID)
