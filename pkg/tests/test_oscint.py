import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubeslice.oracle import irwin_hall_density
from cubeslice.oscint import (DivergentIntegralError, QuadratureSpec,
                              integrate_abs_power, integrate_j1c_product_J0,
                              integrate_semi_infinite, integrate_sinc_product_cos,
                              power_exp_tail, tanh_sinh_rule)

weights = st.lists(st.floats(min_value=0.1, max_value=1.0), min_size=1, max_size=6)


def test_single_sinc_integrates_to_one():
    r = integrate_sinc_product_cos([1.0])
    assert r.converged
    assert r.value == pytest.approx(1.0, abs=1e-13)


def test_scaling_of_single_factor():
    assert integrate_sinc_product_cos([0.25]).value == pytest.approx(4.0, abs=1e-12)


def test_cosine_beyond_support_gives_zero():
    # density of a_1 U_1 vanishes beyond a_1 / 2
    assert integrate_sinc_product_cos([1.0], cos_weight=2.0).value == pytest.approx(0.0, abs=1e-13)


def test_skip_index_uses_skipped_weight_as_frequency():
    a = [0.6, 0.5, 0.4, 0.3]
    direct = integrate_sinc_product_cos([0.5, 0.4, 0.3], cos_weight=0.6).value
    assert integrate_sinc_product_cos(a, skip_index=1).value == pytest.approx(direct, abs=1e-13)


def test_zero_weights_are_dropped():
    assert integrate_sinc_product_cos([0.7, 0.0, 0.3]).value == pytest.approx(
        integrate_sinc_product_cos([0.7, 0.3]).value, abs=1e-14)


def test_sinc_product_raises_without_factors():
    with pytest.raises(DivergentIntegralError):
        integrate_sinc_product_cos([0.0, 0.0])
    with pytest.raises(DivergentIntegralError):
        integrate_sinc_product_cos([1.0], skip_index=1)


@given(weights, st.floats(min_value=0.0, max_value=2.0))
def test_sinc_product_equals_exact_density(a, t):
    # (2/pi) int prod sinc(a_k s) cos(t s) ds is the density of sum a_k U_k at t/2
    r = integrate_sinc_product_cos(a, cos_weight=t)
    assert r.converged
    assert r.value == pytest.approx(irwin_hall_density(a, 0.5 * t), abs=1e-9)


def test_j1c_product_single_factor():
    # (1/2) int j1c(a s) s ds = 1/a^2: the density of a Z at the origin
    for a in (1.0, 0.5):
        assert integrate_j1c_product_J0([a]).value == pytest.approx(1.0 / a ** 2, rel=1e-10)


def test_j1c_product_two_equal_factors():
    assert integrate_j1c_product_J0([1.0, 1.0]).value == pytest.approx(1.0, abs=1e-12)


def test_j1c_product_raises_without_factors():
    with pytest.raises(DivergentIntegralError):
        integrate_j1c_product_J0([0.0])


def test_abs_power_exponent_two_matches_density():
    # |sinc|^2 products are sinc products with repeated weights
    r = integrate_abs_power([0.6, 0.8], 2.0)
    assert r.value == pytest.approx(irwin_hall_density([0.6, 0.6, 0.8, 0.8], 0.0), abs=1e-9)
    assert integrate_abs_power([1.0], 2.0).value == pytest.approx(1.0, abs=1e-13)


def test_abs_power_divergence():
    with pytest.raises(DivergentIntegralError):
        integrate_abs_power([1.0], 1.0)


def test_abs_power_equal_weights_rescale():
    r1 = integrate_abs_power([0.5, 0.5], 1.5).value
    r2 = integrate_abs_power([1.0], 3.0).value
    assert r1 == pytest.approx(2.0 * r2, rel=1e-12)


def test_semi_infinite_with_and_without_acceleration():
    spec = QuadratureSpec(acceleration="euler_alternating")
    r = integrate_semi_infinite(lambda x: np.sinc(x / np.pi), math.pi, spec)
    assert r.value == pytest.approx(math.pi / 2, abs=1e-12)
    r = integrate_semi_infinite(lambda x: np.exp(-x), 1.0)
    assert r.converged and r.value == pytest.approx(1.0, abs=1e-14)


def test_power_exp_tail_closed_form():
    # int_X^inf x^-2 dx = 1/X
    assert complex(power_exp_tail(2.0, 0.0, 4.0)).real == pytest.approx(0.25, rel=1e-14)
    with pytest.raises(DivergentIntegralError):
        power_exp_tail(1.0, 0.0, 1.0)


def test_tanh_sinh_rule_integrates_polynomials():
    nodes, dist, w = tanh_sinh_rule()
    assert float(np.sum(w)) == pytest.approx(2.0, abs=1e-14)
    assert float(np.sum(w * nodes ** 2)) == pytest.approx(2.0 / 3.0, abs=1e-14)
    assert np.allclose(dist, 1.0 - np.abs(nodes), atol=1e-15)


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureSpec(acceleration="richardson")
