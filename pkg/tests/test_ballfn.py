import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubeslice import ballfn
from cubeslice.ballfn import (P_LOW, SQRT_3_OVER_PI, appendix_bound_9_4,
                              appendix_bound_sqrt2_half, ball_f, ball_f_complex,
                              ball_sample, convexity_witness, crossing_point,
                              kos_asymptotic, np_compare, np_compare_grid, np_crossing)

mpmath = pytest.importorskip("mpmath")


def _ball_f_mpmath(p):
    # sqrt(p/2) (2/pi) int_0^inf |sinc|^p by arches, independent of the package quadrature
    mpmath.mp.dps = 20
    f = lambda x: abs(mpmath.sinc(x)) ** p
    total = mpmath.quad(f, [0, mpmath.pi / 2, mpmath.pi])
    total += mpmath.nsum(lambda k: mpmath.quad(f, [k * mpmath.pi, (k + 1) * mpmath.pi]), [1, 400])
    # arches beyond 400: |sin|^p averages to the mean over a period
    mean = mpmath.gamma((p + 1) / 2) / (mpmath.sqrt(mpmath.pi) * mpmath.gamma(p / 2 + 1))
    total += mean * mpmath.zeta(p, 401) * mpmath.pi ** (1 - p)
    val = float(mpmath.sqrt(p / 2) * 2 / mpmath.pi * total)
    mpmath.mp.dps = 15
    return val


def test_f_two_is_one():
    assert ball_f(2.0) == pytest.approx(1.0, abs=1e-12)
    assert ball_f_complex(2.0) == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("p", [2.25, 3.0, 5.5])
def test_f_matches_independent_quadrature(p):
    assert ball_f(p) == pytest.approx(_ball_f_mpmath(p), abs=1e-7)


def test_explicit_bounds():
    assert ball_f(2.25) <= 0.977
    assert ball_f(P_LOW) <= 1.0199
    b = appendix_bound_9_4()
    assert b.pieces["I0"] <= 0.91340 and b.pieces["I1"] <= 0.03414
    assert ball_f(2.25) <= b.total <= 0.977
    assert math.isclose(b.total, sum(b.pieces.values()), rel_tol=1e-12)
    b = appendix_bound_sqrt2_half()
    assert ball_f(P_LOW) <= b.total <= 1.0199
    assert float(b) == b.total


def test_sample_methods_agree_on_order():
    q = ball_sample(2.25, "quadrature").f
    ab = ball_sample(2.25, "appendix_bound").f
    assert q <= ab
    with pytest.raises(ValueError):
        ball_sample(3.0, "appendix_bound")


@settings(max_examples=20)
@given(st.floats(min_value=2.25, max_value=50.0))
def test_f_below_gaussian_limit(p):
    assert ball_f(p) <= SQRT_3_OVER_PI + 1e-9


@settings(max_examples=20)
@given(st.floats(min_value=1.05, max_value=1.99))
def test_f_exceeds_one_below_two(p):
    assert ball_f(p) > 1.0


def test_kos_expansion_accuracy():
    assert abs(ball_f(40.0) - kos_asymptotic(40.0)) <= 5e-5
    assert kos_asymptotic(1e6) == pytest.approx(SQRT_3_OVER_PI, abs=1e-6)


def test_complex_analogue_below_one():
    for p in (2.5, 4.0, 20.0):
        assert ball_f_complex(p) < 1.0


@settings(max_examples=10)
@given(st.floats(min_value=P_LOW, max_value=2.25))
def test_convexity_witness_positive(p):
    assert convexity_witness(p) >= 0.2


def test_convexity_witness_has_sign_of_second_derivative():
    for p in (3.0, 4.0, 5.0, 6.0):
        assert np.sign(convexity_witness(p)) == np.sign(ballfn.ball_f_second_derivative(p))


def test_crossing_points():
    for p, (xp, yp) in {P_LOW: (1.8205, 0.5323), 2.0: (1.7863, 0.5469), 2.25: (1.6965, 0.5848)}.items():
        x, y = crossing_point(p)
        assert x == pytest.approx(xp, abs=5e-4)
        assert y == pytest.approx(yp, abs=5e-4)


def test_distribution_functions():
    c = np_compare(0.5)
    # |sinc| > 1/2 only on the first arch, below x = 1.8955
    assert c.G == pytest.approx(1.895494267033981, abs=1e-12)
    assert c.H == pytest.approx(math.sqrt(6 * math.log(2)), abs=1e-14)
    with pytest.raises(ValueError):
        np_compare_grid([0.0])


def test_single_crossing():
    y0 = np_crossing()
    assert np_compare(0.9 * y0).difference < 0 < np_compare(1.1 * y0).difference
