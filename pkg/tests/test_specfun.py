import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubeslice.specfun import (bessel_j0, bessel_j1, cosine_integral, erf,
                               hankel_coefficients, j1c, sinc, sine_integral)

mpmath = pytest.importorskip("mpmath")

# every regime boundary of the three Bessel / Si / erf evaluators is crossed
GRID = np.concatenate([np.linspace(0.0, 60.0, 1201), [3.999, 4.0, 4.001, 24.999, 25.0, 25.001, 80.0, 150.0, 400.0]])


def _mp(fn, xs):
    return np.array([float(fn(mpmath.mpf(float(x)))) for x in xs])


def test_j0_matches_mpmath():
    ref = _mp(lambda x: mpmath.besselj(0, x), GRID)
    assert np.max(np.abs(bessel_j0(GRID) - ref)) < 1e-13


def test_j1_matches_mpmath():
    ref = _mp(lambda x: mpmath.besselj(1, x), GRID)
    assert np.max(np.abs(bessel_j1(GRID) - ref)) < 1e-13


def test_bessel_far_range():
    xs = np.linspace(400.0, 1e4, 301)
    assert np.max(np.abs(bessel_j0(xs) - _mp(lambda x: mpmath.besselj(0, x), xs))) < 1e-12
    assert np.max(np.abs(bessel_j1(xs) - _mp(lambda x: mpmath.besselj(1, x), xs))) < 1e-12


def test_sine_and_cosine_integrals_match_mpmath():
    xs = GRID[GRID > 0]
    assert np.max(np.abs(sine_integral(xs) - _mp(mpmath.si, xs))) < 1e-13
    assert np.max(np.abs(cosine_integral(xs) - _mp(mpmath.ci, xs))) < 1e-13


def test_erf_matches_mpmath():
    xs = np.linspace(-7.0, 7.0, 1401)
    assert np.max(np.abs(erf(xs) - _mp(mpmath.erf, xs))) < 2e-15


def test_scalar_in_scalar_out():
    assert isinstance(bessel_j0(1.0), float)
    assert isinstance(sinc(0.0), float)
    assert sinc(0.0) == 1.0
    assert j1c(0.0) == 1.0


def test_known_values():
    assert sine_integral(0.0) == 0.0
    assert bessel_j0(0.0) == 1.0
    assert bessel_j1(0.0) == 0.0
    assert erf(0.0) == 0.0
    assert math.isclose(sine_integral(1e6), math.pi / 2, abs_tol=2e-6)


def test_nan_propagates():
    out = bessel_j0(np.array([1.0, np.nan]))
    assert math.isnan(out[1]) and not math.isnan(out[0])


def test_hankel_coefficients_start_at_one():
    c = hankel_coefficients(0, 4)
    assert c[0] == 1.0


@given(st.floats(min_value=-300.0, max_value=300.0, allow_nan=False))
def test_parity(x):
    assert bessel_j0(-x) == bessel_j0(x)
    assert bessel_j1(-x) == -bessel_j1(x)
    assert sine_integral(-x) == -sine_integral(x)
    assert erf(-x) == -erf(x)


@given(st.floats(min_value=0.0, max_value=300.0))
def test_bounds(x):
    assert abs(bessel_j0(x)) <= 1.0 + 1e-15
    assert abs(bessel_j1(x)) <= 0.5820 + 1e-12
    assert abs(j1c(x)) <= 1.0 + 1e-15
    assert abs(sinc(x)) <= 1.0
    assert 0.0 <= erf(x) <= 1.0


@given(st.floats(min_value=0.1, max_value=200.0))
def test_j0_derivative_is_minus_j1(x):
    h = 1e-5
    deriv = (bessel_j0(x + h) - bessel_j0(x - h)) / (2 * h)
    assert deriv == pytest.approx(-bessel_j1(x), abs=1e-9)


@given(st.floats(min_value=0.5, max_value=200.0))
def test_si_derivative_is_sinc(x):
    h = 1e-5
    deriv = (sine_integral(x + h) - sine_integral(x - h)) / (2 * h)
    assert deriv == pytest.approx(sinc(x), abs=1e-9)


@given(st.floats(min_value=1e-3, max_value=200.0))
def test_j1c_is_two_j1_over_x(x):
    assert j1c(x) == pytest.approx(2.0 * bessel_j1(x) / x, rel=1e-12, abs=1e-15)
