import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubeslice.bpcheck import (ball_radius, bp_complex_radius, bp_complex_value,
                               bp_root, bp_table, bp_value, first_counterexample,
                               log_sphere_measure, sphere_measure)

mpmath = pytest.importorskip("mpmath")


def test_sphere_measure_low_dimensions():
    assert sphere_measure(1, 1.0) == pytest.approx(2 * math.pi)
    assert sphere_measure(2, 1.0) == pytest.approx(4 * math.pi)
    assert sphere_measure(2, 2.0) == pytest.approx(16 * math.pi)


def test_radius_inverts_sphere_measure():
    for n in (3, 7, 14, 150):
        r = ball_radius(n)
        assert sphere_measure(n - 2, r) == pytest.approx(2 * ((n - 2) * math.sqrt(2) + 1), rel=1e-12)
        rc = bp_complex_radius(n)
        assert sphere_measure(2 * (n - 2), rc) == pytest.approx(2 * math.pi * (2 * (n - 2) + 1), rel=1e-12)


def test_bp_against_high_precision_closed_form():
    # BP(n) = [c Gamma((n-1)/2)]^((n-1)/(n-2)) / (n Gamma(n/2) pi^(1/(2(n-2)))), c = (n-2) sqrt2 + 1
    mpmath.mp.dps = 40
    for n in (3, 10, 13, 14, 60, 200):
        c = (n - 2) * mpmath.sqrt(2) + 1
        ref = (c * mpmath.gamma(mpmath.mpf(n - 1) / 2)) ** (mpmath.mpf(n - 1) / (n - 2)) / (
            n * mpmath.gamma(mpmath.mpf(n) / 2) * mpmath.pi ** (mpmath.mpf(1) / (2 * (n - 2))))
        assert bp_value(n) == pytest.approx(float(ref), rel=1e-12)
    mpmath.mp.dps = 15


def test_published_crossover():
    assert bp_value(13) > 1 > bp_value(14)
    assert bp_root() == pytest.approx(13.70, abs=0.01)
    assert first_counterexample("real") == 14


def test_complex_threshold():
    assert first_counterexample("complex") == 11
    assert 10 < bp_root("complex") < 11
    assert bp_complex_value(10) > 1 > bp_complex_value(11)


@given(st.floats(min_value=3.0, max_value=199.0))
def test_bp_strictly_decreasing(x):
    assert bp_value(x + 0.5) < bp_value(x)
    assert bp_complex_value(x + 0.5) < bp_complex_value(x)


def test_table_rows():
    rows = bp_table(3, 20, "complex")
    assert [r.n for r in rows] == list(range(3, 21))
    assert all(r.field == "complex" for r in rows)
    assert [r.counterexample for r in rows].index(True) == 11 - 3
    with pytest.raises(ValueError):
        bp_table(2, 5)
    with pytest.raises(ValueError):
        bp_table(3, 5, "quaternion")


def test_log_space_is_stable_at_large_n():
    assert np.isfinite(log_sphere_measure(400, 1.5))
    assert 0 < bp_value(200) < 1
