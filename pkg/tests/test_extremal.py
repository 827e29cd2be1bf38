import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubeslice.extremal import (A1_HIGH, A1_LOW, A1_MID, GAP_LIMIT, PAIR_BOUND,
                                SearchConfig, a2_threshold, check_lower_bound,
                                concavity_bound, crossing_a1, exception_window,
                                gamma, gamma1, gamma2, gap_excess,
                                interpolation_sweep, lemma10_check, phi1, phi2,
                                psi1, psi2, search_max_perimeter)
from cubeslice.sections import a_max, a_min, canonicalize, perimeter, perimeter_at_a_max

SQRT2 = math.sqrt(2.0)


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(n=1)
    with pytest.raises(ValueError):
        SearchConfig(n=4, field="quaternion")
    with pytest.raises(ValueError):
        SearchConfig(n=4, snap=0.7)


def test_real_search_finds_a_max():
    rep = search_max_perimeter(SearchConfig(n=4, grid_resolution=10, multistarts=3, max_local_evals=80, seed=1))
    assert rep.margin >= -1e-6
    assert rep.distance_to_a_max <= 1e-3
    assert rep.target_value == pytest.approx(perimeter_at_a_max(4))
    assert rep.best_value == pytest.approx(perimeter(rep.best_direction), abs=1e-12)


def test_search_is_deterministic():
    cfg = SearchConfig(n=3, grid_resolution=10, multistarts=2, max_local_evals=40, seed=3)
    assert search_max_perimeter(cfg) == search_max_perimeter(cfg)


def test_complex_search_small():
    rep = search_max_perimeter(SearchConfig(n=3, field="complex", grid_resolution=10, multistarts=1,
                                            max_local_evals=30))
    assert rep.margin >= -1e-6
    assert rep.best_value == pytest.approx(2 * math.pi * 3, abs=1e-6)


@pytest.mark.parametrize("field", ["real", "complex"])
def test_lower_bound_at_a_min(field):
    rep = check_lower_bound(a_min(5, field))
    assert rep.passed
    assert rep.info["a_min_value"] == pytest.approx(2 * math.pi ** (field == "complex") * 4)


def test_concavity_and_gap_bounds():
    d = canonicalize([0.7, 0.5, 0.4, 0.3])
    assert 0.5 * perimeter(d) <= concavity_bound(d) + 1e-10
    d = canonicalize([0.71, 0.6, 0.3, 0.2])
    assert gap_excess(d) <= GAP_LIMIT


def test_pair_integral_box_corner():
    assert lemma10_check(0.7095, 1.0 / math.sqrt(10.0)) <= PAIR_BOUND
    assert lemma10_check(0.7149, 0.5803) <= PAIR_BOUND


# -- interpolation bounds (frozen derived values) ----------------------------------------

def test_endpoint_identity():
    for n in range(4, 9):
        assert gamma(n, A1_MID, A1_MID) == pytest.approx((n - 2) * SQRT2 + 1, abs=1e-9)


def test_chord_bounds_at_nodes():
    # a^2 f(a^-2) at p = 2 is 1/2; phi2 meets the f(9/4) <= sqrt(3/pi) node at a = 2/3
    assert phi2(A1_MID) == pytest.approx(0.5, abs=1e-14)
    assert phi2(2.0 / 3.0) == pytest.approx(4.0 / 9.0 * math.sqrt(3 / math.pi), abs=1e-14)
    assert phi1(A1_MID) == pytest.approx(0.5, abs=1e-14)


def test_crossing_and_windows():
    assert crossing_a1() == pytest.approx(0.7125400, abs=1e-6)
    assert exception_window(5) == pytest.approx((0.709529, 0.714813), abs=1e-6)
    assert exception_window(6) == pytest.approx((0.711510, 0.713252), abs=1e-6)
    lo, hi = exception_window(4, include_low_branch=True)
    assert lo == pytest.approx(0.7069, abs=5e-4) and hi == pytest.approx(0.7177, abs=5e-4)


def test_a2_thresholds():
    assert a2_threshold(5) == pytest.approx(0.580359, abs=1e-5)
    assert a2_threshold(6) == pytest.approx(0.495250, abs=1e-5)


@pytest.mark.parametrize("n", range(4, 9))
def test_interpolation_sweep_passes(n):
    rep = interpolation_sweep(n)
    assert rep.passed, rep.failures


@settings(max_examples=50)
@given(st.integers(min_value=4, max_value=12), st.floats(min_value=A1_MID, max_value=A1_HIGH))
def test_gamma2_is_decreasing(n, a1):
    h = 1e-6
    if a1 + h <= A1_HIGH:
        assert gamma2(n, a1 + h) < gamma2(n, a1)


@settings(max_examples=50)
@given(st.floats(min_value=A1_LOW, max_value=A1_MID))
def test_psi_functions_finite(a1):
    assert np.isfinite(psi1(a1)) and np.isfinite(psi2(a1))
    assert np.isfinite(gamma1(5, a1))
