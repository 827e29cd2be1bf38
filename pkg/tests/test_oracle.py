import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubeslice.oracle import (dk_oracle, irwin_hall_density, irwin_hall_exact,
                              mc_complex_section, perimeter_oracle,
                              piecewise_density, section_volume_oracle)
from cubeslice.sections import a_max, a_min, canonicalize

weights = st.lists(st.floats(min_value=0.05, max_value=1.0), min_size=1, max_size=7)


def test_single_uniform_with_midpoint_convention():
    assert irwin_hall_exact([1.0], 0.0) == 1
    assert irwin_hall_exact([1.0], 0.5) == Fraction(1, 2)
    assert irwin_hall_exact([1.0], 0.75) == 0


def test_triangle_density():
    # U_1 + U_2 has density 1 - |x| on [-1, 1]
    for x in (0.0, 0.25, -0.5, 0.875, 1.0):
        assert irwin_hall_exact([1.0, 1.0], x) == 1 - Fraction(abs(x))


def test_classical_irwin_hall_n3():
    # U_1 + U_2 + U_3 at the centre: 3/4
    assert irwin_hall_exact([1.0, 1.0, 1.0], 0.0) == Fraction(3, 4)


def test_zero_weights_dropped():
    assert irwin_hall_density([0.5, 0.0, 0.25], 0.1) == irwin_hall_density([0.5, 0.25], 0.1)


def test_known_section_values():
    assert section_volume_oracle(a_max(5)) == pytest.approx(math.sqrt(2.0), abs=1e-15)
    assert section_volume_oracle(a_min(5)) == 1.0
    assert perimeter_oracle(a_min(4)) == 6.0
    assert perimeter_oracle(a_max(3)) == pytest.approx(2 * (math.sqrt(2.0) + 1), abs=1e-14)


def test_frozen_derived_values():
    # computed once with exact rationals for the integer direction (3, 2, 1)/sqrt 14
    d = canonicalize([3, 2, 1])
    assert section_volume_oracle(d) == pytest.approx(math.sqrt(14.0) / 3.0, abs=1e-15)
    assert dk_oracle(d, 1) == 0.0


def test_dk_requires_another_weight():
    with pytest.raises(ValueError):
        dk_oracle(a_min(3), 1)


@given(weights, st.floats(min_value=-3.0, max_value=3.0))
def test_density_is_even(a, x):
    assert irwin_hall_exact(a, x) == irwin_hall_exact(a, -x)


@given(weights, st.floats(min_value=-3.0, max_value=3.0))
def test_density_nonnegative_and_bounded(a, x):
    v = irwin_hall_exact(a, x)
    assert v >= 0
    assert v <= Fraction(1) / Fraction(max(a))


@given(weights)
def test_piecewise_form_integrates_to_one(a):
    pw = piecewise_density(a)
    assert pw.integral() == 1


@given(weights, st.floats(min_value=-3.0, max_value=3.0))
def test_piecewise_form_agrees_with_alternating_sum(a, x):
    pw = piecewise_density(a)
    lo, hi = pw.support
    if len(pw.weights) == 1 and abs(x) == hi:
        return
    assert pw.exact(x) == irwin_hall_exact(a, x) or abs(float(pw.exact(x) - irwin_hall_exact(a, x))) < 1e-12


def test_monte_carlo_is_reproducible():
    d = canonicalize([0.8, 0.5, 0.3], "complex")
    r1 = mc_complex_section(d, samples=200_000, seed=5)
    r2 = mc_complex_section(d, samples=200_000, seed=5)
    r3 = mc_complex_section(d, samples=200_000, seed=6)
    assert r1 == r2
    assert r1.value != r3.value


def test_monte_carlo_single_disc():
    # a single coordinate: the density of Z at the origin is 1
    r = mc_complex_section(a_min(2, "complex"), samples=1_000_000, seed=0)
    assert abs(r.value - 1.0) <= 4 * r.std_error


def test_monte_carlo_validation():
    d = a_min(2, "complex")
    with pytest.raises(ValueError):
        mc_complex_section(d, samples=10)
    with pytest.raises(ValueError):
        mc_complex_section(d, samples=10**6, eps=0.5)
    with pytest.raises(ValueError):
        mc_complex_section(a_min(2, "real"), samples=10**6)
