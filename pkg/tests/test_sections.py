import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubeslice.oracle import perimeter_oracle, section_volume_oracle
from cubeslice.sections import (Direction, a_max, a_min, canonicalize, cor5_bound,
                                dk, dk_all, holder_bound, offset_section, perimeter,
                                perimeter_at_a_max, perimeter_n3_closed,
                                perimeter_n4_closed, projection_bound,
                                random_direction, section_profile, section_volume,
                                volume_n3_closed)

SQRT2 = math.sqrt(2.0)


def raw_vectors(n_min=3, n_max=6, lo=0.05):
    # quadrature cost grows like 1/a_min, so small weights are exact zeros
    coord = st.one_of(st.just(0.0), st.floats(min_value=lo, max_value=1.0))
    return st.lists(coord, min_size=n_min, max_size=n_max).filter(lambda v: max(v) > 0.05)


# -- canonical directions --------------------------------------------------------

@given(st.lists(st.floats(min_value=-10, max_value=10), min_size=2, max_size=8).filter(
    lambda v: max(abs(x) for x in v) > 1e-3))
def test_canonicalize_invariants(raw):
    d = canonicalize(raw)
    c = np.array(d.coords)
    assert np.all(c >= 0)
    assert np.all(np.diff(c) <= 0)
    assert math.isclose(float(np.sum(c * c)), 1.0, abs_tol=1e-14)
    # idempotent
    assert canonicalize(d.coords) == d


def test_canonicalize_complex_moduli():
    d = canonicalize([3j, 4.0], "complex")
    assert d.coords == (0.8, 0.6)
    assert d.field == "complex" and d.l == 2


def test_canonicalize_rejects_bad_input():
    for bad in ([0, 0], [1.0], [1.0, float("nan")]):
        with pytest.raises(ValueError):
            canonicalize(bad)
    with pytest.raises(ValueError):
        Direction((1.0, 0.0), "quaternion")


def test_random_direction_reproducible():
    assert random_direction(5, "complex", 3) == random_direction(5, "complex", 3)


# -- closed values -----------------------------------------------------------------

@pytest.mark.parametrize("n", range(3, 9))
def test_a_max_values_real(n):
    d = a_max(n)
    assert section_volume(d) == pytest.approx(SQRT2, abs=1e-12)
    D = dk_all(d)
    assert D[:2] == pytest.approx([1 / SQRT2] * 2, abs=1e-12)
    assert D[2:] == pytest.approx([SQRT2] * (n - 2), abs=1e-12)
    assert perimeter(d) == pytest.approx(perimeter_at_a_max(n), abs=1e-10)


@pytest.mark.parametrize("n", range(3, 7))
def test_a_max_values_complex(n):
    d = a_max(n, "complex")
    assert section_volume(d) == pytest.approx(2.0, abs=1e-10)
    assert perimeter(d) == pytest.approx(2 * math.pi * (2 * (n - 2) + 1), abs=1e-8)


def test_a_min_values():
    assert section_volume(a_min(4)) == pytest.approx(1.0, abs=1e-14)
    assert perimeter(a_min(4)) == pytest.approx(6.0, abs=1e-12)
    assert perimeter(a_min(4, "complex")) == pytest.approx(2 * math.pi * 3, abs=1e-10)
    assert math.isnan(dk_all(a_min(3))[0])


def test_dk_of_zero_coordinate_is_section_volume():
    d = canonicalize([0.9, 0.4, 0.0])
    assert dk(d, 3) == section_volume(d)
    with pytest.raises(ValueError):
        dk(d, 4)


@pytest.mark.parametrize("field", ["real", "complex"])
def test_negligible_coordinates_act_as_zeros(field):
    tiny = canonicalize([0.8, 0.6, 3e-39, 1e-310], field)
    clean = canonicalize([0.8, 0.6, 0.0, 0.0], field)
    assert section_volume(tiny) == pytest.approx(section_volume(clean), abs=1e-14)
    assert perimeter(tiny) == pytest.approx(perimeter(clean), abs=1e-12)


def test_outside_support_is_exact_zero():
    d = canonicalize([0.9, 0.3, 0.2])
    assert dk(d, 1) == 0.0
    assert section_volume(d, 1.5) == 0.0
    # a single large coordinate: D_1 is undefined and drops out of P
    d = canonicalize([0.9, 1e-12, 1e-12])
    assert math.isnan(dk_all(d)[0])
    assert perimeter(d) == pytest.approx(4.0, abs=1e-12)


def test_perimeter_needs_three_coordinates():
    with pytest.raises(ValueError):
        perimeter(a_max(2))


# -- dual routes ------------------------------------------------------------------------

@given(raw_vectors(3, 7))
def test_volume_and_perimeter_match_exact_density(raw):
    d = canonicalize(raw)
    assert section_volume(d) == pytest.approx(section_volume_oracle(d), abs=1e-9)
    assert perimeter(d) == pytest.approx(perimeter_oracle(d), abs=1e-8)


@given(raw_vectors(3, 3))
def test_n3_closed_forms(raw):
    d = canonicalize(raw)
    assert volume_n3_closed(d) == pytest.approx(section_volume(d), abs=1e-10)
    assert perimeter_n3_closed(d) == pytest.approx(perimeter(d), abs=1e-9)


@given(raw_vectors(4, 4))
def test_n4_closed_form(raw):
    d = canonicalize(raw)
    assert perimeter_n4_closed(d) == pytest.approx(perimeter(d), abs=1e-9)


@given(raw_vectors(3, 6), st.floats(min_value=0.0, max_value=2.5))
def test_offset_section_matches_exact_density(raw, t):
    d = canonicalize(raw)
    assert section_volume(d, t) == pytest.approx(section_volume_oracle(d, t), abs=1e-9)


# -- structural properties ------------------------------------------------------------

@given(raw_vectors(3, 7))
def test_facet_identity_and_domination_real(raw):
    pr = section_profile(canonicalize(raw), with_holder=False)
    assert abs(pr.identity_residual) <= 1e-8
    assert np.nanmax(pr.D) <= pr.A + 1e-8
    assert 1.0 - 1e-9 <= pr.A <= SQRT2 + 1e-9


@settings(max_examples=8)
@given(st.lists(st.floats(min_value=0.15, max_value=1.0), min_size=3, max_size=4))
def test_facet_identity_and_domination_complex(raw):
    pr = section_profile(canonicalize(raw, "complex"))
    assert abs(pr.identity_residual) <= 1e-7
    assert np.nanmax(pr.D) <= pr.A + 1e-7
    assert 1.0 - 1e-8 <= pr.A <= 2.0 + 1e-8


@given(raw_vectors(3, 7))
def test_perimeter_between_extremes_real(raw):
    d = canonicalize(raw)
    P = perimeter(d)
    assert P <= perimeter_at_a_max(d.n) + 1e-8
    assert P >= 2 * (d.n - 2) - 1e-8


@given(raw_vectors(2, 6), st.floats(min_value=0.0, max_value=3.0))
def test_offset_sections_obey_bound(raw, t):
    s = offset_section(canonicalize(raw), t)
    assert s.value <= s.bound + 1e-9


def test_cor5_bound_values():
    assert cor5_bound(0.0, 1) == pytest.approx(SQRT2)
    assert cor5_bound(1.0, 2) == 1.0
    with pytest.raises(ValueError):
        cor5_bound(-1.0, 1)
    with pytest.raises(ValueError):
        cor5_bound(0.5, 3)


@settings(max_examples=15)
@given(raw_vectors(3, 6))
def test_applicable_bound_dominates_volume(raw):
    d = canonicalize(raw)
    A = section_volume(d)
    if d.coords[0] > 1 / SQRT2:
        assert A <= projection_bound(d) + 1e-10
        if d.coords[0] > 1 / SQRT2 + 1e-15:
            with pytest.raises(ValueError):
                holder_bound(d)
        else:
            # a_max rounds one ulp above 1/sqrt2; both bounds apply there
            assert A <= holder_bound(d) + 1e-10
    else:
        assert A <= holder_bound(d) + 1e-10
        with pytest.raises(ValueError):
            projection_bound(d)


def test_holder_bound_is_sharp_at_a_max():
    assert holder_bound(a_max(4)) == pytest.approx(SQRT2, abs=1e-12)
    with pytest.raises(ValueError):
        holder_bound(a_max(4, "complex"))
