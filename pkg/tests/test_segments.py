import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spheredubins import segments, so3
from spheredubins.oracle import SplitMix64
from spheredubins.segments import (
    SegmentKind,
    axial_left,
    axial_right,
    check_radius,
    normalize_angle,
    rot_g,
    rot_l,
    rot_r,
    sample_segment,
    segment_length,
    segment_rotation,
    u_max,
)

TWO_PI = 2.0 * math.pi


@given(st.floats(-1e6, 1e6, allow_nan=False))
def test_normalize_angle_range(phi):
    out = normalize_angle(phi)
    assert 0.0 <= out < TWO_PI


@given(st.floats(-100.0, 100.0))
def test_normalize_angle_preserves_value_mod_two_pi(phi):
    out = normalize_angle(phi)
    assert math.isclose(
        math.cos(out), math.cos(phi), abs_tol=1e-9
    ) and math.isclose(math.sin(out), math.sin(phi), abs_tol=1e-9)


@pytest.mark.parametrize("bad", [0.0, 1.0, -0.5, 1.5])
def test_check_radius_rejects_boundary_and_outside(bad):
    with pytest.raises(ValueError):
        check_radius(bad)


def test_rot_g_is_plane_rotation():
    phi = 0.7
    m = rot_g(phi)
    expected = np.array(
        [
            [math.cos(phi), -math.sin(phi), 0.0],
            [math.sin(phi), math.cos(phi), 0.0],
            [0.0, 0.0, 1.0],
        ]
    )
    assert np.linalg.norm(m - expected) < 1e-15


def test_segment_matrices_are_rotations():
    rng = SplitMix64(3)
    for _ in range(50):
        r = rng.uniform(0.05, 0.95)
        phi = rng.uniform(0.0, TWO_PI)
        for m in (rot_g(phi), rot_l(r, phi), rot_r(r, phi)):
            assert so3.is_rotation(m, tol=1e-12)


def test_turns_reduce_to_identity_at_zero_angle():
    assert np.linalg.norm(rot_l(0.3, 0.0) - np.eye(3)) < 1e-15
    assert np.linalg.norm(rot_r(0.3, 0.0) - np.eye(3)) < 1e-15
    assert np.linalg.norm(rot_g(0.0) - np.eye(3)) < 1e-15


def test_turn_angles_compose_additively():
    rng = SplitMix64(9)
    for _ in range(20):
        r = rng.uniform(0.05, 0.95)
        a, b = rng.uniform(0, TWO_PI), rng.uniform(0, TWO_PI)
        assert np.linalg.norm(rot_l(r, a) @ rot_l(r, b) - rot_l(r, a + b)) < 1e-12
        assert np.linalg.norm(rot_r(r, a) @ rot_r(r, b) - rot_r(r, a + b)) < 1e-12


def test_axial_vectors_are_unit_and_fixed():
    rng = SplitMix64(17)
    for _ in range(100):
        r = rng.uniform(0.05, 0.95)
        phi = rng.uniform(0.0, TWO_PI)
        ul, ur = axial_left(r), axial_right(r)
        assert math.isclose(np.linalg.norm(ul), 1.0, abs_tol=1e-14)
        assert math.isclose(np.linalg.norm(ur), 1.0, abs_tol=1e-14)
        assert np.linalg.norm(rot_l(r, phi) @ ul - ul) < 1e-12
        assert np.linalg.norm(rot_r(r, phi) @ ur - ur) < 1e-12


def test_turns_match_axis_angle_form():
    # A tight turn is exactly the rotation about its axial vector by the
    # swept angle, which ties the matrix entries to the Rodrigues formula.
    rng = SplitMix64(23)
    for _ in range(20):
        r = rng.uniform(0.05, 0.95)
        phi = rng.uniform(0.0, TWO_PI)
        assert (
            np.linalg.norm(rot_l(r, phi) - so3.axis_angle_rotation(axial_left(r), phi))
            < 1e-12
        )
        assert (
            np.linalg.norm(rot_r(r, phi) - so3.axis_angle_rotation(axial_right(r), phi))
            < 1e-12
        )


def test_u_max_monotone_and_values():
    assert math.isclose(u_max(0.5), math.sqrt(3.0), rel_tol=1e-15)
    assert math.isclose(u_max(1.0 / math.sqrt(2.0)), 1.0, rel_tol=1e-12)
    assert u_max(0.1) > u_max(0.9)


def test_segment_length_per_kind():
    assert segment_length(SegmentKind.GREAT_CIRCLE, 0.4, 1.3) == 1.3
    assert math.isclose(segment_length(SegmentKind.LEFT_TURN, 0.4, 1.3), 0.52)
    with pytest.raises(ValueError):
        segment_length(SegmentKind.LEFT_TURN, 0.4, -0.1)


def test_sample_segment_endpoints_and_count():
    start = np.eye(3)
    pts = sample_segment(start, SegmentKind.LEFT_TURN, 0.6, 2.0, 7)
    assert len(pts) == 7
    assert np.array_equal(pts[0], start @ rot_l(0.6, 0.0))
    assert np.linalg.norm(pts[-1] - rot_l(0.6, 2.0)) < 1e-12
    with pytest.raises(ValueError):
        sample_segment(start, SegmentKind.LEFT_TURN, 0.6, 2.0, 1)


def test_segment_rotation_dispatch():
    assert np.array_equal(segment_rotation(SegmentKind.GREAT_CIRCLE, 0.5, 1.1), rot_g(1.1))
    assert np.array_equal(segment_rotation(SegmentKind.LEFT_TURN, 0.5, 1.1), rot_l(0.5, 1.1))
    assert np.array_equal(segment_rotation(SegmentKind.RIGHT_TURN, 0.5, 1.1), rot_r(0.5, 1.1))
