"""Motion primitives: great-circle arcs and tight turns on the unit sphere.

A segment is described by its kind, the vehicle turning radius ``r``
(dimensionless, 0 < r < 1 on the unit sphere) and the swept arc angle
``phi``.  Arc length is ``phi`` for a great circle and ``r*phi`` for a
turn.
"""

import enum
import math

import numpy as np

from ._backend import kernels

TWO_PI = 2.0 * math.pi

#: Radii this close to 0 or 1 are accepted but ill-conditioned (terms like
#: r^2/sqrt(1-r^2) blow up near the boundary).
ILL_CONDITIONED_MARGIN = 1e-6


class SegmentKind(enum.Enum):
    GREAT_CIRCLE = "G"
    LEFT_TURN = "L"
    RIGHT_TURN = "R"


def check_radius(r: float) -> float:
    """Validate 0 < r < 1 (strict); returns r."""
    r = float(r)
    if not (0.0 < r < 1.0):
        raise ValueError(f"turning radius must lie strictly in (0, 1), got {r}")
    return r


def normalize_angle(phi: float) -> float:
    """Reduce an angle to [0, 2*pi) with a true mathematical modulus."""
    phi = math.fmod(phi, TWO_PI)
    if phi < 0.0:
        phi += TWO_PI
    if phi >= TWO_PI:  # fmod rounding can land exactly on 2*pi
        phi = 0.0
    return phi


def u_max(r: float) -> float:
    """Geodesic-curvature magnitude of a tight turn of radius r.

    Equating the exponential of the frame ODE with the closed-form turn
    matrix forces sqrt(1-r^2)/r: the rotation axis normalizes to the turn
    axis and the angle swept per unit arc length is 1/r.
    """
    check_radius(r)
    return math.sqrt(1.0 - r * r) / r


def rot_g(phi: float) -> np.ndarray:
    """Great-circle segment rotation (about the z-axis of the frame)."""
    return kernels.rot_g(phi)


def rot_l(r: float, phi: float) -> np.ndarray:
    """Left tight-turn segment rotation."""
    check_radius(r)
    return kernels.rot_l(r, phi)


def rot_r(r: float, phi: float) -> np.ndarray:
    """Right tight-turn segment rotation."""
    check_radius(r)
    return kernels.rot_r(r, phi)


def axial_left(r: float) -> np.ndarray:
    """Unit axis fixed by every left turn: (sqrt(1-r^2), 0, r)."""
    check_radius(r)
    return np.array([math.sqrt(1.0 - r * r), 0.0, r])


def axial_right(r: float) -> np.ndarray:
    """Unit axis fixed by every right turn: (-sqrt(1-r^2), 0, r)."""
    check_radius(r)
    return np.array([-math.sqrt(1.0 - r * r), 0.0, r])


def segment_rotation(kind: SegmentKind, r: float, phi: float) -> np.ndarray:
    if kind is SegmentKind.GREAT_CIRCLE:
        return rot_g(phi)
    if kind is SegmentKind.LEFT_TURN:
        return rot_l(r, phi)
    return rot_r(r, phi)


def segment_length(kind: SegmentKind, r: float, phi: float) -> float:
    """Arc length: phi for a great circle, r*phi for a turn."""
    check_radius(r)
    if phi < 0.0:
        raise ValueError("arc angle must be nonnegative")
    if kind is SegmentKind.GREAT_CIRCLE:
        return phi
    return r * phi


def sample_segment(
    start: np.ndarray,
    kind: SegmentKind,
    r: float,
    phi: float,
    n: int,
) -> list[np.ndarray]:
    """n configurations along the segment, endpoints included."""
    if n < 2:
        raise ValueError("need at least 2 sample points per segment")
    check_radius(r)
    return [
        start @ segment_rotation(kind, r, phi * k / (n - 1)) for k in range(n)
    ]
