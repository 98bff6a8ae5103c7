"""Pure NumPy implementation of the numerical kernels.

Fallback used when the compiled extension is unavailable.  The compiled
module (``_kernels``) provides the same functions with identical contracts;
``_backend`` picks whichever imports.
"""

import math

import numpy as np

BACKEND_NAME = "python"


def rot_g(phi: float) -> np.ndarray:
    """Rotation of a great-circle segment sweeping angle ``phi``."""
    c, s = math.cos(phi), math.sin(phi)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def rot_l(r: float, phi: float) -> np.ndarray:
    """Rotation of a left tight turn of radius ``r`` sweeping angle ``phi``."""
    c, s = math.cos(phi), math.sin(phi)
    w = math.sqrt(1.0 - r * r)
    return np.array(
        [
            [1.0 - (1.0 - c) * r * r, -r * s, (1.0 - c) * r * w],
            [r * s, c, -s * w],
            [(1.0 - c) * r * w, s * w, c + (1.0 - c) * r * r],
        ]
    )


def rot_r(r: float, phi: float) -> np.ndarray:
    """Rotation of a right tight turn of radius ``r`` sweeping angle ``phi``."""
    c, s = math.cos(phi), math.sin(phi)
    w = math.sqrt(1.0 - r * r)
    return np.array(
        [
            [1.0 - (1.0 - c) * r * r, -r * s, -(1.0 - c) * r * w],
            [r * s, c, s * w],
            [-(1.0 - c) * r * w, -s * w, c + (1.0 - c) * r * r],
        ]
    )


def nearest_rotation(m: np.ndarray) -> np.ndarray:
    """Orthogonal polar factor of ``m`` with det +1 (nearest rotation)."""
    u, _, vt = np.linalg.svd(m)
    d = np.sign(np.linalg.det(u @ vt))
    return u @ np.diag([1.0, 1.0, d]) @ vt


def integrate_rk4(u_g: float, arc_length: float, steps: int) -> np.ndarray:
    """Fixed-step RK4 for R' = R*Omega from identity over ``arc_length``.

    Re-projects onto the rotation group every 100 steps to control drift.
    """
    omega = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, -u_g], [0.0, u_g, 0.0]])
    h = arc_length / steps
    rot = np.eye(3)
    for i in range(steps):
        k1 = rot @ omega
        k2 = (rot + 0.5 * h * k1) @ omega
        k3 = (rot + 0.5 * h * k2) @ omega
        k4 = (rot + h * k3) @ omega
        rot = rot + (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)
        if (i + 1) % 100 == 0:
            rot = nearest_rotation(rot)
    return rot
