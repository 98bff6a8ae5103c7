"""Rotation-matrix arithmetic on SO(3).

Everything in this package is carried by 3x3 proper orthogonal matrices:
vehicle configurations (columns = position X, tangent T, tangent-normal N),
per-segment rotations, and the net target rotation between two
configurations.  All functions here are pure and operate on plain NumPy
arrays.
"""

import math

import numpy as np

#: Frobenius tolerance for the orthonormality / determinant invariants.
ORTHONORMALITY_TOL = 1e-10

_REFLECT_Z = np.diag([1.0, 1.0, -1.0])
_FLIP_TN = np.diag([1.0, -1.0, -1.0])


def identity() -> np.ndarray:
    return np.eye(3)


def is_rotation(m: np.ndarray, tol: float = ORTHONORMALITY_TOL) -> bool:
    m = np.asarray(m, dtype=float)
    if m.shape != (3, 3):
        return False
    if np.linalg.norm(m.T @ m - np.eye(3)) > tol:
        return False
    return abs(np.linalg.det(m) - 1.0) <= tol


def validate_rotation(m: np.ndarray, tol: float = ORTHONORMALITY_TOL) -> np.ndarray:
    """Return ``m`` as a float array, raising ValueError if it is not a rotation."""
    m = np.asarray(m, dtype=float)
    if m.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {m.shape}")
    if np.linalg.norm(m.T @ m - np.eye(3)) > tol:
        raise ValueError("matrix is not orthonormal within tolerance")
    if abs(np.linalg.det(m) - 1.0) > tol:
        raise ValueError("matrix determinant is not +1 within tolerance")
    return m


def compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product a·b (configuration update by a subsequent segment)."""
    return a @ b


def relative_target(initial: np.ndarray, final: np.ndarray) -> np.ndarray:
    """Net rotation carrying ``initial`` to ``final``: initialᵀ·final.

    The transpose is the inverse for rotations, so no general matrix
    inversion is needed.
    """
    return initial.T @ final


def reflect_xy(t: np.ndarray) -> np.ndarray:
    """Reflect a target about the XY plane.

    Negates the (1,3), (2,3), (3,1) and (3,2) entries.  Conjugation by
    diag(1,1,-1), so it is an involution and a homomorphism; it exchanges
    left- and right-turn segment matrices, which is what the R-leading
    path constructions rely on.
    """
    return _REFLECT_Z @ t @ _REFLECT_Z


def rlr_swap_transform(t: np.ndarray) -> np.ndarray:
    """Target fed to the LRL solver when solving an RLR problem.

    Swaps the roles of initial and final configuration and flips the
    tangent and tangent-normal columns: with D = diag(1,-1,-1) the result
    is D·tᵀ·D.  Involutive.
    """
    return _FLIP_TN @ t.T @ _FLIP_TN


def axis_angle_rotation(axis: np.ndarray, angle: float) -> np.ndarray:
    """Rotation by ``angle`` about the unit vector ``axis`` (Euler-Rodriguez)."""
    axis = np.asarray(axis, dtype=float)
    n = np.linalg.norm(axis)
    if abs(n - 1.0) > 1e-10:
        raise ValueError(f"axis must be a unit vector, got norm {n!r}")
    x, y, z = axis
    k = np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])
    return np.eye(3) + math.sin(angle) * k + (1.0 - math.cos(angle)) * (k @ k)


def rotation_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Frobenius norm of a - b; zero iff the matrices are equal."""
    return float(np.linalg.norm(a - b))
