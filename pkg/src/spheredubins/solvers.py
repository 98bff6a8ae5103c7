"""Closed-form arc-angle solvers for the twelve path families.

Seven families (LGL, RGR, LGR, LRL, LRpiL, LRLR, LRLRL) are solved
directly from scalar projections of the matrix equation
``product of segment rotations = target``.  The five R-leading families
reuse them through the XY-plane reflection (RGL, RLpiR, RLRL, RLRLR) or
the swap transform (RLR).

The scalar conditions are necessary, not sufficient, so every solver
deliberately over-emits: each returned triple is only a candidate and
must be checked against the full matrix equation by the planner.  An
empty list means no candidate.
"""

import math
from dataclasses import dataclass

import numpy as np

from .so3 import reflect_xy, rlr_swap_transform
from .segments import (
    TWO_PI,
    axial_left,
    axial_right,
    check_radius,
    normalize_angle,
    rot_l,
    rot_r,
)

FAMILIES = (
    "LGL",
    "RGR",
    "LGR",
    "RGL",
    "LRL",
    "RLR",
    "LRpiL",
    "RLpiR",
    "LRLR",
    "RLRL",
    "LRLRL",
    "RLRLR",
)

AngleTriple = tuple[float, float, float]


@dataclass(frozen=True)
class SolverTolerances:
    """Numerical knobs shared by all family solvers.

    clamp_eps: |cos| overshoot beyond 1 that is clamped instead of dropped.
    residual_tol: Frobenius acceptance threshold used by the planner.
    degenerate_eps: closeness threshold routing to special-case branches.
    """

    clamp_eps: float = 1e-10
    residual_tol: float = 1e-9
    degenerate_eps: float = 1e-9

    def __post_init__(self):
        if self.clamp_eps <= 0 or self.residual_tol <= 0 or self.degenerate_eps <= 0:
            raise ValueError("tolerances must be strictly positive")
        if self.clamp_eps >= 1e-6:
            raise ValueError("clamp_eps must be below 1e-6")


DEFAULT_TOLERANCES = SolverTolerances()

# Unit-circle slack for the 2x2 linear-system special cases (LRLR/LRLRL).
_UNIT_CIRCLE_TOL = 1e-4

# Window around the four/five-turn special points inside which the general
# branch has lost most of its digits (its trig-linear coefficients are
# proportional to the distance from the special point).  Inside the window
# the outer angles are recovered from the axial images instead; the
# planner's polish-and-verify step keeps whichever branch actually closes
# the matrix equation.
_NEAR_SPECIAL_WINDOW = 1e-5

# Middle-angle offsets above pi tried when a root lands on the reflex
# boundary itself and the true offset is unrecoverable from the root.
_BOUNDARY_SEED_DELTAS = (1e-3, 1e-4)


def _skew(u: np.ndarray) -> np.ndarray:
    return np.array(
        [[0.0, -u[2], u[1]], [u[2], 0.0, -u[0]], [-u[1], u[0], 0.0]]
    )


def _recover_outer_angles(
    u_first: np.ndarray,
    u_last: np.ndarray,
    middle: np.ndarray,
    target: np.ndarray,
) -> list[tuple[float, float]]:
    """Outer angles of U(phi1) · middle · V(phi3) = target by axial images.

    U and V rotate about the fixed axes ``u_first`` and ``u_last``; writing
    each as Rodrigues series A + B cos(phi) + C sin(phi) and projecting the
    matrix equation onto the axes each turn leaves invariant gives two
    independent 3x2 linear least-squares systems for (cos, sin).  Used
    where the scalar-projection coefficients degenerate; returns [] when a
    system is rank deficient (the exact special point, handled elsewhere).
    """
    eye = np.eye(3)
    sols = []
    # The first-angle system acts on column vectors; the last-angle system
    # is the row form, which transposes the Rodrigues sine term.
    for mat, axis, rhs_vec, sign in (
        (middle @ u_last, u_first, target @ u_last, 1.0),
        (middle.T @ u_first, u_last, target.T @ u_first, -1.0),
    ):
        proj = np.outer(axis, axis)
        m = np.column_stack([(eye - proj) @ mat, sign * (_skew(axis) @ mat)])
        sol, _, rank, sv = np.linalg.lstsq(m, rhs_vec - proj @ mat, rcond=None)
        if rank < 2 or sv[-1] < 1e-12:
            return []
        sols.append(normalize_angle(math.atan2(sol[1], sol[0])))
    return [(sols[0], sols[1])]


def _clamped_cos(x: float, clamp_eps: float) -> float | None:
    """Clamp |x| slightly above 1 to +-1; None if beyond the clamp window."""
    if x > 1.0:
        return 1.0 if x <= 1.0 + clamp_eps else None
    if x < -1.0:
        return -1.0 if x >= -1.0 - clamp_eps else None
    return x


def _acos_pair(x: float, clamp_eps: float) -> list[float]:
    """Both angles in [0, 2*pi) with the given cosine (acos and 2*pi - acos)."""
    x = _clamped_cos(x, clamp_eps)
    if x is None:
        return []
    base = math.acos(x)
    return [base, normalize_angle(TWO_PI - base)]


def solve_trig_linear(
    a: float, b: float, c: float, clamp_eps: float = DEFAULT_TOLERANCES.clamp_eps
) -> list[float]:
    """All phi in [0, 2*pi) with a*cos(phi) + b*sin(phi) = c.

    Up to two solutions, phi = (+-acos(c/hypot(a,b)) + atan2(b,a)) mod 2*pi.
    Returns [] when hypot(a,b) is zero (caller must route to a special
    case) or when |c|/hypot(a,b) exceeds 1 beyond the clamp window.
    """
    norm = math.hypot(a, b)
    if norm == 0.0:
        return []
    offset = math.atan2(b, a)
    return [normalize_angle(base + offset) for base in _acos_pair(c / norm, clamp_eps)]


def _entries(target: np.ndarray):
    a11, a12, a13 = target[0]
    a21, a22, a23 = target[1]
    a31, a32, a33 = target[2]
    return a11, a12, a13, a21, a22, a23, a31, a32, a33


# ---------------------------------------------------------------------------
# CGC families
# ---------------------------------------------------------------------------


def _solve_cgc_same(target, r, tol, left: bool) -> list[AngleTriple]:
    # Shared body for LGL (left=True) and RGR: the two differ only in the
    # sign attached to the off-diagonal alpha terms.
    a11, _, a13, a21, a22, _, a31, _, a33 = _entries(target)
    sgn = 1.0 if left else -1.0
    r2 = r * r
    w = math.sqrt(1.0 - r2)

    c2 = (a11 + sgn * r * w * (a13 + a31) + r2 * (a33 - a11 - 1.0)) / (1.0 - r2)
    c2 = _clamped_cos(c2, tol.clamp_eps)
    if c2 is None:
        return []

    out: list[AngleTriple] = []
    if c2 >= 1.0 - tol.degenerate_eps:
        # Middle angle collapses: the path reduces to a single turn.
        out.append((normalize_angle(math.atan2(a21, r * a22)), 0.0, 0.0))

    c1 = (a33 - a11) * r - sgn * a13 * (r2 / w) + sgn * a31 * w
    c3 = (a33 - a11) * r + sgn * a13 * w - sgn * a31 * (r2 / w)
    for phi2 in _acos_pair(c2, tol.clamp_eps):
        if phi2 == 0.0:
            continue
        s2 = math.sin(phi2)
        a = r * (1.0 - c2)
        for phi1 in solve_trig_linear(a, s2, c1, tol.clamp_eps):
            for phi3 in solve_trig_linear(a, s2, c3, tol.clamp_eps):
                out.append((phi1, phi2, phi3))
    return out


def solve_lgl(target, r, tol=DEFAULT_TOLERANCES) -> list[AngleTriple]:
    check_radius(r)
    return _solve_cgc_same(target, r, tol, left=True)


def solve_rgr(target, r, tol=DEFAULT_TOLERANCES) -> list[AngleTriple]:
    check_radius(r)
    return _solve_cgc_same(target, r, tol, left=False)


def solve_lgr(target, r, tol=DEFAULT_TOLERANCES) -> list[AngleTriple]:
    check_radius(r)
    a11, _, a13, a21, a22, _, a31, _, a33 = _entries(target)
    r2 = r * r
    w = math.sqrt(1.0 - r2)

    c2 = ((1.0 - r2) * a11 + r * w * (a31 - a13) + r2 * (1.0 - a33)) / (1.0 - r2)
    c2 = _clamped_cos(c2, tol.clamp_eps)
    if c2 is None:
        return []

    out: list[AngleTriple] = []
    if c2 <= -1.0 + tol.degenerate_eps:
        # Middle angle pi: only phi1 + phi3 is determined; take phi3 = 0.
        # Quadrant from the net-matrix entries (2,1) = -r sin, (2,2) = -cos.
        out.append((normalize_angle(math.atan2(-a21 / r, -a22)), math.pi, 0.0))

    c1 = r * w * a11 - (1.0 - r2) * a31 - r2 * a13 + r * w * a33
    c3 = r * w * a11 + r2 * a31 + (1.0 - r2) * a13 + r * w * a33
    for phi2 in _acos_pair(c2, tol.clamp_eps):
        s2 = math.sin(phi2)
        a = r * w * (1.0 + c2)
        b = -w * s2
        for phi1 in solve_trig_linear(a, b, c1, tol.clamp_eps):
            for phi3 in solve_trig_linear(a, b, c3, tol.clamp_eps):
                out.append((phi1, phi2, phi3))
    return out


def solve_rgl(target, r, tol=DEFAULT_TOLERANCES) -> list[AngleTriple]:
    """Mirror construction: solve LGR against the XY-reflected target."""
    return solve_lgr(reflect_xy(target), r, tol)


# ---------------------------------------------------------------------------
# CCC families
# ---------------------------------------------------------------------------


def _middle_angle_ok(phi2: float, eps: float) -> bool:
    return math.pi + eps < phi2 < TWO_PI - eps


def solve_lrl(target, r, tol=DEFAULT_TOLERANCES) -> list[AngleTriple]:
    check_radius(r)
    a11, _, a13, _, _, _, a31, _, a33 = _entries(target)
    r2 = r * r
    w = math.sqrt(1.0 - r2)
    denom = 4.0 * r2 * (1.0 - r2)

    c2 = ((1.0 - r2) * a11 + r * w * (a13 + a31) + r2 * a33 - (1.0 - 2.0 * r2) ** 2) / denom
    c2 = _clamped_cos(c2, tol.clamp_eps)
    if c2 is None:
        return []
    phi2 = TWO_PI - math.acos(c2)  # middle angle must be reflex
    if not _middle_angle_ok(phi2, tol.degenerate_eps):
        return []
    s2 = math.sin(phi2)

    poly = 8.0 * r2**3 - 12.0 * r2**2 + 6.0 * r2 - 1.0 - 4.0 * (
        2.0 * r2**3 - 3.0 * r2**2 + r2
    ) * c2
    c1 = ((r2 - 1.0) * a11 + r * w * (a31 - a13) + r2 * a33 - poly) / denom
    c3 = ((r2 - 1.0) * a11 + r * w * (a13 - a31) + r2 * a33 - poly) / denom
    a = (2.0 * r2 - 1.0) * (1.0 - c2)

    out: list[AngleTriple] = []
    for phi1 in solve_trig_linear(a, s2, c1, tol.clamp_eps):
        for phi3 in solve_trig_linear(a, s2, c3, tol.clamp_eps):
            out.append((phi1, phi2, phi3))
    return out


def solve_rlr(target, r, tol=DEFAULT_TOLERANCES) -> list[AngleTriple]:
    """Swap construction: the LRL angles of the transformed target apply
    to the RLR path in reverse order."""
    swapped = rlr_swap_transform(target)
    return [(p3, p2, p1) for (p1, p2, p3) in solve_lrl(swapped, r, tol)]


def solve_lr_pi_l(target, r, tol=DEFAULT_TOLERANCES) -> list[AngleTriple]:
    check_radius(r)
    a11, _, a13, a21, a22, _, a31, _, a33 = _entries(target)
    r2 = r * r
    w = math.sqrt(1.0 - r2)

    if abs(r - math.sqrt(0.5)) <= tol.degenerate_eps:
        # Only phi1 - phi3 is determined; zero out the smaller side.
        delta = math.atan2(math.sqrt(2.0) * a21, -a22)
        if delta < 0.0:
            return [(0.0, math.pi, normalize_angle(-delta))]
        return [(normalize_angle(delta), math.pi, 0.0)]

    denom = 8.0 * (r2 - 1.0) * r2
    lead = 1.0 - 8.0 * r2 + 8.0 * r2 * r2
    c1 = (lead + (a11 * (r2 - 1.0) + r * ((a31 - a13) * w + a33 * r)) / (1.0 - 2.0 * r2)) / denom
    c3 = (lead + (a11 * (r2 - 1.0) + r * ((a13 - a31) * w + a33 * r)) / (1.0 - 2.0 * r2)) / denom

    out: list[AngleTriple] = []
    for phi1 in _acos_pair(c1, tol.clamp_eps):
        for phi3 in _acos_pair(c3, tol.clamp_eps):
            out.append((phi1, math.pi, phi3))
    return out


def solve_rl_pi_r(target, r, tol=DEFAULT_TOLERANCES) -> list[AngleTriple]:
    return solve_lr_pi_l(reflect_xy(target), r, tol)


# ---------------------------------------------------------------------------
# CCCC family
# ---------------------------------------------------------------------------


def solve_lrlr(target, r, tol=DEFAULT_TOLERANCES) -> list[AngleTriple]:
    check_radius(r)
    a11, a12, a13, _, a22, _, a31, _, a33 = _entries(target)
    r2 = r * r
    r4 = r2 * r2
    r6 = r4 * r2
    w = math.sqrt(1.0 - r2)

    rhs2 = a11 * (r2 - 1.0) + r * ((a13 - a31) * w + a33 * r)
    qa = 8.0 * r4 * (r2 - 1.0)
    qb = -8.0 * (r2 - 3.0 * r4 + 2.0 * r6)
    qc = (-1.0 + 10.0 * r2 - 16.0 * r4 + 8.0 * r6) - rhs2
    disc = qb * qb - 4.0 * qa * qc
    if disc < -tol.clamp_eps:
        return []
    sq = math.sqrt(max(disc, 0.0))
    roots = [(-qb + sq) / (2.0 * qa), (-qb - sq) / (2.0 * qa)]

    rhs1 = a11 * (1.0 - r2) + r * (-a13 * w - a31 * w + a33 * r)
    rhs3 = (1.0 - r2) * a11 + r * w * (a13 + a31) + r2 * a33

    out: list[AngleTriple] = []
    for root in roots:
        if abs(root + 1.0) <= _NEAR_SPECIAL_WINDOW:
            # Root at (or numerically pinned to) the reflex-middle boundary
            # cos phi2 = -1, where neither acos nor the root itself has
            # usable digits.  Seed a short ladder of middle angles just
            # inside the domain, recover the outer angles axially, and let
            # the planner's polish step settle the exact values.
            for phi2 in (math.pi + d for d in _BOUNDARY_SEED_DELTAS):
                mid = rot_r(r, phi2) @ rot_l(r, phi2)
                out.extend(
                    (p1, phi2, p3)
                    for p1, p3 in _recover_outer_angles(
                        axial_left(r), axial_right(r), mid, target
                    )
                )
        c2 = _clamped_cos(root, tol.clamp_eps)
        if c2 is None:
            continue
        phi2 = TWO_PI - math.acos(c2)
        if not _middle_angle_ok(phi2, tol.degenerate_eps):
            continue
        g = 2.0 * r2 * c2 - 2.0 * r2 + 1.0
        special_gap = abs(c2 - (1.0 - 1.0 / (2.0 * r2)))
        if special_gap <= tol.degenerate_eps:
            # phi1, phi3 not individually determined; fix phi3 = 0 and
            # solve the 2x2 system from the (1,2) and (2,2) entries
            # (determinant r, always invertible).
            q = math.sqrt(max(4.0 * r2 - 1.0, 0.0))
            c1 = (q / (2.0 * r2) * a12 - (2.0 * r2 - 1.0) / (2.0 * r) * a22) / r
            s1 = ((2.0 * r2 - 1.0) / (2.0 * r2) * a12 + q / (2.0 * r) * a22) / r
            if abs(c1 * c1 + s1 * s1 - 1.0) <= _UNIT_CIRCLE_TOL:
                out.append((normalize_angle(math.atan2(s1, c1)), phi2, 0.0))
            continue
        if special_gap <= _NEAR_SPECIAL_WINDOW:
            # Close enough to the special point that the trig-linear
            # coefficients (proportional to special_gap) are noise, yet far
            # enough that the outer angles are still individually
            # determined: recover them from the axial images.
            mid = rot_r(r, phi2) @ rot_l(r, phi2)
            out.extend(
                (p1, phi2, p3)
                for p1, p3 in _recover_outer_angles(
                    axial_left(r), axial_right(r), mid, target
                )
            )
            continue
        s2 = math.sin(phi2)
        cos2 = 2.0 * c2 * c2 - 1.0
        a = 4.0 * r2 * (1.0 - r2) * g * ((2.0 * r2 - 1.0) * c2 - 2.0 * r2 + 2.0)
        b = 4.0 * r2 * (1.0 - r2) * g * (-s2)
        cc = (2.0 * r2 - 1.0) * (
            12.0 * r6
            - 20.0 * r4
            + 10.0 * r2
            + 4.0 * (r2 - 1.0) * r4 * cos2
            - 8.0 * (2.0 * r6 - 3.0 * r4 + r2) * c2
            - 1.0
        )
        for phi1 in solve_trig_linear(a, b, rhs1 - cc, tol.clamp_eps):
            for phi3 in solve_trig_linear(a, b, rhs3 - cc, tol.clamp_eps):
                out.append((phi1, phi2, phi3))
    return out


def solve_rlrl(target, r, tol=DEFAULT_TOLERANCES) -> list[AngleTriple]:
    return solve_lrlr(reflect_xy(target), r, tol)


# ---------------------------------------------------------------------------
# CCCCC family
# ---------------------------------------------------------------------------


def real_cubic_roots(a: float, b: float, c: float, d: float) -> list[float]:
    """Real roots of a*x^3 + b*x^2 + c*x + d (a != 0).

    Trigonometric method for the three-real-root case, Cardano otherwise,
    with one Newton polish step per root against the monic cubic.
    """
    if a == 0.0:
        raise ValueError("leading coefficient must be nonzero")
    b, c, d = b / a, c / a, d / a
    # depressed cubic t^3 + p t + q, x = t - b/3
    shift = b / 3.0
    p = c - b * b / 3.0
    q = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    scale = max((q / 2.0) ** 2, abs(p / 3.0) ** 3)

    if scale != 0.0 and abs(disc) <= 1e-12 * scale:
        # Numerically repeated root: the discriminant sign is noise, and
        # both the trig and Cardano branches lose the root pair.  Factor
        # (t - a)^2 (t + 2a) directly.
        if p == 0.0:
            roots = [-shift]
        else:
            a_dbl = -1.5 * q / p
            roots = [a_dbl - shift, -2.0 * a_dbl - shift]
    elif disc > 0.0:
        u = -q / 2.0 + math.sqrt(disc)
        v = -q / 2.0 - math.sqrt(disc)
        t = math.copysign(abs(u) ** (1.0 / 3.0), u) + math.copysign(
            abs(v) ** (1.0 / 3.0), v
        )
        roots = [t - shift]
    elif p == 0.0:
        roots = [math.copysign(abs(q) ** (1.0 / 3.0), -q) - shift]
    else:
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * m)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg) / 3.0
        roots = [
            m * math.cos(theta - 2.0 * math.pi * k / 3.0) - shift for k in range(3)
        ]

    polished = []
    for x in roots:
        f = x**3 + b * x * x + c * x + d
        df = 3.0 * x * x + 2.0 * b * x + c
        if df != 0.0 and abs(f / df) < 0.1:  # skip near repeated roots
            x -= f / df
        polished.append(x)
    return polished


def solve_lrlrl(target, r, tol=DEFAULT_TOLERANCES) -> list[AngleTriple]:
    check_radius(r)
    a11, a12, a13, _, a22, _, a31, _, a33 = _entries(target)
    r2 = r * r
    r4 = r2 * r2
    r6 = r4 * r2
    r8 = r4 * r4
    w = math.sqrt(1.0 - r2)

    rhs2 = a11 * (1.0 - r2) + r * (a13 * w + a31 * w + a33 * r)
    ca = 16.0 * r6 * (1.0 - r2)
    cb = 16.0 * r4 * (2.0 - 5.0 * r2 + 3.0 * r4)
    cc = -16.0 * r2 * (1.0 - r2) ** 2 * (3.0 * r2 - 1.0)
    cd = (16.0 * r8 - 48.0 * r6 + 48.0 * r4 - 16.0 * r2 + 1.0) - rhs2

    rhs1 = (r2 - 1.0) * a11 + r * w * (a31 - a13) + r2 * a33
    rhs3 = (r2 - 1.0) * a11 + r * w * (a13 - a31) + r2 * a33

    out: list[AngleTriple] = []
    for root in real_cubic_roots(ca, cb, cc, cd):
        if abs(root + 1.0) <= _NEAR_SPECIAL_WINDOW:
            # Same reflex-boundary rescue as the four-turn family.
            for phi2 in (math.pi + d for d in _BOUNDARY_SEED_DELTAS):
                mid = rot_r(r, phi2) @ rot_l(r, phi2) @ rot_r(r, phi2)
                out.extend(
                    (p1, phi2, p3)
                    for p1, p3 in _recover_outer_angles(
                        axial_left(r), axial_left(r), mid, target
                    )
                )
        c2 = _clamped_cos(root, tol.clamp_eps)
        if c2 is None:
            continue
        phi2 = TWO_PI - math.acos(c2)
        if not _middle_angle_ok(phi2, tol.degenerate_eps):
            continue
        special_gap = abs(c2 - (1.0 - 1.0 / r2))
        if special_gap <= tol.degenerate_eps:
            # Only phi1 + phi3 is determined; fix phi3 = 0 and invert the
            # 2x2 system from the (1,2) and (2,2) entries (det -r^4).
            q = math.sqrt(max(2.0 * r2 - 1.0, 0.0))
            c1 = -(q * r * a12 - r2 * (r2 - 1.0) * a22) / r4
            s1 = -(r * (r2 - 1.0) * a12 + r2 * q * a22) / r4
            if abs(c1 * c1 + s1 * s1 - 1.0) <= _UNIT_CIRCLE_TOL:
                out.append((normalize_angle(math.atan2(s1, c1)), phi2, 0.0))
            continue
        if special_gap <= _NEAR_SPECIAL_WINDOW:
            # Same annulus treatment as the four-turn family: the scalar
            # projections have no usable digits here, the axial images do.
            mid = rot_r(r, phi2) @ rot_l(r, phi2) @ rot_r(r, phi2)
            out.extend(
                (p1, phi2, p3)
                for p1, p3 in _recover_outer_angles(
                    axial_left(r), axial_left(r), mid, target
                )
            )
            continue
        s2 = math.sin(phi2)
        cos2 = 2.0 * c2 * c2 - 1.0
        cos3 = (4.0 * c2 * c2 - 3.0) * c2
        sinsq_half = (1.0 - c2) / 2.0
        a = (
            16.0
            * r2
            * (r2 - 1.0)
            * sinsq_half
            * (
                -6.0 * r6
                + 11.0 * r4
                - 7.0 * r2
                + (r4 - 2.0 * r6) * cos2
                + (8.0 * r4 - 12.0 * r2 + 3.0) * r2 * c2
                + 1.0
            )
        )
        b = (
            8.0
            * r2
            * (1.0 - r2)
            * s2
            * (r4 * cos2 + 3.0 * r4 - 3.0 * r2 + (3.0 * r2 - 4.0 * r4) * c2 + 1.0)
        )
        const = (1.0 - 2.0 * r2) * (
            4.0 * r8 * cos3
            - 40.0 * r8
            - 4.0 * r6 * cos3
            + 88.0 * r6
            - 64.0 * r4
            + 16.0 * r2
            - 8.0 * (3.0 * r4 - 5.0 * r2 + 2.0) * r4 * cos2
            + 4.0 * (15.0 * r6 - 31.0 * r4 + 20.0 * r2 - 4.0) * r2 * c2
            - 1.0
        )
        for phi1 in solve_trig_linear(a, b, rhs1 - const, tol.clamp_eps):
            for phi3 in solve_trig_linear(a, b, rhs3 - const, tol.clamp_eps):
                out.append((phi1, phi2, phi3))
    return out


def solve_rlrlr(target, r, tol=DEFAULT_TOLERANCES) -> list[AngleTriple]:
    return solve_lrlrl(reflect_xy(target), r, tol)


SOLVERS = {
    "LGL": solve_lgl,
    "RGR": solve_rgr,
    "LGR": solve_lgr,
    "RGL": solve_rgl,
    "LRL": solve_lrl,
    "RLR": solve_rlr,
    "LRpiL": solve_lr_pi_l,
    "RLpiR": solve_rl_pi_r,
    "LRLR": solve_lrlr,
    "RLRL": solve_rlrl,
    "LRLRL": solve_lrlrl,
    "RLRLR": solve_rlrlr,
}

MIRROR_FAMILY = {
    "LGL": "RGR",
    "RGR": "LGL",
    "LGR": "RGL",
    "RGL": "LGR",
    "LRL": "RLR",
    "RLR": "LRL",
    "LRpiL": "RLpiR",
    "RLpiR": "LRpiL",
    "LRLR": "RLRL",
    "RLRL": "LRLR",
    "LRLRL": "RLRLR",
    "RLRLR": "LRLRL",
}
