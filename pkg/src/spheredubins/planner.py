"""Candidate enumeration, verification and selection.

Runs all twelve family solvers on the net target rotation, verifies every
emitted angle triple by composing the family's segment matrices, and
ranks the verified candidates by total arc length.  No family is ever
pruned up front: twelve closed-form solves are cheap, and verification is
the single source of truth.
"""

from dataclasses import dataclass, field

import numpy as np

from . import so3
from ._backend import kernels
from .segments import TWO_PI, SegmentKind, check_radius, normalize_angle
from .solvers import (
    FAMILIES,
    SOLVERS,
    AngleTriple,
    DEFAULT_TOLERANCES,
    SolverTolerances,
)

# Segment word per family: (segment kind, index into the angle triple).
# Interior segments of the CCCC/CCCCC families share the middle angle.
FAMILY_WORDS: dict[str, tuple[tuple[SegmentKind, int], ...]] = {
    "LGL": ((SegmentKind.LEFT_TURN, 0), (SegmentKind.GREAT_CIRCLE, 1), (SegmentKind.LEFT_TURN, 2)),
    "RGR": ((SegmentKind.RIGHT_TURN, 0), (SegmentKind.GREAT_CIRCLE, 1), (SegmentKind.RIGHT_TURN, 2)),
    "LGR": ((SegmentKind.LEFT_TURN, 0), (SegmentKind.GREAT_CIRCLE, 1), (SegmentKind.RIGHT_TURN, 2)),
    "RGL": ((SegmentKind.RIGHT_TURN, 0), (SegmentKind.GREAT_CIRCLE, 1), (SegmentKind.LEFT_TURN, 2)),
    "LRL": ((SegmentKind.LEFT_TURN, 0), (SegmentKind.RIGHT_TURN, 1), (SegmentKind.LEFT_TURN, 2)),
    "RLR": ((SegmentKind.RIGHT_TURN, 0), (SegmentKind.LEFT_TURN, 1), (SegmentKind.RIGHT_TURN, 2)),
    "LRpiL": ((SegmentKind.LEFT_TURN, 0), (SegmentKind.RIGHT_TURN, 1), (SegmentKind.LEFT_TURN, 2)),
    "RLpiR": ((SegmentKind.RIGHT_TURN, 0), (SegmentKind.LEFT_TURN, 1), (SegmentKind.RIGHT_TURN, 2)),
    "LRLR": (
        (SegmentKind.LEFT_TURN, 0),
        (SegmentKind.RIGHT_TURN, 1),
        (SegmentKind.LEFT_TURN, 1),
        (SegmentKind.RIGHT_TURN, 2),
    ),
    "RLRL": (
        (SegmentKind.RIGHT_TURN, 0),
        (SegmentKind.LEFT_TURN, 1),
        (SegmentKind.RIGHT_TURN, 1),
        (SegmentKind.LEFT_TURN, 2),
    ),
    "LRLRL": (
        (SegmentKind.LEFT_TURN, 0),
        (SegmentKind.RIGHT_TURN, 1),
        (SegmentKind.LEFT_TURN, 1),
        (SegmentKind.RIGHT_TURN, 1),
        (SegmentKind.LEFT_TURN, 2),
    ),
    "RLRLR": (
        (SegmentKind.RIGHT_TURN, 0),
        (SegmentKind.LEFT_TURN, 1),
        (SegmentKind.RIGHT_TURN, 1),
        (SegmentKind.LEFT_TURN, 1),
        (SegmentKind.RIGHT_TURN, 2),
    ),
}

_FAMILY_INDEX = {name: i for i, name in enumerate(FAMILIES)}


def _segment_matrix(kind: SegmentKind, r: float, phi: float) -> np.ndarray:
    if kind is SegmentKind.GREAT_CIRCLE:
        return kernels.rot_g(phi)
    if kind is SegmentKind.LEFT_TURN:
        return kernels.rot_l(r, phi)
    return kernels.rot_r(r, phi)


def compose_family(family: str, angles: AngleTriple, r: float) -> np.ndarray:
    """Forward composition of the family's segment matrices."""
    m = np.eye(3)
    for kind, idx in FAMILY_WORDS[family]:
        m = m @ _segment_matrix(kind, r, angles[idx])
    return m


def verify_candidate(
    family: str, angles: AngleTriple, r: float, target: np.ndarray
) -> float:
    """Frobenius distance between the composed path and the target."""
    return so3.rotation_distance(compose_family(family, angles, r), target)


# Angle indices a polish step may move; the pi-middle families keep their
# middle angle pinned at exactly pi.
_FREE_ANGLES = {"LRpiL": (0, 2), "RLpiR": (0, 2)}


def refine_candidate(
    family: str,
    angles: AngleTriple,
    r: float,
    target: np.ndarray,
    iterations: int = 8,
) -> tuple[AngleTriple, float]:
    """Gauss-Newton polish of a candidate against the full matrix equation.

    The closed-form branches lose digits where their trig-linear
    coefficients nearly vanish (e.g. a four-turn middle angle close to its
    special value); a couple of damped least-squares steps on the
    forward-composition residual restore full precision.  Steps larger
    than 0.05 are rejected, so wrong-branch candidates are left untouched.
    Returns the (possibly unchanged) triple and its residual.
    """
    free = _FREE_ANGLES.get(family, (0, 1, 2))
    ang = np.array(angles, dtype=float)
    res = compose_family(family, tuple(ang), r) - target
    best = float(np.linalg.norm(res))
    h = 1e-7
    for _ in range(iterations):
        if best == 0.0:
            break
        jac = np.empty((9, len(free)))
        for col, j in enumerate(free):
            up = ang.copy()
            dn = ang.copy()
            up[j] += h
            dn[j] -= h
            jac[:, col] = (
                compose_family(family, tuple(up), r)
                - compose_family(family, tuple(dn), r)
            ).ravel() / (2.0 * h)
        step, *_ = np.linalg.lstsq(jac, -res.ravel(), rcond=None)
        if not np.all(np.isfinite(step)) or np.max(np.abs(step)) > 0.05:
            break
        trial = ang.copy()
        for col, j in enumerate(free):
            trial[j] += step[col]
        new_res = compose_family(family, tuple(trial), r) - target
        n = float(np.linalg.norm(new_res))
        if n >= best:
            break
        ang, res, best = trial, new_res, n
    out = []
    for a in ang:
        # A polish step can nudge an exact 0 or 2*pi endpoint just past the
        # wrap; snapping keeps the path length from jumping by a full turn.
        if -1e-9 < a < 0.0 or a > TWO_PI - 1e-9:
            a = 0.0
        out.append(normalize_angle(a))
    return (out[0], out[1], out[2]), best


def path_length(family: str, angles: AngleTriple, r: float) -> float:
    """Total arc length: phi per great circle, r*phi per turn; interior
    repeated angles count once per segment."""
    check_radius(r)
    total = 0.0
    for kind, idx in FAMILY_WORDS[family]:
        phi = angles[idx]
        total += phi if kind is SegmentKind.GREAT_CIRCLE else r * phi
    return total


@dataclass(frozen=True)
class PathSolution:
    family: str
    angles: AngleTriple
    r: float
    length: float
    residual: float


@dataclass(frozen=True)
class PlanReport:
    best: PathSolution | None
    candidates: list[PathSolution]
    target: np.ndarray
    r: float
    tolerances: SolverTolerances = field(default_factory=SolverTolerances)


def plan_target(
    target: np.ndarray, r: float, tol: SolverTolerances = DEFAULT_TOLERANCES
) -> PlanReport:
    """Enumerate, verify and rank candidates for a net target rotation."""
    check_radius(r)
    target = so3.validate_rotation(target)

    candidates: list[PathSolution] = []
    for family in FAMILIES:
        seen: list[AngleTriple] = []
        for angles in SOLVERS[family](target, r, tol):
            if any(
                max(abs(a - b) for a, b in zip(angles, prev)) < 1e-12
                for prev in seen
            ):
                continue
            seen.append(angles)
            residual = verify_candidate(family, angles, r, target)
            if residual > tol.residual_tol:
                angles, residual = refine_candidate(family, angles, r, target)
            if residual <= tol.residual_tol:
                candidates.append(
                    PathSolution(
                        family=family,
                        angles=angles,
                        r=r,
                        length=path_length(family, angles, r),
                        residual=residual,
                    )
                )

    candidates.sort(key=lambda s: (s.length, _FAMILY_INDEX[s.family], s.angles))
    return PlanReport(
        best=candidates[0] if candidates else None,
        candidates=candidates,
        target=target,
        r=r,
        tolerances=tol,
    )


def plan(
    initial: np.ndarray,
    final: np.ndarray,
    r: float,
    tol: SolverTolerances = DEFAULT_TOLERANCES,
) -> PlanReport:
    """Plan between two absolute configurations."""
    initial = so3.validate_rotation(initial)
    final = so3.validate_rotation(final)
    return plan_target(so3.relative_target(initial, final), r, tol)


def sample_path(
    solution: PathSolution,
    initial: np.ndarray,
    points_per_segment: int,
) -> list[np.ndarray]:
    """Configurations along the path, junctions shared exactly once."""
    if points_per_segment < 2:
        raise ValueError("need at least 2 points per segment")
    out: list[np.ndarray] = []
    current = np.asarray(initial, dtype=float)
    for seg_index, (kind, idx) in enumerate(FAMILY_WORDS[solution.family]):
        phi = solution.angles[idx]
        n = points_per_segment
        samples = [
            current @ _segment_matrix(kind, solution.r, phi * k / (n - 1))
            for k in range(n)
        ]
        out.extend(samples if seg_index == 0 else samples[1:])
        current = samples[-1]
    return out
