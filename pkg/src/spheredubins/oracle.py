"""Independent numerical ground truth for testing and verification sweeps.

Two pieces: a fixed-step RK4 integrator for the moving-frame ODE (kept
independent of the closed-form segment matrices it is used to check) and
a seeded random-instance generator built on a splitmix64 PRNG so that
verification runs are reproducible.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .planner import FAMILY_WORDS, compose_family, refine_candidate, verify_candidate
from .segments import TWO_PI, SegmentKind, check_radius, u_max
from .solvers import FAMILIES, SOLVERS, AngleTriple, SolverTolerances, DEFAULT_TOLERANCES
from .so3 import axis_angle_rotation

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64: tiny, documented, reproducible across implementations."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        u = (self.next_u64() >> 11) * 2.0**-53
        return lo + (hi - lo) * u


def integrate_segment(u_g: float, arc_length: float, steps: int) -> np.ndarray:
    """Net rotation of R' = R*Omega over ``arc_length`` by fixed-step RK4.

    Re-orthonormalizes (nearest-rotation projection) every 100 steps.
    """
    if steps < 1:
        raise ValueError("steps must be positive")
    if arc_length < 0.0:
        raise ValueError("arc length must be nonnegative")
    return kernels.integrate_rk4(u_g, arc_length, steps)


def integrate_closed_form_check(kind: SegmentKind, r: float, phi: float, steps: int) -> np.ndarray:
    """RK4 counterpart of a closed-form segment matrix.

    Turn segments sweep angle phi over arc length r*phi with control
    +-u_max(r); great circles use zero control over arc length phi.
    """
    check_radius(r)
    if kind is SegmentKind.GREAT_CIRCLE:
        return integrate_segment(0.0, phi, steps)
    sign = 1.0 if kind is SegmentKind.LEFT_TURN else -1.0
    return integrate_segment(sign * u_max(r), r * phi, steps)


def _family_rng(family: str, seed: int) -> SplitMix64:
    # Fold the family label into the stream so each family sees distinct
    # draws for the same base seed.
    rng = SplitMix64(seed)
    mix = rng.next_u64() ^ (FAMILIES.index(family) * 0x9E3779B97F4A7C15)
    return SplitMix64(mix)


def random_instance(
    family: str, r: float, seed: int
) -> tuple[AngleTriple, np.ndarray]:
    """Angles drawn from the family's valid ranges plus the composed target.

    Outer angles are uniform on [0, 2*pi).  The shared middle angle is
    uniform on (pi, 2*pi) for the all-turn families, fixed at pi for the
    pi-middle families, and uniform on [0, 2*pi) for the great-circle
    middle.  Deterministic per (family, seed).
    """
    check_radius(r)
    rng = _family_rng(family, seed)
    phi1 = rng.uniform(0.0, TWO_PI)
    phi3 = rng.uniform(0.0, TWO_PI)
    if family in ("LRpiL", "RLpiR"):
        phi2 = math.pi
    elif family in ("LGL", "RGR", "LGR", "RGL"):
        phi2 = rng.uniform(0.0, TWO_PI)
    else:
        phi2 = rng.uniform(math.pi, TWO_PI)
    angles = (phi1, phi2, phi3)
    return angles, compose_family(family, angles, r)


def random_rotation(seed: int) -> np.ndarray:
    """Seeded random rotation (uniform axis via Gaussian triple, uniform angle)."""
    rng = SplitMix64(seed)
    while True:
        # Box-Muller pairs; reject the rare near-zero axis.
        u1, u2 = rng.uniform(1e-12, 1.0), rng.uniform()
        u3, u4 = rng.uniform(1e-12, 1.0), rng.uniform()
        g1 = math.sqrt(-2.0 * math.log(u1)) * math.cos(TWO_PI * u2)
        g2 = math.sqrt(-2.0 * math.log(u1)) * math.sin(TWO_PI * u2)
        g3 = math.sqrt(-2.0 * math.log(u3)) * math.cos(TWO_PI * u4)
        axis = np.array([g1, g2, g3])
        n = np.linalg.norm(axis)
        if n > 1e-6:
            break
    return axis_angle_rotation(axis / n, rng.uniform(0.0, TWO_PI))


@dataclass(frozen=True)
class RoundTripResult:
    family: str
    r: float
    trials: int
    successes: int
    max_residual: float
    failures: list[tuple[str, float, int]]


def round_trip_sweep(
    families: tuple[str, ...],
    r_values: list[float],
    trials: int,
    base_seed: int,
    tol: SolverTolerances = DEFAULT_TOLERANCES,
) -> list[RoundTripResult]:
    """Generate, solve and verify ``trials`` instances per (family, r).

    A trial succeeds when the family's solver emits at least one candidate
    whose forward-composition residual is within tolerance.
    """
    results = []
    for family in families:
        for r in r_values:
            successes = 0
            max_residual = 0.0
            failures: list[tuple[str, float, int]] = []
            for trial in range(trials):
                seed = base_seed + 1_000_003 * trial
                _, target = random_instance(family, r, seed)
                best = math.inf
                for angles in SOLVERS[family](target, r, tol):
                    residual = verify_candidate(family, angles, r, target)
                    if residual > tol.residual_tol:
                        _, residual = refine_candidate(family, angles, r, target)
                    best = min(best, residual)
                if best <= tol.residual_tol:
                    successes += 1
                    max_residual = max(max_residual, best)
                else:
                    failures.append((family, r, seed))
            results.append(
                RoundTripResult(family, r, trials, successes, max_residual, failures)
            )
    return results
