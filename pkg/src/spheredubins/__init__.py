"""Closed-form Dubins path candidates on the unit sphere.

Computes, for a vehicle with turning radius r in (0, 1) moving on the
unit sphere, every closed-form candidate path between two configurations
across the twelve segment words (CGC, CCC, CCCC and CCCCC patterns),
verifies each candidate by forward composition, and picks the shortest.
"""

from ._backend import BACKEND
from .planner import (
    PathSolution,
    PlanReport,
    path_length,
    plan,
    plan_target,
    sample_path,
    verify_candidate,
)
from .solvers import FAMILIES, SOLVERS, SolverTolerances

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "FAMILIES",
    "SOLVERS",
    "PathSolution",
    "PlanReport",
    "SolverTolerances",
    "path_length",
    "plan",
    "plan_target",
    "sample_path",
    "verify_candidate",
    "__version__",
]
