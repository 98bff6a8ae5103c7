"""End-to-end acceptance checks, one test per criterion.

Each test prints a single summary line on success; the pytest -v status
line is the pass/fail record.  Tolerances and sizes are fixed here on
purpose -- loosening them is a behavior change, not a test fix.
"""

import json
import math
import time

import numpy as np

from spheredubins import cli
from spheredubins.oracle import (
    SplitMix64,
    integrate_closed_form_check,
    random_instance,
    random_rotation,
    round_trip_sweep,
)
from spheredubins.planner import (
    compose_family,
    path_length,
    plan_target,
    verify_candidate,
)
from spheredubins.segments import SegmentKind, axial_left, axial_right, rot_l, rot_r
from spheredubins.so3 import reflect_xy, rotation_distance
from spheredubins.solvers import (
    FAMILIES,
    MIRROR_FAMILY,
    SOLVERS,
    solve_lgl,
    solve_lgr,
    solve_lr_pi_l,
    solve_lrlr,
    solve_lrlrl,
)

TWO_PI = 2.0 * math.pi
RADII = (0.2, 0.5, 1.0 / math.sqrt(2.0), 0.8)


def test_criterion_1_segment_ode_equivalence():
    """Closed-form segment matrices match RK4 integration of the frame ODE."""
    start = time.perf_counter()
    rng = SplitMix64(2024)
    kinds = (SegmentKind.GREAT_CIRCLE, SegmentKind.LEFT_TURN, SegmentKind.RIGHT_TURN)
    worst = 0.0
    for trial in range(200):
        kind = kinds[trial % 3]
        r = rng.uniform(0.05, 0.95)
        phi = rng.uniform(0.0, TWO_PI)
        numeric = integrate_closed_form_check(kind, r, phi, steps=10_000)
        if kind is SegmentKind.GREAT_CIRCLE:
            closed = cli.kernels.rot_g(phi)
        elif kind is SegmentKind.LEFT_TURN:
            closed = rot_l(r, phi)
        else:
            closed = rot_r(r, phi)
        worst = max(worst, rotation_distance(closed, numeric))
    elapsed = time.perf_counter() - start
    assert worst <= 1e-8, f"max segment/ODE distance {worst:.3e}"
    assert elapsed < 30.0, f"took {elapsed:.1f}s"
    print(f"criterion 1 segment/ODE equivalence: PASS (max {worst:.2e}, {elapsed:.1f}s)")


def test_criterion_2_axial_fixed_points():
    """Turn matrices fix their axial vectors."""
    rng = SplitMix64(77)
    worst = 0.0
    for _ in range(500):
        r = rng.uniform(0.05, 0.95)
        phi = rng.uniform(0.0, TWO_PI)
        worst = max(
            worst,
            float(np.linalg.norm(rot_l(r, phi) @ axial_left(r) - axial_left(r))),
            float(np.linalg.norm(rot_r(r, phi) @ axial_right(r) - axial_right(r))),
        )
    assert worst <= 1e-12, f"max axial drift {worst:.3e}"
    print(f"criterion 2 axial fixed points: PASS (max {worst:.2e})")


def test_criterion_3_round_trip_recovery():
    """1000 seeded instances per family per radius all round-trip."""
    start = time.perf_counter()
    results = round_trip_sweep(FAMILIES, list(RADII), trials=1000, base_seed=0)
    elapsed = time.perf_counter() - start
    failures = [f for res in results for f in res.failures]
    total = sum(res.trials for res in results)
    ok = sum(res.successes for res in results)
    assert not failures, f"{len(failures)} failures, first: {failures[:3]}"
    assert ok == total == 48_000
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    print(f"criterion 3 round-trip recovery: PASS ({ok}/{total}, {elapsed:.1f}s)")


def test_criterion_4_special_case_branches():
    """Each degenerate branch is exercised and recovers its target."""
    checks = []

    # middle angle collapses to zero: pure single turn
    r = 0.6
    target = rot_l(r, 1.2)
    checks.append(
        ("turn-G-turn zero middle",
         min(verify_candidate("LGL", c, r, target) for c in solve_lgl(target, r)))
    )

    # half-circle great-circle middle: only the angle sum is determined
    r = 0.45
    target = compose_family("LGR", (1.1, math.pi, 0.7), r)
    checks.append(
        ("half-circle middle",
         min(verify_candidate("LGR", c, r, target) for c in solve_lgr(target, r)))
    )

    # pi-middle three-turn at r = 1/sqrt(2): only the angle difference counts
    r = 1.0 / math.sqrt(2.0)
    target = compose_family("LRpiL", (0.9, math.pi, 0.0), r)
    checks.append(
        ("diagonal-radius pi middle",
         min(verify_candidate("LRpiL", c, r, target) for c in solve_lr_pi_l(target, r)))
    )

    # four-turn special middle at r = 0.8
    r = 0.8
    phi2 = TWO_PI - math.acos(1.0 - 1.0 / (2.0 * r * r))
    target = compose_family("LRLR", (2.3, phi2, 0.0), r)
    checks.append(
        ("four-turn special middle",
         min(verify_candidate("LRLR", c, r, target) for c in solve_lrlr(target, r)))
    )

    # five-turn special middle at r = 0.8
    phi2 = TWO_PI - math.acos(1.0 - 1.0 / (r * r))
    target = compose_family("LRLRL", (1.9, phi2, 0.0), r)
    checks.append(
        ("five-turn special middle",
         min(verify_candidate("LRLRL", c, r, target) for c in solve_lrlrl(target, r)))
    )

    for name, residual in checks:
        assert residual <= 1e-9, f"{name}: residual {residual:.3e}"
    worst = max(res for _, res in checks)
    print(f"criterion 4 special-case branches: PASS (5 branches, max {worst:.2e})")


def test_criterion_5_mirror_duality():
    """Reflected targets yield the same candidate lengths with L and R swapped."""
    r_cycle = RADII
    worst = 0.0
    for trial in range(500):
        r = r_cycle[trial % len(r_cycle)]
        target = random_rotation(31_000 + trial)
        direct = plan_target(target, r)
        mirrored = plan_target(reflect_xy(target), r)
        by_family = {f: [] for f in FAMILIES}
        for c in direct.candidates:
            by_family[c.family].append(c.length)
        mirror_by_family = {f: [] for f in FAMILIES}
        for c in mirrored.candidates:
            mirror_by_family[c.family].append(c.length)
        for family in FAMILIES:
            own = sorted(by_family[family])
            twin = sorted(mirror_by_family[MIRROR_FAMILY[family]])
            assert len(own) == len(twin), (
                f"trial {trial} {family}: {len(own)} vs {len(twin)} candidates"
            )
            for x, y in zip(own, twin):
                worst = max(worst, abs(x - y))
                assert abs(x - y) <= 1e-9, f"trial {trial} {family}: {x} vs {y}"
    print(f"criterion 5 mirror duality: PASS (500 targets, max gap {worst:.2e})")


def test_criterion_6_multiplicity_bounds():
    """Middle-angle solution branches stay within their algebraic bounds."""
    # circular clustering so phi and 2*pi - phi wrap-arounds are not
    # double-counted near the branch cut
    def middle_clusters(triples):
        centers: list[float] = []
        for _, phi2, _ in triples:
            for c in centers:
                d = abs(phi2 - c)
                if min(d, TWO_PI - d) < 0.01:
                    break
            else:
                centers.append(phi2)
        return len(centers)

    bounds = {
        "LGL": 2, "RGR": 2, "LGR": 2, "RGL": 2,
        "LRL": 1, "RLR": 1, "LRpiL": 1, "RLpiR": 1,
        "LRLR": 2, "RLRL": 2, "LRLRL": 3, "RLRLR": 3,
    }
    worst = {f: 0 for f in FAMILIES}
    for family in FAMILIES:
        for r in RADII:
            for trial in range(250):
                _, target = random_instance(family, r, 60_000 + 1_000_003 * trial)
                count = middle_clusters(SOLVERS[family](target, r))
                worst[family] = max(worst[family], count)
                assert count <= bounds[family], (
                    f"{family} r={r} trial {trial}: {count} middle branches"
                )
    summary = ", ".join(f"{f}:{worst[f]}" for f in FAMILIES)
    print(f"criterion 6 multiplicity bounds: PASS ({summary})")


def test_criterion_7_planner_optimality():
    """The planner never returns a longer path than the generating one."""
    for trial in range(1000):
        family = FAMILIES[trial % len(FAMILIES)]
        r = RADII[trial % len(RADII)]
        angles, target = random_instance(family, r, 90_000 + trial)
        report = plan_target(target, r)
        assert report.best is not None, f"trial {trial}: no candidate"
        generating = path_length(family, angles, r)
        assert report.best.length <= generating + 1e-9, (
            f"trial {trial} {family}: best {report.best.length} > {generating}"
        )
        assert (
            verify_candidate(report.best.family, report.best.angles, r, target) <= 1e-9
        )
    print("criterion 7 planner optimality: PASS (1000 instances)")


def test_criterion_8_cli_contract(tmp_path, capsys):
    """Exit codes and byte-determinism of the command-line interface."""
    identity = tmp_path / "identity.json"
    identity.write_text(json.dumps({"final": np.eye(3).tolist(), "r": 0.5}))
    assert cli.main(["plan", "--input", str(identity)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["best"]["length"] == 0.0

    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    assert cli.main(["plan", "--input", str(bad)]) == 1
    capsys.readouterr()

    out_of_range = tmp_path / "range.json"
    out_of_range.write_text(json.dumps({"final": np.eye(3).tolist(), "r": 1.5}))
    assert cli.main(["plan", "--input", str(out_of_range)]) == 3
    capsys.readouterr()

    target = random_rotation(12345)
    query = tmp_path / "query.json"
    query.write_text(
        json.dumps({"final": [list(map(float, row)) for row in target], "r": 0.7})
    )
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(["plan", "--input", str(query), "--output", str(a)]) == 0
    assert cli.main(["plan", "--input", str(query), "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()

    assert cli.main(["verify", "--trials", "100", "--output", str(tmp_path / "v.txt")]) == 0
    print("criterion 8 CLI contract: PASS")
