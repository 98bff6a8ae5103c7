"""Command-line front-end.

Subcommands:
  plan    read a JSON query, write a JSON report of ranked candidates
  sample  write a CSV polyline of positions along the best path
  verify  run seeded round-trip sweeps across all families

Exit codes: 0 success, 1 malformed input, 2 no candidate found,
3 invariant-violating matrices or radius, 4 verification failures.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from ._backend import kernels
from .oracle import round_trip_sweep
from .planner import FAMILY_WORDS, PlanReport, plan_target, sample_path
from .segments import SegmentKind
from .so3 import relative_target, validate_rotation
from .solvers import FAMILIES, SolverTolerances

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_NO_CANDIDATE = 2
EXIT_INVARIANT = 3
EXIT_VERIFY_FAILED = 4

#: Matrices further than this from the rotation group are rejected;
#: anything closer is repaired by nearest-rotation projection.
REPAIR_TOL = 1e-6

DEFAULT_VERIFY_RADII = [0.2, 0.5, 1.0 / math.sqrt(2.0), 0.8]


class QueryError(Exception):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def _fmt_float(x: float) -> str:
    # 17 significant digits round-trips doubles exactly.
    return format(float(x), ".17g")


def to_json(obj, indent: int = 0) -> str:
    """Deterministic JSON: insertion-ordered keys, 17-digit floats."""
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ",\n".join(
            f'{pad}  {json.dumps(k)}: {to_json(v, indent + 1)}' for k, v in obj.items()
        )
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = ",\n".join(f"{pad}  {to_json(v, indent + 1)}" for v in obj)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, (int, str)):
        return json.dumps(obj)
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _parse_matrix(raw, name: str) -> np.ndarray:
    try:
        m = np.array(raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise QueryError(f"field '{name}': not a numeric matrix ({exc})", EXIT_BAD_INPUT)
    if m.shape != (3, 3):
        raise QueryError(
            f"field '{name}': expected a 3x3 row-major matrix, got shape {m.shape}",
            EXIT_BAD_INPUT,
        )
    if np.linalg.norm(m.T @ m - np.eye(3)) > REPAIR_TOL:
        raise QueryError(
            f"field '{name}': matrix is not orthonormal within {REPAIR_TOL}",
            EXIT_INVARIANT,
        )
    m = kernels.nearest_rotation(m)
    try:
        return validate_rotation(m)
    except ValueError as exc:
        raise QueryError(f"field '{name}': {exc}", EXIT_INVARIANT)


def load_query(path: str, args) -> dict:
    """Parse and validate a query document, applying flag overrides."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise QueryError(f"cannot read input: {exc}", EXIT_BAD_INPUT)
    except json.JSONDecodeError as exc:
        raise QueryError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            EXIT_BAD_INPUT,
        )
    if not isinstance(doc, dict):
        raise QueryError("query document must be a JSON object", EXIT_BAD_INPUT)
    if "final" not in doc:
        raise QueryError("missing required field 'final'", EXIT_BAD_INPUT)

    r = args.r if args.r is not None else doc.get("r")
    if r is None:
        raise QueryError("missing required field 'r'", EXIT_BAD_INPUT)
    try:
        r = float(r)
    except (TypeError, ValueError):
        raise QueryError("field 'r': not a number", EXIT_BAD_INPUT)
    if not (0.0 < r < 1.0):
        raise QueryError(
            f"field 'r': turning radius must lie strictly in (0, 1), got {r}",
            EXIT_INVARIANT,
        )

    tol_doc = doc.get("tolerances", {})
    if not isinstance(tol_doc, dict):
        raise QueryError("field 'tolerances': must be an object", EXIT_BAD_INPUT)
    tol_kwargs = {}
    for key in ("clamp_eps", "residual_tol", "degenerate_eps"):
        if key in tol_doc:
            tol_kwargs[key] = float(tol_doc[key])
    if args.residual_tol is not None:
        tol_kwargs["residual_tol"] = args.residual_tol
    try:
        tol = SolverTolerances(**tol_kwargs)
    except ValueError as exc:
        raise QueryError(f"field 'tolerances': {exc}", EXIT_BAD_INPUT)

    samples = doc.get("samples_per_segment", 50)
    if args.samples is not None:
        samples = args.samples
    if not isinstance(samples, int) or samples < 2:
        raise QueryError(
            "field 'samples_per_segment': must be an integer >= 2", EXIT_BAD_INPUT
        )

    initial = (
        _parse_matrix(doc["initial"], "initial") if "initial" in doc else np.eye(3)
    )
    final = _parse_matrix(doc["final"], "final")
    return {
        "initial": initial,
        "final": final,
        "r": r,
        "tolerances": tol,
        "samples_per_segment": samples,
    }


def _matrix_rows(m: np.ndarray) -> list[list[float]]:
    return [[float(x) for x in row] for row in m]


def report_to_dict(report: PlanReport, query: dict) -> dict:
    def sol(s):
        return {
            "family": s.family,
            "angles": [float(a) for a in s.angles],
            "length": s.length,
            "residual": s.residual,
        }

    tol = query["tolerances"]
    return {
        "version": __version__,
        "query": {
            "initial": _matrix_rows(query["initial"]),
            "final": _matrix_rows(query["final"]),
            "r": query["r"],
            "tolerances": {
                "clamp_eps": tol.clamp_eps,
                "residual_tol": tol.residual_tol,
                "degenerate_eps": tol.degenerate_eps,
            },
            "samples_per_segment": query["samples_per_segment"],
        },
        "best": sol(report.best) if report.best else None,
        "candidates": [sol(s) for s in report.candidates],
    }


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_plan(args) -> int:
    query = load_query(args.input, args)
    target = relative_target(query["initial"], query["final"])
    report = plan_target(target, query["r"], query["tolerances"])
    _write(args.output, to_json(report_to_dict(report, query)) + "\n")
    return EXIT_OK if report.best else EXIT_NO_CANDIDATE


def cmd_sample(args) -> int:
    query = load_query(args.input, args)
    target = relative_target(query["initial"], query["final"])
    report = plan_target(target, query["r"], query["tolerances"])
    if report.best is None:
        sys.stderr.write("no verified candidate to sample\n")
        return EXIT_NO_CANDIDATE

    best = report.best
    lines = ["segment_index,s,x,y,z"]
    if best.length == 0.0:
        x = query["initial"][:, 0]
        lines.append(
            "0,0," + ",".join(_fmt_float(v) for v in x)
        )
    else:
        n = query["samples_per_segment"]
        configs = sample_path(best, query["initial"], n)
        word = FAMILY_WORDS[best.family]
        i = 0
        s = 0.0
        for seg_index, (kind, idx) in enumerate(word):
            phi = best.angles[idx]
            seg_len = phi if kind is SegmentKind.GREAT_CIRCLE else best.r * phi
            start_k = 0 if seg_index == 0 else 1
            for k in range(start_k, n):
                cfg = configs[i]
                i += 1
                s_here = s + seg_len * k / (n - 1)
                lines.append(
                    f"{seg_index},{_fmt_float(s_here)},"
                    + ",".join(_fmt_float(v) for v in cfg[:, 0])
                )
            s += seg_len
    _write(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    radii = args.r_values if args.r_values else DEFAULT_VERIFY_RADII
    tol = SolverTolerances(residual_tol=args.residual_tol or 1e-9)
    results = round_trip_sweep(FAMILIES, radii, args.trials, args.seed, tol)

    lines = []
    all_failures = []
    for family in FAMILIES:
        fam_results = [res for res in results if res.family == family]
        successes = sum(res.successes for res in fam_results)
        trials = sum(res.trials for res in fam_results)
        max_res = max(res.max_residual for res in fam_results)
        lines.append(
            f"{family}: {successes}/{trials} ok, max residual {max_res:.3e}"
        )
        for res in fam_results:
            all_failures.extend(res.failures)
    text = "\n".join(lines) + "\n"
    if all_failures:
        text += "failures:\n"
        for family, r, seed in all_failures:
            text += f"  {family} r={_fmt_float(r)} seed={seed}\n"
    _write(args.output, text)
    return EXIT_VERIFY_FAILED if all_failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sphere-dubins",
        description="Candidate optimal Dubins paths on the unit sphere.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input):
        if needs_input:
            p.add_argument("--input", required=True, help="query JSON path")
        p.add_argument("--output", default=None, help="output path (default stdout)")
        p.add_argument("--r", type=float, default=None, help="override turning radius")
        p.add_argument("--samples", type=int, default=None, help="samples per segment")
        p.add_argument(
            "--residual-tol", type=float, default=None, help="verification tolerance"
        )

    p_plan = sub.add_parser("plan", help="rank candidate paths for a query")
    common(p_plan, needs_input=True)
    p_plan.set_defaults(func=cmd_plan)

    p_sample = sub.add_parser("sample", help="CSV polyline along the best path")
    common(p_sample, needs_input=True)
    p_sample.set_defaults(func=cmd_sample)

    p_verify = sub.add_parser("verify", help="seeded round-trip sweep")
    p_verify.add_argument("--output", default=None)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument(
        "--r",
        dest="r_values",
        type=float,
        action="append",
        default=None,
        help="radius to sweep (repeatable; default 0.2 0.5 1/sqrt2 0.8)",
    )
    p_verify.add_argument("--residual-tol", type=float, default=None)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QueryError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
