"""Compare the compiled kernels against the pure-Python fallback.

Times the segment rotation matrices, the RK4 integrator, and a full
plan_target call under each backend.  Run as a script:

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import math
import time

import numpy as np

from spheredubins import _kernels_py
from spheredubins.oracle import random_instance
from spheredubins.planner import plan_target

try:
    from spheredubins import _kernels
except ImportError:
    _kernels = None


def _time(fn, repeat: int) -> float:
    best = math.inf
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(repeat):
            fn()
        best = min(best, (time.perf_counter() - t0) / repeat)
    return best


def bench_backend(kernels, repeat: int) -> dict[str, float]:
    r, phi = 0.5, 2.3
    out = {}
    out["rot_l"] = _time(lambda: kernels.rot_l(r, phi), repeat * 10)
    out["rot_g"] = _time(lambda: kernels.rot_g(phi), repeat * 10)
    out["rk4_1k_steps"] = _time(
        lambda: kernels.integrate_rk4(math.sqrt(3.0), 2.0, 1000), repeat
    )
    m = np.eye(3) + 1e-8
    out["nearest_rotation"] = _time(lambda: kernels.nearest_rotation(m), repeat * 10)
    return out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=200)
    args = parser.parse_args()

    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.append(("cython", _kernels))

    results = {name: bench_backend(k, args.repeat) for name, k in backends}
    ops = sorted(next(iter(results.values())))
    print(f"{'op':<18}" + "".join(f"{name:>14}" for name, _ in backends) + "   speedup")
    for op in ops:
        row = f"{op:<18}"
        for name, _ in backends:
            row += f"{results[name][op] * 1e6:>12.2f}us"
        if len(backends) == 2:
            row += f"{results['python'][op] / results['cython'][op]:>9.1f}x"
        print(row)

    # End-to-end: plan one instance per family (backend is whichever the
    # package picked at import time).
    _, target = random_instance("LRLRL", 0.5, seed=7)
    dt = _time(lambda: plan_target(target, 0.5), max(args.repeat // 10, 1))
    print(f"\nplan_target (active backend): {dt * 1e3:.3f} ms")


if __name__ == "__main__":
    main()
