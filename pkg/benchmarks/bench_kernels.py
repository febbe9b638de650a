"""Timing comparison of the compiled and numpy kernel backends.

Fixtures are the oracle's real workloads: facet enumeration on reflected-hull
vertex stacks (the dominant cost of hull_volume) and half-space membership
counting on rejection-sampling batches.  Run from the repo root:

    python3 benchmarks/bench_kernels.py [--repeats N] [--mc-samples N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from mirrorhull.hull import hull_volume
from mirrorhull.hyperplane import reflect, support_from_direction
from mirrorhull.kernels import _fallback
from mirrorhull.simplex import EPS_GEOM, build_simplex

try:
    from mirrorhull.kernels import _native
except ImportError:
    _native = None


def reflected_stack(n: int) -> np.ndarray:
    S = build_simplex(n)
    H = support_from_direction(S, np.asarray(S.facet_normals[0]))
    return np.vstack([S.vertices, reflect(S.vertices, H)])


def best_of(repeats: int, fn, *args) -> float:
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5, help="best-of repetitions per cell")
    parser.add_argument("--mc-samples", type=int, default=200_000, help="membership batch size")
    args = parser.parse_args()

    backends = [("fallback", _fallback)]
    if _native is not None:
        backends.append(("native", _native))
    else:
        print("compiled extension not built; timing the numpy backend only")

    rows = []
    for n in (3, 4, 5, 6):
        pts = reflected_stack(n)
        label = f"facets, reflected hull n={n} ({len(pts)} pts)"
        cells = {name: best_of(args.repeats, mod.candidate_facets, pts, EPS_GEOM) for name, mod in backends}
        rows.append((label, cells))

    P = hull_volume(reflected_stack(5))
    normals = np.array([f.normal for f in P.facets])
    offsets = np.array([f.offset for f in P.facets])
    lo = P.points.min(axis=0)
    hi = P.points.max(axis=0)
    rng = np.random.default_rng(0)
    samples = lo + rng.random((args.mc_samples, P.dim)) * (hi - lo)
    label = f"membership, {args.mc_samples} samples x {len(normals)} facets"
    cells = {
        name: best_of(args.repeats, mod.count_inside, samples, normals, offsets, EPS_GEOM)
        for name, mod in backends
    }
    rows.append((label, cells))

    width = max(len(label) for label, _ in rows)
    header = f"{'workload':<{width}}  {'fallback':>10}"
    if _native is not None:
        header += f"  {'native':>10}  {'speedup':>7}"
    print(header)
    for label, cells in rows:
        line = f"{label:<{width}}  {cells['fallback'] * 1e3:>8.2f}ms"
        if _native is not None:
            line += f"  {cells['native'] * 1e3:>8.2f}ms  {cells['fallback'] / cells['native']:>6.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
