"""Compare the compiled kernels against the pure NumPy fallback.

Times the three bulk operations (alternating numbers, all-sources BFS,
full eccentricity sweep) on one member with both backends and prints a
speedup table.

Usage:
    python benchmarks/bench_kernels.py [--spec 4,4,4,4,4] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hiernet import _kernels_py
from hiernet._arrays import csr_adjacency, digit_matrix
from hiernet.labels import parse_spec

try:
    from hiernet import _kernels
except ImportError:
    _kernels = None


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_backend(mod, mat, indptr, indices, repeat: int) -> dict[str, float]:
    n = mat.shape[0]
    out = np.empty(n, dtype=np.int32)

    def run_alt():
        mod.alt_values(mat)

    def run_bfs():
        for src in range(n):
            mod.bfs_distances(indptr, indices, src, out)

    def run_ecc():
        kern = mod.DistanceKernel(mat)
        kern.eccentricities(out)

    return {
        "alt_values": _time(run_alt, repeat),
        "bfs_all_sources": _time(run_bfs, repeat),
        "eccentricity_sweep": _time(run_ecc, repeat),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--spec", default="4,4,4,4,4", help="radix sequence to benchmark")
    ap.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    args = ap.parse_args()

    spec = parse_spec(args.spec)
    mat = digit_matrix(spec)
    indptr, indices = csr_adjacency(spec)
    n = mat.shape[0]
    print(f"member {args.spec}: {n} vertices, {indices.shape[0] // 2} edges")

    pure = bench_backend(_kernels_py, mat, indptr, indices, args.repeat)
    compiled = bench_backend(_kernels, mat, indptr, indices, args.repeat) if _kernels else None

    header = f"{'operation':<22}{'pure [s]':>12}{'compiled [s]':>14}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, t_pure in pure.items():
        if compiled is None:
            print(f"{name:<22}{t_pure:>12.4f}{'n/a':>14}{'n/a':>10}")
        else:
            t_c = compiled[name]
            print(f"{name:<22}{t_pure:>12.4f}{t_c:>14.4f}{t_pure / t_c:>9.1f}x")
    if compiled is None:
        print("compiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()
