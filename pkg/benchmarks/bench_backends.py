#!/usr/bin/env python3
"""Benchmark the numba kernels against their fallback implementations.

Compares, for each backend:
  1. the Schubert-matroid census sweep (fingerprint + dedupe + classify), and
  2. the pruned permutation scan behind the permutation-sum closed form.

Usage:
    python benchmarks/bench_backends.py
    python benchmarks/bench_backends.py --census-n 5 6 7 --perm-k 9 10 11
    python benchmarks/bench_backends.py --output results.json

The same sweeps can be forced onto the fallback globally by setting
CHOW_BACKEND=numpy; here both backends are timed in one process.
"""

from __future__ import annotations

import argparse
import json
import time
from math import comb

from chowpoly import census, closed_form
from chowpoly.kernels import NUMBA_AVAILABLE, perm_descent_aggregates


def warmup() -> None:
    if not NUMBA_AVAILABLE:
        print("numba not importable; only the fallback paths will run")
        return
    print("warming up JIT kernels...")
    census(3, backend="numba")
    perm_descent_aggregates(4, [0, 1, 1, 1, 1], False, backend="numba")
    print("warmup done\n")


def bench_census(sizes: list[int]) -> list[dict]:
    results = []
    print("census sweep (fingerprint + dedupe + classify)")
    print(f"{'n':>3} {'distinct':>9} {'numba (s)':>10} {'numpy (s)':>10} {'speedup':>8}")
    print("-" * 45)
    for n in sizes:
        t0 = time.perf_counter()
        if NUMBA_AVAILABLE:
            table_nb = census(n, backend="numba")
            t_numba = time.perf_counter() - t0
        else:
            table_nb, t_numba = None, float("inf")
        t0 = time.perf_counter()
        table_np = census(n, backend="numpy")
        t_numpy = time.perf_counter() - t0
        if table_nb is not None and table_nb != table_np:
            raise AssertionError(f"backend mismatch at n={n}")
        speedup = t_numpy / t_numba if t_numba > 0 else 0.0
        print(f"{n:>3} {table_np.total:>9} {t_numba:>10.3f} {t_numpy:>10.3f} {speedup:>7.1f}x")
        results.append(
            {
                "n": n,
                "distinct": table_np.total,
                "numba_s": t_numba,
                "numpy_s": t_numpy,
                "speedup": speedup,
            }
        )
    print()
    return results


def bench_perm_scan(ks: list[int], n_extra: int = 2) -> list[dict]:
    results = []
    print("pruned permutation scan (descent-constrained)")
    print(f"{'k':>3} {'numba (s)':>10} {'python (s)':>11} {'speedup':>8}")
    print("-" * 36)
    for k in ks:
        n = k + n_extra
        binoms = [0] + [comb(n - t, k - t) for t in range(1, k + 1)]
        if NUMBA_AVAILABLE:
            t0 = time.perf_counter()
            got_nb = perm_descent_aggregates(k, binoms, False, backend="numba")
            t_numba = time.perf_counter() - t0
        else:
            got_nb, t_numba = None, float("inf")
        t0 = time.perf_counter()
        got_py = perm_descent_aggregates(k, binoms, False, backend="numpy")
        t_python = time.perf_counter() - t0
        if got_nb is not None and got_nb != got_py:
            raise AssertionError(f"backend mismatch at k={k}")
        speedup = t_python / t_numba if t_numba > 0 else 0.0
        print(f"{k:>3} {t_numba:>10.3f} {t_python:>11.3f} {speedup:>7.1f}x")
        results.append(
            {"k": k, "n": n, "numba_s": t_numba, "python_s": t_python, "speedup": speedup}
        )
    print()
    return results


def bench_end_to_end(pairs: list[tuple[int, int]]) -> list[dict]:
    results = []
    print("closed_form('gamma_perm') end to end")
    print(f"{'(k, n)':>8} {'seconds':>9}")
    print("-" * 19)
    for k, n in pairs:
        t0 = time.perf_counter()
        closed_form(k, n, "gamma_perm")
        dt = time.perf_counter() - t0
        print(f"{f'({k},{n})':>8} {dt:>9.3f}")
        results.append({"k": k, "n": n, "seconds": dt})
    print()
    return results


def main() -> int:
    parser = argparse.ArgumentParser(description="Benchmark kernel backends")
    parser.add_argument("--census-n", type=int, nargs="+", default=[4, 5, 6, 7])
    parser.add_argument("--perm-k", type=int, nargs="+", default=[8, 9, 10])
    parser.add_argument("--output", help="write results to a JSON file")
    args = parser.parse_args()

    print(f"numba available: {NUMBA_AVAILABLE}\n")
    warmup()
    all_results = {
        "numba_available": NUMBA_AVAILABLE,
        "census": bench_census(args.census_n),
        "perm_scan": bench_perm_scan(args.perm_k),
        "end_to_end": bench_end_to_end([(10, 12), (12, 12)]),
    }
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(all_results, fh, indent=2)
        print(f"results written to {args.output}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
