#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twins.

Times the two hot loops on real instances:

  * relation scan: sweep the full generator parameter space for one
    (M, A, family), checking relations and regularity per point;
  * pair scan: close every unordered candidate generator pair in Hol(A)
    and collect the regular order-n subgroups.

Usage: python benchmarks/bench_kernels.py [--large] [--repeat N]
"""

import argparse
import time

import numpy as np

from skewbrace import kernels
from skewbrace.counting import pair_context
from skewbrace.groups import canonicalize
from skewbrace.holomorph import hol_tables
from skewbrace.oracle.partition import prime_partition
from skewbrace.oracle.subgroups import _generic_candidates


def relation_scan_args(M, A):
    T = hol_tables(A)
    ctx = pair_context(M, A)
    part = prime_partition(M, A, 1)
    units_arr = np.asarray(T.units, dtype=np.int64)
    return (
        T.mulA, T.autact, T.autcomp, T.invA, T.autinv,
        T.n, T.d, T.e, ctx.g, T.n_aut, T.phi_e, units_arr, T.id_spos,
        ctx.gamma, ctx.zeta * ctx.delta, part.kappa_h,
    )


def pair_scan_args(A):
    T = hol_tables(A)
    cands = _generic_candidates(T)
    total = kernels.pair_count(len(cands))
    return (T.mulA, T.autact, T.autcomp, T.n, T.n_aut, T.id_spos, cands, 0, total)


def time_call(fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--large", action="store_true",
                        help="bigger instances (slow for the pure backend)")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if args.large:
        rel_M = rel_A = canonicalize(2, 13, 12)  # order 26
        scan_A = canonicalize(2, 11, 10)  # order 22
    else:
        rel_M = rel_A = canonicalize(3, 7, 2)  # order 21
        scan_A = canonicalize(2, 7, 6)  # order 14

    backends = [kernels.get_backend("pure")]
    try:
        backends.append(kernels.get_backend("compiled"))
    except ImportError:
        print("compiled kernel not built; benchmarking pure only")

    cases = [
        (f"relation scan  M=A={rel_M}", "quintuple_relation_scan",
         relation_scan_args(rel_M, rel_A)),
        (f"pair scan      A={scan_A}", "generator_pair_scan",
         pair_scan_args(scan_A)),
    ]

    print(f"{'case':<36} {'backend':<10} {'best of ' + str(args.repeat):>12}")
    for label, fn_name, call_args in cases:
        times = {}
        results = {}
        for backend in backends:
            dt, result = time_call(getattr(backend, fn_name), call_args, args.repeat)
            times[backend.BACKEND_NAME] = dt
            results[backend.BACKEND_NAME] = list(result)
            print(f"{label:<36} {backend.BACKEND_NAME:<10} {dt * 1e3:>10.1f}ms")
        if len(results) == 2:
            assert results["pure"] == results["compiled"], "backend results differ"
            speedup = times["pure"] / times["compiled"]
            print(f"{'':<36} {'speedup':<10} {speedup:>11.1f}x")


if __name__ == "__main__":
    main()
