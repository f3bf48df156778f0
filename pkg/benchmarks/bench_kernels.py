#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python reference.

Two workloads dominate real runs: exact characteristic polynomials of
line graph adjacency matrices, and Littlewood-Richardson backtracking
(full counts and first-witness positivity). Usage:

    python benchmarks/bench_kernels.py
"""

import time

from hornlr._kernels import pure
from hornlr.graphs import complete_bipartite, line_graph

try:
    from hornlr._kernels import _speedups as compiled
except ImportError:
    compiled = None


def timeit(fn, *args, repeat=5):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_char_poly():
    print("char_poly: exact characteristic polynomial of L(K_{s,s})")
    print("(the compiled kernel hands coefficients beyond 64 bits back")
    print(" to the arbitrary-precision backend, shown as `overflow`)")
    print(f"{'order':>6} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for s in (3, 4, 5, 6, 7):
        lg, _ = line_graph(complete_bipartite(s, s))
        rows = lg.adjacency_rows()
        t_pure, expected = timeit(pure.char_poly, rows, repeat=3)
        if compiled is None:
            print(f"{lg.order:>6} {t_pure:>9.4f}s {'-':>10} {'-':>8}")
            continue
        try:
            t_comp, got = timeit(compiled.char_poly, rows, repeat=3)
        except OverflowError:
            print(f"{lg.order:>6} {t_pure:>9.4f}s {'overflow':>10} {'-':>8}")
            continue
        assert got == expected
        print(f"{lg.order:>6} {t_pure:>9.4f}s {t_comp:>9.4f}s {t_pure / t_comp:>7.1f}x")


def _product_sweep(backend, alpha, beta, max_length):
    """Expand the full product: sum of c(alpha, beta; gamma) over every
    gamma of the right size, the same shape of workload as a candidate
    set search."""
    from hornlr.partitions import enumerate_partitions

    total_size = sum(alpha) + sum(beta)
    total = 0
    for length in range(1, max_length + 1):
        for g in enumerate_partitions(total_size, length, total_size):
            gp = g.parts
            if len(alpha) > len(gp) or any(a > v for a, v in zip(alpha, gp)):
                continue
            inner = tuple(alpha) + (0,) * (len(gp) - len(alpha))
            total += backend.lr_count(gp, inner, beta, 0)
    return total


LR_SWEEPS = [
    ((4, 3, 2, 1), (4, 3, 2, 1), 8),
    ((5, 4, 3, 2, 1), (5, 4, 3, 2, 1), 8),
    ((6, 4, 2), (5, 4, 3, 2, 1, 1), 9),
]


def bench_lr():
    print()
    print("lr_count: full product expansion (sum over every target shape)")
    print(f"{'tableaux':>9} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for alpha, beta, max_length in LR_SWEEPS:
        t_pure, expected = timeit(_product_sweep, pure, alpha, beta, max_length, repeat=3)
        if compiled is None:
            print(f"{expected:>9} {t_pure:>9.4f}s {'-':>10} {'-':>8}")
            continue
        t_comp, got = timeit(_product_sweep, compiled, alpha, beta, max_length, repeat=3)
        assert got == expected
        print(
            f"{expected:>9} {t_pure:>9.4f}s {t_comp:>9.4f}s {t_pure / t_comp:>7.1f}x"
        )


def main():
    if compiled is None:
        print("compiled kernels unavailable; timing the pure backend only")
    bench_char_poly()
    bench_lr()


if __name__ == "__main__":
    main()
