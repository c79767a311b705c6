#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot paths behind the edge-count scans: denumerant tables
(dynamic programming) and pairwise support-mask intersection counting.
Run as ``python3 benchmarks/bench_kernels.py``.
"""

import random
import time

from factgraph._kernels import _pure

try:
    from factgraph._kernels import _fast
except ImportError:
    _fast = None


def timeit(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_denumerant():
    gens = [6, 9, 20]
    limit = 200_000
    print(f"denumerant table, generators {gens}, limit {limit}:")
    t_pure, r_pure = timeit(lambda: _pure.denumerant_table(gens, limit))
    print(f"  pure      {t_pure * 1e3:9.2f} ms")
    if _fast is not None:
        import numpy as np

        def compiled():
            out = np.zeros(limit + 1, dtype=np.int64)
            _fast.denumerant_table(np.asarray(gens, dtype=np.int64), limit, out)
            return out.tolist()

        t_fast, r_fast = timeit(compiled)
        assert r_fast == r_pure, "backends disagree"
        print(f"  compiled  {t_fast * 1e3:9.2f} ms   ({t_pure / t_fast:.1f}x)")


def bench_pair_counting():
    rng = random.Random(1)
    masks = [rng.randrange(1, 1 << 4) for _ in range(20_000)]
    print(f"intersecting-pair count, {len(masks)} masks:")
    t_pure, r_pure = timeit(lambda: _pure.count_intersecting_pairs(masks), repeats=3)
    print(f"  pure      {t_pure * 1e3:9.2f} ms")
    if _fast is not None:
        import numpy as np

        arr = np.asarray(masks, dtype=np.int64)
        t_fast, r_fast = timeit(lambda: _fast.count_intersecting_pairs(arr), repeats=3)
        assert r_fast == r_pure, "backends disagree"
        print(f"  compiled  {t_fast * 1e3:9.2f} ms   ({t_pure / t_fast:.1f}x)")


def main():
    if _fast is None:
        print("compiled extension unavailable; timing the pure backend only")
    bench_denumerant()
    bench_pair_counting()


if __name__ == "__main__":
    main()
