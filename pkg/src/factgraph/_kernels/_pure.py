"""Pure-Python / numpy fallbacks for the compiled kernels."""

import numpy as np


def denumerant_table(gens, limit):
    """Exact big-integer denumerant table for 0..limit."""
    table = [0] * (limit + 1)
    table[0] = 1
    for g in gens:
        for v in range(g, limit + 1):
            table[v] += table[v - g]
    return table


def count_intersecting_pairs(masks):
    """Pairwise i < j count of intersecting support masks (numpy, chunked)."""
    n = len(masks)
    if n < 2:
        return 0
    arr = np.asarray(masks, dtype=np.int64)
    cols = np.arange(n)
    total = 0
    chunk = 1024
    for start in range(0, n, chunk):
        rows = arr[start : start + chunk]
        hits = (rows[:, None] & arr[None, :]) != 0
        upper = cols[None, :] > np.arange(start, start + len(rows))[:, None]
        total += int(np.count_nonzero(hits & upper))
    return total
