"""Kernel selection: compiled extension when available, pure fallback otherwise.

Set FACTGRAPH_PURE=1 to force the pure backend (used by the benchmark and to
debug suspected kernel issues).
"""

import os

import numpy as np

from . import _pure

if os.environ.get("FACTGRAPH_PURE"):
    _fast = None
else:
    try:
        from . import _fast  # type: ignore[attr-defined]
    except ImportError:
        _fast = None

BACKEND = "compiled" if _fast is not None else "pure"


def denumerant_table(gens, limit):
    """Counts of representations of 0..limit over gens, as exact ints.

    The compiled path counts in int64 with an overflow guard and silently
    falls back to big integers when the guard trips.
    """
    gens = [int(g) for g in gens]
    if _fast is not None:
        out = np.zeros(limit + 1, dtype=np.int64)
        try:
            _fast.denumerant_table(np.asarray(gens, dtype=np.int64), limit, out)
            return out.tolist()
        except OverflowError:
            pass
    return _pure.denumerant_table(gens, limit)


def count_intersecting_pairs(masks):
    """Number of index pairs i < j whose bitmasks intersect."""
    arr = np.ascontiguousarray(np.asarray(masks, dtype=np.int64))
    if _fast is not None:
        return int(_fast.count_intersecting_pairs(arr))
    return _pure.count_intersecting_pairs(arr)
