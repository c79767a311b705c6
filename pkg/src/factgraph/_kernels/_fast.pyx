# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: denumerant tables and pairwise support-mask counting."""

DEF GUARD = 4611686018427387904  # 2**62: keeps sums below int64 overflow


def denumerant_table(long long[::1] gens, Py_ssize_t limit, long long[::1] out):
    """Fill out[v] with the number of ways to write v as a non-negative
    combination of gens, for v = 0..limit.

    Raises OverflowError if any count reaches the int64 guard; the caller
    falls back to the arbitrary-precision path.
    """
    cdef Py_ssize_t i, v
    cdef long long g, s
    out[0] = 1
    for v in range(1, limit + 1):
        out[v] = 0
    for i in range(gens.shape[0]):
        g = gens[i]
        for v in range(g, limit + 1):
            s = out[v] + out[v - g]
            if s >= GUARD:
                raise OverflowError("denumerant table exceeds int64 guard")
            out[v] = s


def count_intersecting_pairs(long long[::1] masks):
    """Number of index pairs i < j with masks[i] & masks[j] != 0."""
    cdef Py_ssize_t i, j, n = masks.shape[0]
    cdef long long total = 0
    for i in range(n):
        for j in range(i + 1, n):
            if masks[i] & masks[j]:
                total += 1
    return total
