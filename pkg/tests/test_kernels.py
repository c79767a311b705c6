import random
import subprocess
import sys

import pytest

from factgraph import _kernels
from factgraph._kernels import _pure


def brute_denumerant(gens, limit):
    table = [0] * (limit + 1)
    table[0] = 1
    for g in gens:
        for n in range(g, limit + 1):
            table[n] += table[n - g]
    return table


@pytest.mark.parametrize("gens", [(6, 9, 20), (4, 6), (5, 7, 9, 11), (3,)])
def test_denumerant_table_matches_brute_force(gens):
    limit = 150
    expected = brute_denumerant(gens, limit)
    assert _kernels.denumerant_table(list(gens), limit) == expected
    assert _pure.denumerant_table(list(gens), limit) == expected


def test_denumerant_values_are_python_ints():
    table = _kernels.denumerant_table([6, 9, 20], 100)
    assert all(type(v) is int for v in table)


def test_large_counts_are_exact():
    # counts overflow int64 for large n over small generators; both paths
    # must still be exact
    gens = list(range(1, 11))
    limit = 3000
    expected = brute_denumerant(gens, limit)
    assert expected[limit] > 2**62  # past the compiled path's overflow guard
    assert _kernels.denumerant_table(gens, limit) == expected
    assert _pure.denumerant_table(gens, limit) == expected


def brute_pairs(masks):
    return sum(
        1
        for i in range(len(masks))
        for j in range(i + 1, len(masks))
        if masks[i] & masks[j]
    )


def test_count_intersecting_pairs_random():
    rng = random.Random(7)
    for size in (0, 1, 2, 50, 300):
        masks = [rng.randrange(1, 16) for _ in range(size)]
        expected = brute_pairs(masks)
        assert _kernels.count_intersecting_pairs(masks) == expected
        assert _pure.count_intersecting_pairs(masks) == expected


def test_backend_flag_is_valid():
    assert _kernels.BACKEND in ("compiled", "pure")


def test_pure_backend_env_override():
    code = (
        "import factgraph; print(factgraph.BACKEND); "
        "print(factgraph.new_semigroup((6, 9, 20)).count_factorizations(180))"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"FACTGRAPH_PURE": "1", "PATH": "/usr/bin:/bin:/usr/local/bin"},
        check=True,
    )
    backend, count = out.stdout.split()
    assert backend == "pure"
    assert int(count) == 23
