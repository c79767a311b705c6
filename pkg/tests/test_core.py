import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from factgraph.core import (
    Factorization,
    NumericalSemigroup,
    Trade,
    direct_trade,
    new_semigroup,
)
from factgraph.errors import (
    EmptyInput,
    EmptySubset,
    IdenticalFactorizations,
    NonMinimalGenerators,
    ValueMismatch,
)

GENS = [(6, 9, 20), (8, 11, 12), (6, 10, 15), (3, 5, 7), (4, 6), (5, 7, 9, 11)]


@pytest.fixture(scope="module")
def s6920():
    return new_semigroup((6, 9, 20))


def brute_membership(gens, bound):
    reachable = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for g in gens:
            w = v + g
            if w <= bound and w not in reachable:
                reachable.add(w)
                frontier.append(w)
    return reachable


@pytest.mark.parametrize("gens", GENS)
def test_membership_matches_brute_force(gens):
    S = new_semigroup(gens)
    reachable = brute_membership(gens, 200)
    for n in range(201):
        assert S.contains(n) == (n in reachable)
        assert (n in S) == (n in reachable)
    assert not S.contains(-1)


def test_golden_factorization_set(s6920):
    assert {f.coords for f in s6920.factorizations(18)} == {(3, 0, 0), (0, 2, 0)}
    assert s6920.factorizations(7) == ()
    assert [f.coords for f in s6920.factorizations(0)] == [(0, 0, 0)]


@pytest.mark.parametrize("gens", GENS)
def test_count_equals_enumeration(gens):
    S = new_semigroup(gens)
    for n in range(151):
        zs = S.factorizations(n)
        assert S.count_factorizations(n) == len(zs)
        assert list(zs) == sorted(zs)  # lexicographic order
        for z in zs:
            assert sum(c * g for c, g in zip(z.coords, S.generators)) == n


def test_count_subset(s6920):
    # generators 6 and 9 only: 18 = 3*6 = 2*9
    assert s6920.count_factorizations_subset({1, 2}, 18) == 2
    assert s6920.count_factorizations_subset({3}, 40) == 1
    assert s6920.count_factorizations_subset({3}, 41) == 0
    assert s6920.count_factorizations_subset({1}, -6) == 0
    with pytest.raises(EmptySubset):
        s6920.count_factorizations_subset(set(), 10)
    with pytest.raises(EmptySubset):
        s6920.count_factorizations_subset({0, 1}, 10)
    with pytest.raises(EmptySubset):
        s6920.count_factorizations_subset({4}, 10)


def test_tuples_up_to_matches_per_value(s6920):
    groups = s6920.factorization_tuples_up_to(120)
    for n in range(121):
        expected = [f.coords for f in s6920.factorizations(n)]
        assert groups.get(n, []) == expected


def test_constructor_validation():
    with pytest.raises(EmptyInput):
        new_semigroup([])
    with pytest.raises(EmptyInput):
        new_semigroup([0, 3])
    with pytest.raises(NonMinimalGenerators) as exc:
        new_semigroup((4, 6, 10))  # 10 = 4 + 6
    assert exc.value.generator == 10
    # duplicates collapse rather than tripping minimality
    assert new_semigroup((6, 9, 6, 20)).generators == (6, 9, 20)


def test_non_coprime_generators():
    S = new_semigroup((4, 6))
    assert S.c == 2
    assert not S.contains(2)
    assert S.contains(10)
    assert all(not S.contains(n) for n in range(201) if n % 2)


def test_semigroup_identity_and_repr(s6920):
    assert s6920 == new_semigroup((6, 9, 20))
    assert hash(s6920) == hash(new_semigroup((6, 9, 20)))
    assert s6920 != new_semigroup((3, 5, 7))
    assert "6, 9, 20" in repr(s6920)


def test_factorization_support():
    f = Factorization((1, 0, 3), 66)
    assert f.support == frozenset({1, 3})
    assert f.support_mask == 0b101


def test_direct_trade_golden(s6920):
    t = direct_trade(
        s6920, Factorization((3, 0, 0), 18), Factorization((0, 2, 0), 18)
    )
    assert t == Trade((0, 2, 0), (3, 0, 0), 18)


def test_direct_trade_removes_common_part(s6920):
    t = direct_trade(
        s6920, Factorization((1, 8, 0), 78), Factorization((3, 0, 3), 78)
    )
    assert t == Trade((0, 8, 0), (2, 0, 3), 72)


def test_direct_trade_errors(s6920):
    with pytest.raises(ValueMismatch):
        direct_trade(s6920, Factorization((3, 0, 0), 18), Factorization((4, 0, 0), 24))
    with pytest.raises(IdenticalFactorizations):
        direct_trade(s6920, Factorization((3, 0, 0), 18), Factorization((3, 0, 0), 18))


def test_trade_invariants():
    with pytest.raises(ValueError):
        Trade((3, 0, 0), (0, 2, 0), 18)  # wrong orientation
    with pytest.raises(ValueError):
        Trade((1, 2, 0), (1, 0, 1), 18)  # common part not removed


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=400))
def test_count_is_nonnegative_and_zero_off_semigroup(n):
    S = new_semigroup((6, 9, 20))
    c = S.count_factorizations(n)
    assert c >= 0
    assert (c > 0) == S.contains(n)
