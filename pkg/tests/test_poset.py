import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from factgraph.errors import (
    ArityCapExceeded,
    ArityTooSmall,
    Incomparable,
    InvalidPair,
)
from factgraph.poset import (
    BOTTOM,
    SupportPair,
    disjoint_support_poset,
    mobius_closed_form,
    mobius_recursive,
    pair_count,
    verify_dual_mobius_inversion,
)


@pytest.mark.parametrize("k", range(2, 8))
def test_element_counts(k):
    P = disjoint_support_poset(k)
    assert len(P.elements) == pair_count(k)
    # the ordered poset is the 2-to-1 cover
    assert len(disjoint_support_poset(k, ordered=True).elements) == 2 * pair_count(k)


def test_pair_count_small_values():
    assert [pair_count(k) for k in range(2, 6)] == [1, 6, 25, 90]


def test_support_pair_validation():
    with pytest.raises(InvalidPair):
        SupportPair(0b01, 0b01, 3)  # not disjoint
    with pytest.raises(InvalidPair):
        SupportPair(0, 0b01, 3)  # empty side
    with pytest.raises(InvalidPair):
        SupportPair(0b111, 0b000, 3)  # empty side / improper
    with pytest.raises(InvalidPair):
        SupportPair(0b010, 0b001, 3)  # unordered, not canonical
    SupportPair(0b010, 0b001, 3, ordered=True)  # fine when ordered
    with pytest.raises(InvalidPair):
        SupportPair.from_sets({1, 4}, {2}, 3)  # index out of range


def test_from_sets_canonicalizes():
    p = SupportPair.from_sets({2, 3}, {1}, 4)
    assert (p.I, p.J) == (frozenset({1}), frozenset({2, 3}))
    q = SupportPair.from_sets({2, 3}, {1}, 4, ordered=True)
    assert (q.I, q.J) == (frozenset({2, 3}), frozenset({1}))
    assert p.height == 1


def test_poset_constructor_guards():
    with pytest.raises(ArityTooSmall):
        disjoint_support_poset(1)
    with pytest.raises(ArityCapExceeded):
        disjoint_support_poset(11)


def test_order_axioms_k4():
    P = disjoint_support_poset(4)
    nodes = list(P.all_elements())
    for a in nodes:
        assert P.leq(a, a)
        assert P.leq(BOTTOM, a)
    for a in P.elements:
        assert not P.leq(a, BOTTOM)
        for b in P.elements:
            if a != b:
                assert not (P.leq(a, b) and P.leq(b, a))  # antisymmetry
            for c in P.elements:
                if P.leq(a, b) and P.leq(b, c):
                    assert P.leq(a, c)  # transitivity


def test_unordered_comparison_is_up_to_swap():
    P = disjoint_support_poset(4)
    a = SupportPair.from_sets({1}, {2, 3}, 4)
    b = SupportPair.from_sets({2}, {1}, 4)  # stored as ({1}, {2})
    # {2} is inside {2,3} and {1} inside {1}, after swapping sides
    assert P.leq(a, b)


@pytest.mark.parametrize("k", range(2, 7))
def test_mobius_closed_form_matches_recursion(k):
    P = disjoint_support_poset(k)
    for e in P.elements:
        assert mobius_recursive(P, BOTTOM, e) == mobius_closed_form(k, e)
        assert mobius_recursive(P, e, e) == 1


def test_mobius_k3_known_values():
    P = disjoint_support_poset(3)
    values = {
        frozenset({p.I, p.J}): mobius_recursive(P, BOTTOM, p) for p in P.elements
    }
    assert values == {
        frozenset({frozenset({1, 2}), frozenset({3})}): -1,
        frozenset({frozenset({1, 3}), frozenset({2})}): -1,
        frozenset({frozenset({2, 3}), frozenset({1})}): -1,
        frozenset({frozenset({1}), frozenset({2})}): 1,
        frozenset({frozenset({1}), frozenset({3})}): 1,
        frozenset({frozenset({2}), frozenset({3})}): 1,
    }


def test_mobius_incomparable_raises():
    P = disjoint_support_poset(3)
    a = SupportPair.from_sets({1}, {2}, 3)
    with pytest.raises(Incomparable):
        mobius_recursive(P, a, BOTTOM)


def test_dual_inversion_fixed_functions():
    for k in (3, 4):
        P = disjoint_support_poset(k)
        assert verify_dual_mobius_inversion(P, {x: 1 for x in P.all_elements()})
        assert verify_dual_mobius_inversion(P, lambda x: 0)


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=2**31), st.integers(min_value=3, max_value=5))
def test_dual_inversion_random(seed, k):
    P = disjoint_support_poset(k)
    rng = random.Random(seed)
    f = {x: rng.randint(-100, 100) for x in P.all_elements()}
    assert verify_dual_mobius_inversion(P, f)


def test_to_json_deterministic_and_parseable():
    P = disjoint_support_poset(3)
    a, b = P.to_json(), disjoint_support_poset(3).to_json()
    assert a == b
    assert a["elements"][0] == [0, 0]  # bottom
    assert len(a["elements"]) == pair_count(3) + 1
    json.dumps(a)  # serializable
    # every cover is a valid index pair
    for lo, hi in a["covers"]:
        assert 0 <= lo < len(a["elements"])
        assert 0 <= hi < len(a["elements"])
