import pytest

from factgraph.core import Trade, new_semigroup
from factgraph.errors import BoundTooSmall, TradeArityMismatch
from factgraph.graphs import (
    Presentation,
    betti_elements,
    betti_scan_bound,
    connected_components,
    count_support_edges_brute,
    edge_count_support_closed,
    edge_count_trade_closed,
    graph_to_dot,
    graph_to_json,
    is_presentation,
    minimal_presentation,
    normalize_presentation,
    presentation_failures,
    presentation_to_json,
    scan_support,
    scan_trade,
    support_graph,
    trade_graph,
    verify_edge_reconstruction,
)


@pytest.fixture(scope="module")
def s6920():
    return new_semigroup((6, 9, 20))


@pytest.fixture(scope="module")
def rho6920(s6920):
    return minimal_presentation(s6920)


def test_support_graph_44_single_edge():
    S = new_semigroup((8, 11, 12))
    G = support_graph(S, 44)
    assert [v.coords for v in G.vertices] == [(0, 4, 0), (1, 0, 3), (4, 0, 1)]
    assert G.edges == ((1, 2),)


def test_support_graph_disconnected_at_betti(s6920):
    G = support_graph(s6920, 18)
    assert connected_components(G) == ((0,), (1,))
    G60 = support_graph(s6920, 60)
    assert len(connected_components(G60)) == 2


def test_betti_elements(s6920):
    assert betti_elements(s6920) == (18, 60)
    assert betti_elements(new_semigroup((6, 10, 15))) == (30,)
    assert betti_elements(new_semigroup((4, 6))) == (12,)


def test_minimal_presentation_trades(s6920, rho6920):
    assert rho6920.minimal
    assert rho6920.trades == (
        Trade((0, 2, 0), (3, 0, 0), 18),
        Trade((0, 0, 3), (1, 6, 0), 60),
    )
    rho = minimal_presentation(new_semigroup((6, 10, 15)))
    assert rho.betti_values == (30, 30)


@pytest.mark.parametrize("gens", [(6, 9, 20), (4, 6), (3, 5, 7)])
def test_support_formula_matches_brute(gens):
    S = new_semigroup(gens)
    assert scan_support(S, 150) == []
    for n in (0, 1, 17, 100):
        assert edge_count_support_closed(S, n) == count_support_edges_brute(S, n)


def test_support_edge_count_trivial_cases(s6920):
    assert edge_count_support_closed(s6920, 0) == 0
    assert edge_count_support_closed(s6920, 7) == 0  # not in S
    assert edge_count_support_closed(s6920, 6) == 0  # single vertex


def test_trade_graph_golden_counts(s6920, rho6920):
    assert len(trade_graph(s6920, rho6920, 78).edges) == 7
    rho_big, _ = normalize_presentation(
        s6920,
        [
            ((3, 0, 0), (0, 2, 0)),
            ((4, 4, 0), (0, 0, 3)),
            ((7, 2, 0), (0, 0, 3)),
        ],
    )
    assert len(trade_graph(s6920, rho_big, 78).edges) == 9
    assert edge_count_trade_closed(s6920, rho_big, 78) == 9


@pytest.mark.parametrize("gens", [(6, 9, 20), (6, 10, 15), (4, 6)])
def test_trade_formula_matches_brute(gens):
    S = new_semigroup(gens)
    rho = minimal_presentation(S)
    assert scan_trade(S, rho, 150) == []


def test_trade_graph_records_edge_trades(s6920, rho6920):
    G = trade_graph(s6920, rho6920, 78)
    assert G.edge_trades is not None and len(G.edge_trades) == len(G.edges)
    assert set(G.edge_trades) <= {0, 1}


def test_trade_edges_join_trade_related_factorizations(s6920, rho6920):
    # away from the Betti values the endpoints overlap in support, but at a
    # Betti value itself a trade edge may join disjoint supports
    for n in range(0, 140):
        T = trade_graph(s6920, rho6920, n)
        for (i, j), ti in zip(T.edges, T.edge_trades):
            z, zp = T.vertices[i].coords, T.vertices[j].coords
            t = rho6920.trades[ti]
            diff = tuple(a - b for a, b in zip(z, zp))
            expect = tuple(l - r for l, r in zip(t.left, t.right))
            assert diff == expect or diff == tuple(-d for d in expect)


def test_normalize_presentation_warnings(s6920):
    rho, warnings = normalize_presentation(
        s6920,
        [
            ((3, 0, 0), (0, 2, 0)),  # reoriented
            ((0, 2, 0), (3, 0, 0)),  # duplicate after normalization
            ((1, 8, 0), (3, 0, 3)),  # reduced to direct form
        ],
    )
    assert len(rho) == 2
    assert any("reoriented" in w for w in warnings)
    assert any("duplicate" in w for w in warnings)
    assert any("direct form" in w for w in warnings)


def test_normalize_presentation_rejects_bad_trades(s6920):
    with pytest.raises(TradeArityMismatch):
        normalize_presentation(s6920, [((1, 0), (0, 1))])  # wrong arity
    with pytest.raises(TradeArityMismatch):
        normalize_presentation(s6920, [((3, 0, 0), (0, 0, 1))])  # unbalanced
    with pytest.raises(TradeArityMismatch):
        normalize_presentation(s6920, [((3, 0, 0), (3, 0, 0))])  # identical


def test_presentation_arity_checked(s6920):
    bogus = Presentation((Trade((0, 1), (2, 0), 9),))
    with pytest.raises(TradeArityMismatch):
        trade_graph(s6920, bogus, 18)


def test_is_presentation_and_failures(s6920, rho6920):
    bound = betti_scan_bound(s6920)
    assert is_presentation(s6920, rho6920, bound)
    for drop in (0, 1):
        sub = Presentation((rho6920.trades[1 - drop],))
        failures = presentation_failures(s6920, sub, bound)
        assert failures and failures[0] in (18, 60)
        assert not is_presentation(s6920, sub, bound)
    with pytest.raises(BoundTooSmall):
        is_presentation(s6920, rho6920, bound - 1)


def test_edge_reconstruction(s6920, rho6920):
    for n in range(0, 140):
        assert verify_edge_reconstruction(s6920, rho6920, n)


def test_graph_serialization(s6920, rho6920):
    G = trade_graph(s6920, rho6920, 78)
    dot = graph_to_dot(G)
    assert dot.startswith("graph") and dot.rstrip().endswith("}")
    assert dot.count("--") == len(G.edges)
    js = graph_to_json(G)
    assert js["kind"] == "trade-graph" and js["n"] == 78
    assert len(js["vertices"]) == len(G.vertices)
    assert js["edge_trades"] == list(G.edge_trades)
    sj = graph_to_json(support_graph(s6920, 78))
    assert "edge_trades" not in sj


def test_presentation_roundtrip_json(s6920, rho6920):
    payload = presentation_to_json(s6920, rho6920)
    pairs = [(tuple(t["left"]), tuple(t["right"])) for t in payload["trades"]]
    back, warnings = normalize_presentation(s6920, pairs, minimal=True)
    assert warnings == []
    assert back.trades == rho6920.trades
