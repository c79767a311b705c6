"""Support graphs and trade graphs on factorization sets.

Brute-force graph construction, closed-form edge counts (binomial plus a
signed sum over disjoint support pairs for the support graph; a shifted
denumerant sum for the trade graph), Betti elements, and minimal
presentations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _kernels
from .core import Factorization, NumericalSemigroup, Trade, direct_trade
from .errors import ArityTooSmall, BoundTooSmall, TradeArityMismatch


@dataclass(frozen=True)
class FactorizationGraph:
    """A graph on the lexicographically sorted factorizations of one element.

    ``edge_trades`` is parallel to ``edges`` for trade graphs and records the
    index of the trade that produced each edge; it is None for support graphs.
    """

    vertices: tuple[Factorization, ...]
    edges: tuple[tuple[int, int], ...]
    kind: str  # "support-graph" | "trade-graph"
    n: int
    edge_trades: tuple[int, ...] | None = None


@dataclass(frozen=True)
class Presentation:
    """A finite set of canonical trades, with its Betti value multiset."""

    trades: tuple[Trade, ...]
    minimal: bool = False

    @property
    def betti_values(self) -> tuple[int, ...]:
        return tuple(t.betti_value for t in self.trades)

    def __len__(self) -> int:
        return len(self.trades)


# -- shared helpers --------------------------------------------------------


def _require_k2(S: NumericalSemigroup) -> None:
    if S.k < 2:
        raise ArityTooSmall("graphs on factorizations need k >= 2")


def _mask(coords: Sequence[int]) -> int:
    m = 0
    for i, z in enumerate(coords):
        if z:
            m |= 1 << i
    return m


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def connected_components(G: FactorizationGraph) -> tuple[tuple[int, ...], ...]:
    """Partition of vertex indices, components ordered by least vertex."""
    uf = _UnionFind(len(G.vertices))
    for i, j in G.edges:
        uf.union(i, j)
    groups: dict[int, list[int]] = {}
    for v in range(len(G.vertices)):
        groups.setdefault(uf.find(v), []).append(v)
    return tuple(tuple(groups[r]) for r in sorted(groups))


# -- support graphs --------------------------------------------------------


def support_graph(S: NumericalSemigroup, n: int) -> FactorizationGraph:
    """The graph on Z_S(n) joining factorizations with intersecting supports."""
    _require_k2(S)
    verts = S.factorizations(n)
    masks = [v.support_mask for v in verts]
    edges = tuple(
        (i, j)
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if masks[i] & masks[j]
    )
    return FactorizationGraph(verts, edges, "support-graph", n)


def count_support_edges_brute(
    S: NumericalSemigroup, n: int, tuples: Sequence[tuple[int, ...]] | None = None
) -> int:
    """|E(support graph)| by the pairwise support check, without materializing edges."""
    _require_k2(S)
    if tuples is None:
        tuples = list(S._tuples(n))
    return _kernels.count_intersecting_pairs([_mask(t) for t in tuples])


def _disjoint_pair_terms(k: int):
    """Unordered disjoint nonempty mask pairs with their Moebius signs."""
    full = (1 << k) - 1
    out = []
    for im in range(1, full):
        rest = full & ~im
        jm = rest
        while jm:
            if im < jm:
                m = k - im.bit_count() - jm.bit_count()
                out.append((im, jm, -1 if m % 2 == 0 else 1))
            jm = (jm - 1) & rest
    return out


def _mask_indices(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def edge_count_support_closed(S: NumericalSemigroup, n: int) -> int:
    """Closed-form |E(support graph)|: C(|Z(n)|, 2) plus the signed sum of
    |Z_I(n)||Z_J(n)| over disjoint support pairs.

    Valid for n >= 1, where every factorization has nonempty support; at
    n = 0 the lone zero factorization would enter the signed sum paired
    with itself, so that case is answered directly.
    """
    _require_k2(S)
    if n == 0:
        return 0
    total = S.count_factorizations(n)
    result = total * (total - 1) // 2
    for im, jm, sign in _disjoint_pair_terms(S.k):
        a = S.count_factorizations_subset(_mask_indices(im), n)
        if not a:
            continue
        b = S.count_factorizations_subset(_mask_indices(jm), n)
        if b:
            result += sign * a * b
    return result


# -- Betti elements and minimal presentations ------------------------------


def betti_scan_bound(S: NumericalSemigroup) -> int:
    """Upper bound B such that the support graph of every n > B is connected.

    Write S' for the reduced semigroup with Frobenius number F and generators
    n'_1 < ... < n'_k. If n/c - n'_i - n'_j > F for all i != j, then for any
    two factorizations z, z' of n one can route between them in two steps:
    pick i in supp(z) and j in supp(z'); since n/c - n'_i - n'_j lies in S',
    there is a factorization containing both generators i and j, adjacent to
    both z and z'. Taking the two largest generators gives the bound
    B = c * (F + n'_{k-1} + n'_k + 1).
    """
    _require_k2(S)
    r = S.reduced_generators
    return S.c * (S.frobenius_reduced + r[-2] + r[-1] + 1)


def _support_components(tuples: Sequence[tuple[int, ...]]) -> int:
    """Number of connected components of the support graph on the given tuples.

    Works at the level of distinct support masks: vertices with intersecting
    masks are adjacent, so the component structure only depends on the masks.
    """
    masks = sorted({_mask(t) for t in tuples})
    if not masks:
        return 0
    uf = _UnionFind(len(masks))
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if masks[i] & masks[j]:
                uf.union(i, j)
    return len({uf.find(i) for i in range(len(masks))})


def betti_elements(S: NumericalSemigroup) -> tuple[int, ...]:
    """All n in S whose support graph is disconnected, in increasing order."""
    _require_k2(S)
    groups = S.factorization_tuples_up_to(betti_scan_bound(S))
    return tuple(
        n for n, tups in sorted(groups.items()) if n and _support_components(tups) > 1
    )


def minimal_presentation(S: NumericalSemigroup) -> Presentation:
    """One minimal presentation of S.

    For each Betti element, bridges the components of its support graph with
    a spanning star rooted at the component containing the lexicographically
    least factorization; component representatives are lexicographically
    least. Minimal presentations are not unique, so this is a deterministic
    tie-break, not the only valid output.
    """
    _require_k2(S)
    trades = []
    for beta in betti_elements(S):
        G = support_graph(S, beta)
        comps = connected_components(G)
        root = G.vertices[comps[0][0]]
        for comp in comps[1:]:
            trades.append(direct_trade(S, root, G.vertices[comp[0]]))
    return Presentation(tuple(trades), minimal=True)


# -- trade graphs ----------------------------------------------------------


def _check_presentation_arity(S: NumericalSemigroup, rho: Presentation) -> None:
    for t in rho.trades:
        if len(t.left) != S.k or len(t.right) != S.k:
            raise TradeArityMismatch(
                f"trade {t.left}/{t.right} has wrong coordinate length for k={S.k}"
            )
        lv = sum(z * g for z, g in zip(t.left, S.generators))
        rv = sum(z * g for z, g in zip(t.right, S.generators))
        if lv != rv or lv != t.betti_value:
            raise TradeArityMismatch(
                f"trade {t.left}/{t.right} does not balance over {S.generators}"
            )


def normalize_presentation(
    S: NumericalSemigroup,
    pairs: Iterable[tuple[Sequence[int], Sequence[int]]],
    minimal: bool = False,
) -> tuple[Presentation, list[str]]:
    """Normalize externally supplied trades: direct form, canonical orientation,
    deduplicated. Returns the presentation and a list of normalization warnings.
    """
    trades: list[Trade] = []
    warnings: list[str] = []
    for left, right in pairs:
        left, right = tuple(int(z) for z in left), tuple(int(z) for z in right)
        if len(left) != S.k or len(right) != S.k:
            raise TradeArityMismatch(
                f"trade {left}/{right} has wrong coordinate length for k={S.k}"
            )
        lv = sum(z * g for z, g in zip(left, S.generators))
        rv = sum(z * g for z, g in zip(right, S.generators))
        if lv != rv:
            raise TradeArityMismatch(
                f"trade {left}/{right} does not balance: {lv} != {rv}"
            )
        if left == right:
            raise TradeArityMismatch(f"trade {left}/{right} has identical sides")
        t = direct_trade(S, Factorization(left, lv), Factorization(right, rv))
        if (t.left, t.right) == (right, left):
            warnings.append(f"reoriented {left}/{right}")
        elif (t.left, t.right) != (left, right):
            warnings.append(f"reduced {left}/{right} to direct form {t.left}/{t.right}")
        if t in trades:
            warnings.append(f"dropped duplicate trade {t.left}/{t.right}")
        else:
            trades.append(t)
    return Presentation(tuple(trades), minimal=minimal), warnings


def trade_graph(
    S: NumericalSemigroup, rho: Presentation, n: int
) -> FactorizationGraph:
    """The graph on Z_S(n) joining pairs whose direct trade lies in rho."""
    _check_presentation_arity(S, rho)
    verts = S.factorizations(n)
    index = {v.coords: i for i, v in enumerate(verts)}
    found: dict[tuple[int, int], int] = {}
    for ti, t in enumerate(rho.trades):
        # an edge {z, z'} with direct trade (left, right) satisfies
        # z' = z - left + right for the endpoint z containing left
        for z, i in index.items():
            cand = tuple(a - l + r for a, l, r in zip(z, t.left, t.right))
            if any(v < 0 for v in cand):
                continue
            j = index.get(cand)
            if j is not None and i != j:
                found.setdefault((min(i, j), max(i, j)), ti)
    edges = tuple(sorted(found))
    return FactorizationGraph(
        verts, edges, "trade-graph", n, tuple(found[e] for e in edges)
    )


def edge_count_trade_closed(
    S: NumericalSemigroup, rho: Presentation, n: int
) -> int:
    """Closed-form |E(trade graph)|: sum of |Z(n - beta_i)| over the trades."""
    _check_presentation_arity(S, rho)
    return sum(S.count_factorizations(n - t.betti_value) for t in rho.trades)


def _trade_edges_on_tuples(
    tuples: Sequence[tuple[int, ...]], rho: Presentation
) -> set[tuple[int, int]]:
    index = {t: i for i, t in enumerate(tuples)}
    edges: set[tuple[int, int]] = set()
    for t in rho.trades:
        for z, i in index.items():
            cand = tuple(a - l + r for a, l, r in zip(z, t.left, t.right))
            if any(v < 0 for v in cand):
                continue
            j = index.get(cand)
            if j is not None and i != j:
                edges.add((min(i, j), max(i, j)))
    return edges


def presentation_failures(
    S: NumericalSemigroup, rho: Presentation, scan_bound: int
) -> list[int]:
    """Elements n <= scan_bound whose trade graph under rho is disconnected."""
    _check_presentation_arity(S, rho)
    groups = S.factorization_tuples_up_to(scan_bound)
    failures = []
    for n in sorted(groups):
        tuples = groups[n]
        if len(tuples) < 2:
            continue
        uf = _UnionFind(len(tuples))
        for i, j in _trade_edges_on_tuples(tuples, rho):
            uf.union(i, j)
        if len({uf.find(i) for i in range(len(tuples))}) > 1:
            failures.append(n)
    return failures


def is_presentation(
    S: NumericalSemigroup, rho: Presentation, scan_bound: int
) -> bool:
    """True iff the trade graph under rho is connected for every n in S up to
    scan_bound.

    The bound must be at least :func:`betti_scan_bound`; past that bound every
    support graph is connected and the minimal trades suffice, so the scan is
    a sufficient check.
    """
    if scan_bound < betti_scan_bound(S):
        raise BoundTooSmall(
            f"scan bound {scan_bound} is below the connectivity bound "
            f"{betti_scan_bound(S)}"
        )
    return not presentation_failures(S, rho, scan_bound)


def verify_edge_reconstruction(
    S: NumericalSemigroup, rho: Presentation, n: int
) -> bool:
    """Check the edge bijection behind the trade-graph edge formula.

    Every edge {z, z'} determines a unique (trade index, gcd) pair, and the
    map (i, u) -> {u + left_i, u + right_i} over u in Z(n - beta_i) hits each
    edge exactly once.
    """
    G = trade_graph(S, rho, n)
    seen = set()
    for (i, j), ti in zip(G.edges, G.edge_trades or ()):
        z, zp = G.vertices[i].coords, G.vertices[j].coords
        u = tuple(min(a, b) for a, b in zip(z, zp))
        key = (ti, u)
        if key in seen:
            return False
        seen.add(key)
    generated = set()
    for ti, t in enumerate(rho.trades):
        for u in S._tuples(n - t.betti_value) if n >= t.betti_value else ():
            a = tuple(x + l for x, l in zip(u, t.left))
            b = tuple(x + r for x, r in zip(u, t.right))
            edge = (min(a, b), max(a, b))
            if edge in generated:
                return False
            generated.add(edge)
    actual = {
        (
            min(G.vertices[i].coords, G.vertices[j].coords),
            max(G.vertices[i].coords, G.vertices[j].coords),
        )
        for i, j in G.edges
    }
    return generated == actual


# -- scans -----------------------------------------------------------------


def scan_support(S: NumericalSemigroup, bound: int) -> list[tuple[int, int, int]]:
    """Compare closed-form and brute-force support edge counts for all
    0 <= n <= bound; returns the list of (n, formula, brute) mismatches."""
    _require_k2(S)
    groups = S.factorization_tuples_up_to(bound)
    mismatches = []
    for n in range(bound + 1):
        formula = edge_count_support_closed(S, n)
        tuples = groups.get(n, ())
        brute = _kernels.count_intersecting_pairs([_mask(t) for t in tuples])
        if formula != brute:
            mismatches.append((n, formula, brute))
    return mismatches


def scan_trade(
    S: NumericalSemigroup, rho: Presentation, bound: int
) -> list[tuple[int, int, int]]:
    """Same comparison for trade-graph edge counts under rho."""
    _check_presentation_arity(S, rho)
    groups = S.factorization_tuples_up_to(bound)
    mismatches = []
    for n in range(bound + 1):
        formula = edge_count_trade_closed(S, rho, n)
        brute = len(_trade_edges_on_tuples(groups.get(n, ()), rho))
        if formula != brute:
            mismatches.append((n, formula, brute))
    return mismatches


# -- export ----------------------------------------------------------------

_DOT_COLORS = ("green", "blue", "red", "orange", "purple", "brown", "cyan")


def graph_to_dot(G: FactorizationGraph) -> str:
    """DOT text: coordinate-tuple labels; trade edges colored per trade index."""
    lines = ["graph factorizations {"]
    for i, v in enumerate(G.vertices):
        label = "(" + ",".join(str(z) for z in v.coords) + ")"
        lines.append(f'  v{i} [label="{label}"];')
    for idx, (i, j) in enumerate(G.edges):
        if G.edge_trades is not None:
            color = _DOT_COLORS[G.edge_trades[idx] % len(_DOT_COLORS)]
            lines.append(f"  v{i} -- v{j} [color={color}];")
        else:
            lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(G: FactorizationGraph) -> dict:
    out = {
        "kind": G.kind,
        "n": G.n,
        "vertices": [list(v.coords) for v in G.vertices],
        "edges": [list(e) for e in G.edges],
    }
    if G.edge_trades is not None:
        out["edge_trades"] = list(G.edge_trades)
    return out


def presentation_to_json(S: NumericalSemigroup, rho: Presentation) -> dict:
    return {
        "generators": list(S.generators),
        "trades": [{"left": list(t.left), "right": list(t.right)} for t in rho.trades],
    }
