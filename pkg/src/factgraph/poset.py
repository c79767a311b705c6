"""Posets of disjoint support pairs, with recursive and closed-form Moebius values.

Subsets of [k] are k-bit masks, so disjointness and containment are single
word operations. The poset is materialized explicitly only up to a
configurable arity cap; the edge-count formula in :mod:`factgraph.graphs`
never materializes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping

from .errors import ArityCapExceeded, ArityTooSmall, Incomparable, InvalidPair

DEFAULT_ARITY_CAP = 10


class _Bottom:
    __slots__ = ()

    def __repr__(self) -> str:
        return "BOTTOM"


#: The formal minimum element adjoined below every support pair.
BOTTOM = _Bottom()


def _lowbit(mask: int) -> int:
    return mask & -mask


def _mask_of(indices: Iterable[int], k: int) -> int:
    mask = 0
    for i in indices:
        i = int(i)
        if not 1 <= i <= k:
            raise InvalidPair(f"index {i} outside 1..{k}")
        mask |= 1 << (i - 1)
    return mask


@dataclass(frozen=True)
class SupportPair:
    """A pair of disjoint, nonempty, proper subsets of [k].

    Unordered pairs are stored canonically with min(I) < min(J); ordered
    pairs keep their orientation.
    """

    i_mask: int
    j_mask: int
    k: int
    ordered: bool = False

    def __post_init__(self):
        full = (1 << self.k) - 1
        if not self.i_mask or not self.j_mask:
            raise InvalidPair("both subsets must be nonempty")
        if self.i_mask & self.j_mask:
            raise InvalidPair("subsets must be disjoint")
        if self.i_mask & ~full or self.j_mask & ~full:
            raise InvalidPair(f"subsets must lie inside [{self.k}]")
        if self.i_mask == full or self.j_mask == full:
            raise InvalidPair("subsets must be proper")
        if not self.ordered and _lowbit(self.i_mask) > _lowbit(self.j_mask):
            raise InvalidPair("unordered pair not in canonical orientation")

    @classmethod
    def from_sets(
        cls, I: Iterable[int], J: Iterable[int], k: int, ordered: bool = False
    ) -> "SupportPair":
        im, jm = _mask_of(I, k), _mask_of(J, k)
        if not ordered and im and jm and _lowbit(im) > _lowbit(jm):
            im, jm = jm, im
        return cls(im, jm, k, ordered)

    @property
    def I(self) -> frozenset[int]:
        return frozenset(i + 1 for i in range(self.k) if self.i_mask >> i & 1)

    @property
    def J(self) -> frozenset[int]:
        return frozenset(i + 1 for i in range(self.k) if self.j_mask >> i & 1)

    @property
    def height(self) -> int:
        """k - |I| - |J|; doubles as the cell dimension in the cubical complex."""
        return self.k - self.i_mask.bit_count() - self.j_mask.bit_count()

    def __repr__(self) -> str:
        fmt = lambda s: "".join(str(i) for i in sorted(s))
        pair = f"{fmt(self.I)},{fmt(self.J)}"
        return f"({pair})" if self.ordered else f"{{{pair}}}"


def _pair_leq(a: SupportPair, b: SupportPair) -> bool:
    """a <= b: b's supports are contained in a's (up to relabeling if unordered)."""
    if a.ordered:
        return b.i_mask & ~a.i_mask == 0 and b.j_mask & ~a.j_mask == 0
    return (b.i_mask & ~a.i_mask == 0 and b.j_mask & ~a.j_mask == 0) or (
        b.i_mask & ~a.j_mask == 0 and b.j_mask & ~a.i_mask == 0
    )


class PosetDS:
    """The (un)ordered poset of disjoint supports on k elements, materialized."""

    def __init__(self, k: int, ordered: bool, elements: tuple[SupportPair, ...]):
        self.k = k
        self.ordered = ordered
        self.elements = elements
        self._mu_memo: dict[tuple, int] = {}

    def __repr__(self) -> str:
        kind = "ordered" if self.ordered else "unordered"
        return f"PosetDS(k={self.k}, {kind}, {len(self.elements)} elements + bottom)"

    def all_elements(self) -> Iterator:
        yield BOTTOM
        yield from self.elements

    def leq(self, a, b) -> bool:
        if a is BOTTOM:
            return True
        if b is BOTTOM:
            return False
        return _pair_leq(a, b)

    def up_set(self, y) -> list:
        """All x with x >= y (including y itself)."""
        if y is BOTTOM:
            return list(self.all_elements())
        return [x for x in self.elements if _pair_leq(y, x)]

    def mu(self, x, y) -> int:
        """Memoized Moebius recursion over the interval [x, y)."""
        if x is y or x == y:
            return 1
        key = (x, y)
        val = self._mu_memo.get(key)
        if val is None:
            val = -sum(
                self.mu(x, z)
                for z in self.all_elements()
                if z is not y and z != y and self.leq(x, z) and self.leq(z, y)
            )
            self._mu_memo[key] = val
        return val

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs as indices into [BOTTOM] + elements."""
        nodes = list(self.all_elements())
        out = []
        for ia, a in enumerate(nodes):
            for ib, b in enumerate(nodes):
                if ia == ib or not self.leq(a, b):
                    continue
                if any(
                    ic not in (ia, ib) and self.leq(a, c) and self.leq(c, b)
                    for ic, c in enumerate(nodes)
                ):
                    continue
                out.append((ia, ib))
        return sorted(out)

    def to_json(self) -> dict:
        """JSON form: bottom is element [0, 0] at index 0."""
        elements = [[0, 0]] + [[e.i_mask, e.j_mask] for e in self.elements]
        return {
            "k": self.k,
            "ordered": self.ordered,
            "elements": elements,
            "covers": [list(c) for c in self.covers()],
        }


def disjoint_support_poset(
    k: int, ordered: bool = False, arity_cap: int = DEFAULT_ARITY_CAP
) -> PosetDS:
    """Materialize the poset of disjoint supports on k elements.

    The element count grows like 3^k, hence the cap.
    """
    if k < 2:
        raise ArityTooSmall("the poset of disjoint supports needs k >= 2")
    if k > arity_cap:
        raise ArityCapExceeded(f"k = {k} exceeds the arity cap {arity_cap}")
    full = (1 << k) - 1
    pairs = []
    for im in range(1, full):
        rest = full & ~im
        jm = rest
        while jm:
            if ordered or _lowbit(im) < _lowbit(jm):
                pairs.append(SupportPair(im, jm, k, ordered))
            jm = (jm - 1) & rest
    pairs.sort(key=lambda p: (p.i_mask, p.j_mask))
    return PosetDS(k, ordered, tuple(pairs))


def mobius_recursive(P: PosetDS, x, y) -> int:
    """mu(x, y) by the alternating-sum recursion, memoized per poset."""
    if not P.leq(x, y):
        raise Incomparable(f"{x!r} and {y!r} are not comparable")
    return P.mu(x, y)


def mobius_closed_form(k: int, pair: SupportPair) -> int:
    """(-1)^(k - |I| - |J| + 1) for a valid pair in arity k."""
    if pair.k != k:
        raise InvalidPair(f"pair has arity {pair.k}, expected {k}")
    return -1 if pair.height % 2 == 0 else 1


def verify_dual_mobius_inversion(
    P: PosetDS, f: "Mapping | Callable"
) -> bool:
    """Check f(y) == sum over x >= y of g(x) mu(y, x), where g(y) = sum over x >= y of f(x).

    Holds for every f on a finite poset; exposed as a randomized property
    harness.
    """
    fv = f.__getitem__ if isinstance(f, Mapping) else f
    nodes = list(P.all_elements())
    ups = {y: P.up_set(y) for y in nodes}
    g = {y: sum(fv(x) for x in ups[y]) for y in nodes}
    for y in nodes:
        total = sum(g[x] * P.mu(y, x) for x in ups[y])
        if total != fv(y):
            return False
    return True


def pair_count(k: int) -> int:
    """Closed-form size of the unordered poset without its bottom: (3^k - 2^(k+1) + 1) / 2."""
    return (3**k - 2 ** (k + 1) + 1) // 2
