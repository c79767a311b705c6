"""Numerical semigroup arithmetic.

Membership via Apery-style residue tables, lexicographic factorization
enumeration, exact denumerant counting by dynamic programming, and direct
trades between factorizations.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Iterator, Sequence

from . import _kernels
from .errors import (
    EmptyInput,
    EmptySubset,
    IdenticalFactorizations,
    NonMinimalGenerators,
    ValueMismatch,
)


def _lcm(values: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b // gcd(a, b), values)


def _apery_thresholds(gens: Sequence[int]) -> tuple[int, ...]:
    """Least element of <gens> in each residue class mod gens[0].

    Dijkstra over residues mod gens[0] with the remaining generators as edge
    weights; requires gcd(gens) == 1 so every class is reachable.
    """
    base = gens[0]
    dist: list[int | None] = [None] * base
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:  # stale entry
            continue
        for g in gens[1:]:
            r2 = (r + g) % base
            nd = d + g
            if dist[r2] is None or nd < dist[r2]:
                dist[r2] = nd
                heapq.heappush(heap, (nd, r2))
    assert all(d is not None for d in dist)
    return tuple(dist)  # type: ignore[arg-type]


class _Membership:
    """Membership test for the semigroup generated by a fixed tuple."""

    __slots__ = ("c", "base", "thresholds")

    def __init__(self, gens: Sequence[int]):
        self.c = reduce(gcd, gens)
        reduced = [g // self.c for g in gens]
        self.base = reduced[0]
        self.thresholds = _apery_thresholds(reduced)

    def __contains__(self, n: int) -> bool:
        if n < 0 or n % self.c:
            return False
        m = n // self.c
        return m >= self.thresholds[m % self.base]


@dataclass(frozen=True, order=True)
class Factorization:
    """A tuple of generator multiplicities together with the element it sums to."""

    coords: tuple[int, ...]
    value: int

    @property
    def support(self) -> frozenset[int]:
        """1-based indices of the nonzero coordinates."""
        return frozenset(i + 1 for i, z in enumerate(self.coords) if z)

    @property
    def support_mask(self) -> int:
        mask = 0
        for i, z in enumerate(self.coords):
            if z:
                mask |= 1 << i
        return mask


@dataclass(frozen=True)
class Trade:
    """A pair of componentwise-coprime factorizations of the same element.

    Stored in direct form (componentwise gcd zero) with ``left`` the
    lexicographically smaller side, so a trade and its reverse normalize to
    the same object.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]
    betti_value: int

    def __post_init__(self):
        if self.left >= self.right:
            raise ValueError("trade sides must be stored in canonical order")
        if any(min(a, b) for a, b in zip(self.left, self.right)):
            raise ValueError("trade sides must have componentwise gcd zero")


def _representation(target: int, gens: Sequence[int]) -> tuple[int, ...] | None:
    """Lexicographically least non-negative representation of target, or None."""
    if target == 0:
        return (0,) * len(gens)
    if not gens:
        return None
    g = gens[0]
    for z in range(target // g + 1):
        rest = _representation(target - z * g, gens[1:])
        if rest is not None:
            return (z,) + rest
    return None


class NumericalSemigroup:
    """A numerical semigroup given by its minimal generating set.

    Immutable after construction; internal denumerant tables grow on demand
    but are never observable.
    """

    def __init__(self, generators: Iterable[int]):
        gens = sorted({int(g) for g in generators})
        if not gens:
            raise EmptyInput("at least one generator is required")
        if gens[0] <= 0:
            raise EmptyInput("generators must be positive integers")
        for idx, g in enumerate(gens):
            others = gens[:idx] + gens[idx + 1 :]
            if others:
                witness = _representation(g, others)
                if witness is not None:
                    raise NonMinimalGenerators(g, others, witness)
        self.generators: tuple[int, ...] = tuple(gens)
        self.k: int = len(gens)
        self.c: int = reduce(gcd, gens)
        self.lcm: int = _lcm(gens)
        self.reduced_generators: tuple[int, ...] = tuple(g // self.c for g in gens)
        self._membership = _Membership(self.generators)
        self.frobenius_reduced: int = (
            max(self._membership.thresholds) - self.reduced_generators[0]
        )
        # suffix membership tables drive pruning during enumeration
        self._suffixes = [_Membership(self.generators[i:]) for i in range(self.k)]
        self._tables: dict[tuple[int, ...], list[int]] = {}

    def __repr__(self) -> str:
        return f"NumericalSemigroup{self.generators}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NumericalSemigroup)
            and self.generators == other.generators
        )

    def __hash__(self) -> int:
        return hash(self.generators)

    # -- membership -------------------------------------------------------

    def contains(self, n: int) -> bool:
        return n in self._membership

    def __contains__(self, n: int) -> bool:
        return n in self._membership

    # -- counting ---------------------------------------------------------

    def _counts(self, indices: tuple[int, ...], limit: int) -> list[int]:
        table = self._tables.get(indices)
        if table is None or len(table) <= limit:
            grow = max(limit, 2 * (len(table) - 1) if table else 0, 64)
            gens = [self.generators[i] for i in indices]
            table = _kernels.denumerant_table(gens, grow)
            self._tables[indices] = table
        return table

    def count_factorizations(self, n: int) -> int:
        """|Z_S(n)|, by dynamic programming; 0 when n is not in S."""
        if n < 0:
            return 0
        return self._counts(tuple(range(self.k)), n)[n]

    def count_factorizations_subset(self, subset: Iterable[int], n: int) -> int:
        """Number of factorizations of n over the generators indexed by subset.

        ``subset`` holds 1-based generator indices; coordinates outside it are
        not part of the count.
        """
        idx = sorted({int(i) for i in subset})
        if not idx:
            raise EmptySubset("subset of generator indices must be nonempty")
        if idx[0] < 1 or idx[-1] > self.k:
            raise EmptySubset(f"indices must lie in 1..{self.k}")
        if n < 0:
            return 0
        return self._counts(tuple(i - 1 for i in idx), n)[n]

    # -- enumeration ------------------------------------------------------

    def _tuples(self, n: int) -> Iterator[tuple[int, ...]]:
        """All coordinate tuples of value n, in lexicographic order."""
        gens = self.generators
        k = self.k
        out = [0] * k

        def rec(i: int, rem: int) -> Iterator[tuple[int, ...]]:
            if i == k - 1:
                g = gens[i]
                if rem % g == 0:
                    out[i] = rem // g
                    yield tuple(out)
                return
            g = gens[i]
            suffix = self._suffixes[i + 1]
            for z in range(rem // g + 1):
                rest = rem - z * g
                if rest in suffix:
                    out[i] = z
                    yield from rec(i + 1, rest)

        if n >= 0 and n in self._membership:
            yield from rec(0, n)

    def factorizations(self, n: int) -> tuple[Factorization, ...]:
        """Z_S(n) in lexicographic order; empty when n is not in S."""
        return tuple(Factorization(t, n) for t in self._tuples(n))

    def factorization_tuples_up_to(self, bound: int) -> dict[int, list[tuple[int, ...]]]:
        """Coordinate tuples of every element up to bound, grouped by value.

        One sweep over all tuples with value <= bound; each per-value list is
        in lexicographic order. Values not in S are absent.
        """
        gens = self.generators
        k = self.k
        groups: dict[int, list[tuple[int, ...]]] = {}
        out = [0] * k

        def rec(i: int, val: int) -> None:
            if i == k:
                groups.setdefault(val, []).append(tuple(out))
                return
            g = gens[i]
            for z in range((bound - val) // g + 1):
                out[i] = z
                rec(i + 1, val + z * g)
            out[i] = 0

        if bound >= 0:
            rec(0, 0)
        return groups


def new_semigroup(generators: Iterable[int]) -> NumericalSemigroup:
    """Construct a semigroup, verifying the generators are minimal."""
    return NumericalSemigroup(generators)


def direct_trade(
    S: NumericalSemigroup, z: Factorization, zp: Factorization
) -> Trade:
    """The direct trade between two factorizations of the same element.

    Subtracts the componentwise gcd from both sides and orients the result
    canonically.
    """
    if z.value != zp.value:
        raise ValueMismatch(
            f"factorizations have different values {z.value} != {zp.value}"
        )
    if z.coords == zp.coords:
        raise IdenticalFactorizations("a trade needs two distinct factorizations")
    g = tuple(min(a, b) for a, b in zip(z.coords, zp.coords))
    left = tuple(a - m for a, m in zip(z.coords, g))
    right = tuple(b - m for b, m in zip(zp.coords, g))
    if right < left:
        left, right = right, left
    betti = z.value - sum(m * n for m, n in zip(g, S.generators))
    return Trade(left, right, betti)
