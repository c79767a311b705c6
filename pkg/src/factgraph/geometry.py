"""Hypercube face lattices, signed covectors, and the cubical-complex view of
the disjoint-support posets.

Everything is combinatorial: faces are 0/1/free patterns, the zonotope is
handled purely through sign vectors, and no floating-point coordinates enter
any verification (the OFF export embeds vertices only for external viewers).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import ArityCapExceeded, ArityTooSmall, InvalidIndices
from .poset import BOTTOM, PosetDS, SupportPair, disjoint_support_poset

DEFAULT_ARITY_CAP = 8

FREE = 2  # pattern marker for a free coordinate


@dataclass(frozen=True)
class SignVector:
    """A sign pattern in {-1, 0, +1}^k."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if any(e not in (-1, 0, 1) for e in self.entries):
            raise ValueError("entries must be -1, 0 or +1")

    @property
    def neg_mask(self) -> int:
        return sum(1 << i for i, e in enumerate(self.entries) if e < 0)

    @property
    def pos_mask(self) -> int:
        return sum(1 << i for i, e in enumerate(self.entries) if e > 0)

    def refines(self, other: "SignVector") -> bool:
        """other is obtained from self by zeroing entries: other_i in {0, self_i}."""
        return (
            other.neg_mask & ~self.neg_mask == 0
            and other.pos_mask & ~self.pos_mask == 0
        )


@dataclass(frozen=True)
class CubeFace:
    """A face of the d-cube: 0 pins a coordinate to 0, 1 to 1, FREE leaves it free."""

    pattern: tuple[int, ...]

    @property
    def dim(self) -> int:
        return sum(1 for p in self.pattern if p == FREE)

    def contains(self, other: "CubeFace") -> bool:
        return all(p == FREE or p == q for p, q in zip(self.pattern, other.pattern))


@dataclass(frozen=True)
class CubeFaceLattice:
    """All 3^d nonempty faces of the d-cube plus the empty face, by containment."""

    d: int
    faces: tuple[CubeFace, ...]

    def leq(self, a: "CubeFace | None", b: "CubeFace | None") -> bool:
        """a <= b in the face lattice; None is the empty face below everything."""
        if a is None:
            return True
        if b is None:
            return False
        return b.contains(a)


def cube_face_lattice(d: int) -> CubeFaceLattice:
    if d < 0:
        raise ValueError("cube dimension must be non-negative")
    faces = tuple(CubeFace(p) for p in product((0, 1, FREE), repeat=d))
    return CubeFaceLattice(d, faces)


# -- Principal ideals are cube face lattices -------------------------------


@dataclass(frozen=True)
class IdealCubeWitness:
    k: int
    m: int
    n: int
    ordered_size: int
    bijective: bool
    order_preserving: bool
    unordered_matches: bool

    @property
    def ok(self) -> bool:
        return self.bijective and self.order_preserving and self.unordered_matches


def principal_ideal_cube_iso(k: int, m: int, n: int) -> IdealCubeWitness:
    """Verify that the principal ideal below ({m}, {n}) in the ordered poset is
    isomorphic to the face lattice of the (k-2)-cube, and that the unordered
    ideal below {m, n} matches it one-to-one.

    Coordinates are relabeled along the increasing bijection [k] minus
    {m, n} -> [k-2].
    """
    if k < 2:
        raise ArityTooSmall("need k >= 2")
    if m == n or not (1 <= m <= k) or not (1 <= n <= k):
        raise InvalidIndices(f"m, n must be distinct elements of 1..{k}")
    others = sorted(set(range(1, k + 1)) - {m, n})
    slot = {x: i for i, x in enumerate(others)}

    # ordered ideal: (I, J) with m in I, n in J
    ideal = [
        (I, J)
        for I, J in _ordered_pairs(k)
        if m in I and n in J
    ]

    def to_face(I: frozenset[int], J: frozenset[int]) -> CubeFace:
        pattern = [FREE] * (k - 2)
        for x in I - {m}:
            pattern[slot[x]] = 0
        for x in J - {n}:
            pattern[slot[x]] = 1
        return CubeFace(tuple(pattern))

    lattice = cube_face_lattice(k - 2)
    images = {pair: to_face(*pair) for pair in ideal}
    bijective = len(set(images.values())) == len(ideal) == len(lattice.faces)

    def pair_leq(a, b) -> bool:
        return b[0] <= a[0] and b[1] <= a[1]

    order_ok = all(
        pair_leq(a, b) == images[b].contains(images[a])
        for a in ideal
        for b in ideal
    )

    # the unordered ideal below {m, n} picks up each ordered element exactly once
    unordered = {
        (frozenset(p.I), frozenset(p.J))
        for p in disjoint_support_poset(k).elements
        if _unordered_leq_sets(p.I, p.J, frozenset({m}), frozenset({n}))
    }
    oriented = {(I, J) if m in I else (J, I) for I, J in unordered}
    unordered_ok = oriented == set(ideal) and len(unordered) == len(ideal)

    return IdealCubeWitness(
        k, m, n, len(ideal), bijective, order_ok, unordered_ok
    )


def _ordered_pairs(k: int):
    for p in disjoint_support_poset(k, ordered=True).elements:
        yield frozenset(p.I), frozenset(p.J)


def _unordered_leq_sets(R, T, I, J) -> bool:
    return (I <= R and J <= T) or (I <= T and J <= R)


# -- signed covectors of V = (I_{k-1} | 1) ---------------------------------


def covector_feasible(u: tuple[int, ...]) -> bool:
    """Feasibility oracle: is u the sign vector of (c_1, ..., c_{k-1}, sum c_i)
    for some real c?

    The first k-1 signs force the c_i; the last entry must be an achievable
    sign of their sum given which of them are forced positive or negative.
    """
    head, last = u[:-1], u[-1]
    has_pos = any(e > 0 for e in head)
    has_neg = any(e < 0 for e in head)
    if has_pos and has_neg:
        achievable = (-1, 0, 1)
    elif has_pos:
        achievable = (1,)
    elif has_neg:
        achievable = (-1,)
    else:
        achievable = (0,)
    return last in achievable


def _covector_characterized(u: tuple[int, ...]) -> bool:
    """The proof's two covector types, plus the zero vector."""
    if not any(u):
        return True
    head, last = u[:-1], u[-1]
    if last == 0:
        return any(e > 0 for e in head) and any(e < 0 for e in head)
    return any(e == last for e in head)


def signed_covectors(k: int, use_oracle: bool = False) -> frozenset[SignVector]:
    """All signed covectors of the configuration (I_{k-1} | 1) in R^(k-1)."""
    if k < 2:
        raise ArityTooSmall("need k >= 2")
    test = covector_feasible if use_oracle else _covector_characterized
    return frozenset(
        SignVector(u) for u in product((-1, 0, 1), repeat=k) if test(u)
    )


# -- the zonotope isomorphism ----------------------------------------------


def _pair_to_covector(p: SupportPair) -> SignVector:
    """The proof's case split: adjust by the index k when it lies in R or T."""
    k = p.k
    kbit = 1 << (k - 1)
    neg, pos = p.i_mask, p.j_mask
    if neg & kbit:
        neg, pos = neg & ~kbit, pos | kbit
    elif pos & kbit:
        neg, pos = neg | kbit, pos & ~kbit
    entries = tuple(
        -1 if neg >> i & 1 else (1 if pos >> i & 1 else 0) for i in range(k)
    )
    return SignVector(entries)


def _covector_to_pair(v: SignVector, k: int) -> SupportPair:
    kbit = 1 << (k - 1)
    neg, pos = v.neg_mask, v.pos_mask
    last = v.entries[k - 1]
    if last > 0:
        neg, pos = neg | kbit, pos & ~kbit
    elif last < 0:
        neg, pos = neg & ~kbit, pos | kbit
    return SupportPair(neg, pos, k, ordered=True)


@dataclass(frozen=True)
class ZonotopeIsoReport:
    k: int
    face_counts: dict[int, int]  # dimension -> number of faces
    euler: int
    bijective: bool
    inverse_ok: bool
    order_ok: bool
    covectors_match_oracle: bool

    @property
    def ok(self) -> bool:
        return (
            self.bijective
            and self.inverse_ok
            and self.order_ok
            and self.covectors_match_oracle
            and self.euler == 1 + (-1) ** self.k
        )


def zonotope_iso(k: int) -> ZonotopeIsoReport:
    """Verify the ordered poset is the face lattice of the zonotope boundary.

    Checks: the case-split map is a bijection onto the nonzero covectors, its
    explicit inverse composes to the identity, order is preserved in both
    directions under sign-vector refinement, and the characterization-based
    covector set equals the feasibility-oracle set.
    """
    P = disjoint_support_poset(k, ordered=True)
    covs = signed_covectors(k)
    oracle_covs = signed_covectors(k, use_oracle=True)
    nonzero = {c for c in covs if any(c.entries)}

    images = [_pair_to_covector(p) for p in P.elements]
    bijective = len(set(images)) == len(images) and set(images) == nonzero
    inverse_ok = all(
        _covector_to_pair(v, k) == p for p, v in zip(P.elements, images)
    )

    # order preservation both ways, via mask containment (vectorized)
    im = np.array([p.i_mask for p in P.elements], dtype=np.int64)
    jm = np.array([p.j_mask for p in P.elements], dtype=np.int64)
    neg = np.array([v.neg_mask for v in images], dtype=np.int64)
    pos = np.array([v.pos_mask for v in images], dtype=np.int64)
    # a <= b in P_k  iff  I_b <= I_a and J_b <= J_a
    poset_leq = ((im[None, :] & ~im[:, None]) == 0) & (
        (jm[None, :] & ~jm[:, None]) == 0
    )
    # face(f(a)) <= face(f(b))  iff  f(b) zeroes out entries of f(a)
    cov_leq = ((neg[None, :] & ~neg[:, None]) == 0) & (
        (pos[None, :] & ~pos[:, None]) == 0
    )
    order_ok = bool((poset_leq == cov_leq).all())

    face_counts: dict[int, int] = {}
    for p in P.elements:
        face_counts[p.height] = face_counts.get(p.height, 0) + 1
    euler = sum((-1) ** d * c for d, c in face_counts.items())

    return ZonotopeIsoReport(
        k,
        face_counts,
        euler,
        bijective,
        inverse_ok,
        order_ok,
        covs == oracle_covs,
    )


# -- the cubical complex of the unordered poset ----------------------------


@dataclass(frozen=True)
class ProjectiveComplexReport:
    k: int
    cell_counts: dict[int, int]  # dimension -> number of cells
    euler: int
    expected_euler: int
    covering_two_to_one: bool
    closed_under_intersection: bool | None  # ordered cover; None when skipped (k > 6)
    quotient_identifications: int  # unordered cell pairs whose meet is not principal

    @property
    def ok(self) -> bool:
        return (
            self.euler == self.expected_euler
            and self.covering_two_to_one
            and self.closed_under_intersection is not False
        )


def projective_complex_check(
    k: int, arity_cap: int = DEFAULT_ARITY_CAP
) -> ProjectiveComplexReport:
    """Combinatorial surrogate for the real-projective-space identification.

    Verifies the covering degree of the ordered-over-unordered map, the cell
    counts and Euler characteristic, and (for k <= 6, exhaustively) that in
    the ordered cover the intersection of any two principal ideals is again
    principal. Closure under intersection cannot hold in the unordered
    quotient: antipodal identification lets two cells meet in a pair of
    opposite faces (in arity 4, the squares {1,2} and {3,4} share two
    vertices), which is precisely how a sphere quotients to projective
    space. The count of such non-principal meets is reported.
    """
    if k < 2:
        raise ArityTooSmall("need k >= 2")
    if k > arity_cap:
        raise ArityCapExceeded(f"k = {k} exceeds the arity cap {arity_cap}")
    unordered = disjoint_support_poset(k)
    ordered = disjoint_support_poset(k, ordered=True)

    cell_counts: dict[int, int] = {}
    for p in unordered.elements:
        cell_counts[p.height] = cell_counts.get(p.height, 0) + 1
    euler = sum((-1) ** d * c for d, c in cell_counts.items())
    expected = (1 + (-1) ** k) // 2  # Euler characteristic of RP^(k-2)

    # every unordered pair has exactly the two orientations above it
    fibers: dict[tuple[int, int], int] = {}
    for p in ordered.elements:
        key = (min(p.i_mask, p.j_mask), max(p.i_mask, p.j_mask))
        fibers[key] = fibers.get(key, 0) + 1
    two_to_one = (
        len(fibers) == len(unordered.elements)
        and all(v == 2 for v in fibers.values())
    )

    closed: bool | None = None
    identifications = 0
    if k <= 6:

        def meets_principal(poset: PosetDS) -> int:
            down = {
                p: frozenset(q for q in poset.elements if poset.leq(q, p))
                for p in poset.elements
            }
            bad = 0
            for a in poset.elements:
                for b in poset.elements:
                    if b.i_mask < a.i_mask or (
                        b.i_mask == a.i_mask and b.j_mask < a.j_mask
                    ):
                        continue
                    meet = down[a] & down[b]
                    if not meet:
                        continue  # the ideals share only the bottom cell
                    top = max(meet, key=lambda p: p.height)
                    if not all(poset.leq(q, top) for q in meet):
                        bad += 1
            return bad

        closed = meets_principal(ordered) == 0
        identifications = meets_principal(unordered)

    return ProjectiveComplexReport(
        k, cell_counts, euler, expected, two_to_one, closed, identifications
    )


# -- export ----------------------------------------------------------------


def complex_to_json(k: int) -> dict:
    """Cells of the unordered complex grouped by dimension, with boundary lists."""
    P = disjoint_support_poset(k)
    index = {p: i for i, p in enumerate(P.elements)}
    by_dim: dict[int, list[dict]] = {}
    for p in P.elements:
        # the boundary of the cell p consists of the cells strictly below it
        boundary = sorted(index[q] for q in P.elements if q != p and P.leq(q, p))
        by_dim.setdefault(p.height, []).append(
            {"cell": index[p], "pair": [p.i_mask, p.j_mask], "boundary": boundary}
        )
    return {
        "k": k,
        "cells_by_dimension": {str(d): by_dim[d] for d in sorted(by_dim)},
    }


def complex_to_off(k: int = 4) -> str:
    """OFF-style export of the k=4 complex (7 vertices, 12 edges, 6 squares).

    Vertex coordinates are a symmetric but necessarily non-embedding sketch
    (RP^2 has no embedding in R^3); intended for external viewers only.
    """
    if k != 4:
        raise ValueError("OFF export is provided for the k = 4 complex only")
    P = disjoint_support_poset(k)
    verts = [p for p in P.elements if p.height == 0]
    squares = [p for p in P.elements if p.height == 2]
    vindex = {p: i for i, p in enumerate(verts)}

    def coords(p: SupportPair) -> tuple[float, float, float]:
        signs = [1.0 if p.i_mask >> i & 1 else -1.0 for i in range(k)]
        # project the +-1 vector (mod global negation) to three coordinates
        if signs[0] < 0:
            signs = [-s for s in signs]
        return (signs[1], signs[2], signs[3])

    lines = ["OFF", f"{len(verts)} {len(squares)} 12"]
    for p in verts:
        x, y, z = coords(p)
        lines.append(f"{x:.1f} {y:.1f} {z:.1f}")
    for sq in squares:
        corners = [v for v in verts if P.leq(v, sq)]
        ring = _order_square(corners, P)
        lines.append("4 " + " ".join(str(vindex[v]) for v in ring))
    return "\n".join(lines) + "\n"


def _order_square(corners, P: PosetDS):
    """Order the 4 corners of a square cell along its boundary edges."""
    edges = [
        p
        for p in P.elements
        if p.height == 1 and sum(1 for v in corners if P.leq(v, p)) == 2
    ]
    adj = {v: [] for v in corners}
    for e in edges:
        vs = [v for v in corners if P.leq(v, e)]
        if len(vs) == 2:
            adj[vs[0]].append(vs[1])
            adj[vs[1]].append(vs[0])
    ring = [corners[0]]
    prev = None
    while len(ring) < 4:
        nxt = [v for v in adj[ring[-1]] if v is not prev and v != prev]
        prev = ring[-1]
        ring.append(nxt[0])
    return ring
