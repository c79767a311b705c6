"""One-shot verification of the package's headline claims.

Each criterion function returns (passed, detail); run_all drives them in
order. The CLI's verify-claims subcommand and the acceptance test module
both dispatch here so a single implementation defines pass/fail.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from . import geometry, graphs, poset, quasipoly
from .core import NumericalSemigroup, new_semigroup
from .errors import FitFailure

#: Semigroups exercised by the formula/oracle scans (embedding dimension 2-4).
BUNDLED_GENERATORS = (
    (6, 9, 20),
    (8, 11, 12),
    (6, 10, 15),
    (3, 5, 7),
    (4, 6),
    (5, 7, 9, 11),
)

SCAN_BOUND = 400

_semigroups: dict[tuple[int, ...], NumericalSemigroup] = {}


def _sg(gens: tuple[int, ...]) -> NumericalSemigroup:
    if gens not in _semigroups:
        _semigroups[gens] = new_semigroup(gens)
    return _semigroups[gens]


def criterion_golden_examples() -> tuple[bool, str]:
    """Factorization sets, Betti data, and trade-graph edge counts from the
    worked examples."""
    problems = []
    S = _sg((6, 9, 20))
    z18 = {f.coords for f in S.factorizations(18)}
    if z18 != {(3, 0, 0), (0, 2, 0)}:
        problems.append(f"Z(18) = {z18}")
    if len(graphs.support_graph(_sg((8, 11, 12)), 44).edges) != 1:
        problems.append("support graph of 44 over (8,11,12) is not a single edge")
    if graphs.betti_elements(S) != (18, 60):
        problems.append(f"Betti(6,9,20) = {graphs.betti_elements(S)}")
    S2 = _sg((6, 10, 15))
    if graphs.betti_elements(S2) != (30,):
        problems.append(f"Betti(6,10,15) = {graphs.betti_elements(S2)}")
    if len(graphs.minimal_presentation(S2)) != 2:
        problems.append("minimal presentation of (6,10,15) does not have 2 trades")
    rho = graphs.minimal_presentation(S)
    if len(rho) != 2:
        problems.append("minimal presentation of (6,9,20) does not have 2 trades")
    if len(graphs.trade_graph(S, rho, 78).edges) != 7:
        problems.append("trade graph at 78 under the minimal presentation != 7 edges")
    rho_big, _ = graphs.normalize_presentation(
        S,
        [
            ((3, 0, 0), (0, 2, 0)),
            ((4, 4, 0), (0, 0, 3)),
            ((7, 2, 0), (0, 0, 3)),
        ],
    )
    if len(graphs.trade_graph(S, rho_big, 78).edges) != 9:
        problems.append("trade graph at 78 under the 3-trade presentation != 9 edges")
    if problems:
        return False, "; ".join(problems)
    return True, "all worked examples reproduced exactly"


def criterion_formula_oracle_scans() -> tuple[bool, str]:
    """Closed-form edge counts equal brute force for all n <= 400 on the
    bundled semigroups, for both graph families."""
    for gens in BUNDLED_GENERATORS:
        S = _sg(gens)
        bad = graphs.scan_support(S, SCAN_BOUND)
        if bad:
            return False, f"support mismatch on {gens} at {bad[:3]}"
        rho = graphs.minimal_presentation(S)
        bad = graphs.scan_trade(S, rho, SCAN_BOUND)
        if bad:
            return False, f"trade mismatch on {gens} at {bad[:3]}"
    return True, (
        f"support and trade formulas match brute force on "
        f"{len(BUNDLED_GENERATORS)} semigroups for all n <= {SCAN_BOUND}"
    )


def _fit_fails(oracle: Callable, period: int, degree: int, start: int) -> bool:
    try:
        quasipoly.fit(oracle, period, degree, start)
        return False
    except FitFailure:
        return True


def criterion_denumerant_quasipolynomial() -> tuple[bool, str]:
    """Denumerant fits: degree 2 with leading 1/2160 for (6,9,20); degree 1
    fails. For (4,6): leading 1/12 on even residues, identically 0 on odd."""
    S = _sg((6, 9, 20))
    q = quasipoly.fit(S.count_factorizations, 180, 2, 181)
    if q.degree != 2:
        return False, f"fitted degree {q.degree} != 2"
    bad = [r for r in range(180) if q.leading(r) != Fraction(1, 2160)]
    if bad:
        return False, f"leading coefficient wrong on residues {bad[:5]}"
    if not _fit_fails(S.count_factorizations, 180, 1, 181):
        return False, "degree-1 fit unexpectedly succeeds for (6,9,20)"
    T = _sg((4, 6))
    qt = quasipoly.fit(T.count_factorizations, 12, 1, 24)
    for r in range(12):
        if r % 2 == 0 and qt.leading(r) != Fraction(1, 12):
            return False, f"(4,6) leading on even residue {r} is {qt.leading(r)}"
        if r % 2 == 1 and not qt.is_zero_on(r):
            return False, f"(4,6) not identically zero on odd residue {r}"
    return True, "denumerant degree/leading-coefficient claims hold"


def criterion_support_edge_quasipolynomial() -> tuple[bool, str]:
    """Support-graph edge counts for (6,9,20) fit exactly at degree 4 with
    leading 1/9331200; degree 3 fails."""
    S = _sg((6, 9, 20))
    oracle = lambda n: graphs.edge_count_support_closed(S, n)
    q = quasipoly.fit(oracle, 180, 4, 181)
    if q.degree != 4:
        return False, f"fitted degree {q.degree} != 4"
    bad = [r for r in range(180) if q.leading(r) != Fraction(1, 9331200)]
    if bad:
        return False, f"leading coefficient wrong on residues {bad[:5]}"
    if not _fit_fails(oracle, 180, 3, 181):
        return False, "degree-3 fit unexpectedly succeeds"
    return True, "support-edge degree 4 and leading coefficient 1/9331200 verified"


def criterion_trade_edge_quasipolynomial() -> tuple[bool, str]:
    """Trade-graph edge counts fit at degree k-1 with leading 1/1080 for
    (6,9,20) and 1/900 for (6,10,15), both with 2-trade presentations."""
    for gens, period, expected in (
        ((6, 9, 20), 180, Fraction(1, 1080)),
        ((6, 10, 15), 30, Fraction(1, 900)),
    ):
        S = _sg(gens)
        rho = graphs.minimal_presentation(S)
        if len(rho) != 2:
            return False, f"minimal presentation of {gens} has {len(rho)} trades"
        start = quasipoly.default_fit_start(S, rho)
        oracle = lambda n: graphs.edge_count_trade_closed(S, rho, n)
        q = quasipoly.fit(oracle, period, S.k - 1, start)
        if q.degree != S.k - 1:
            return False, f"{gens}: fitted degree {q.degree} != {S.k - 1}"
        bad = [r for r in range(period) if q.leading(r) != expected]
        if bad:
            return False, f"{gens}: leading != {expected} on residues {bad[:5]}"
        if expected != quasipoly.predicted_leading_coefficient(S, "trade-edges", 2):
            return False, f"{gens}: predicted leading coefficient disagrees"
    return True, "trade-edge leading coefficients 1/1080 and 1/900 verified"


def criterion_mobius() -> tuple[bool, str]:
    """Closed-form Moebius values match the recursion for k <= 7; the six
    arity-3 values are reproduced; dual inversion holds for random functions."""
    for k in range(2, 8):
        P = poset.disjoint_support_poset(k)
        for e in P.elements:
            if poset.mobius_recursive(P, poset.BOTTOM, e) != poset.mobius_closed_form(
                k, e
            ):
                return False, f"mismatch at k={k}, element {e}"
    P3 = poset.disjoint_support_poset(3)
    values = {
        frozenset({p.I, p.J}): poset.mobius_recursive(P3, poset.BOTTOM, p)
        for p in P3.elements
    }
    fig = {
        frozenset({frozenset({1, 2}), frozenset({3})}): -1,
        frozenset({frozenset({1, 3}), frozenset({2})}): -1,
        frozenset({frozenset({2, 3}), frozenset({1})}): -1,
        frozenset({frozenset({1}), frozenset({2})}): 1,
        frozenset({frozenset({1}), frozenset({3})}): 1,
        frozenset({frozenset({2}), frozenset({3})}): 1,
    }
    if values != fig:
        return False, "arity-3 Moebius values disagree with the six known values"
    rng = random.Random(20260826)
    for k in range(3, 6):
        P = poset.disjoint_support_poset(k)
        for _ in range(100):
            f = {x: rng.randint(-50, 50) for x in P.all_elements()}
            if not poset.verify_dual_mobius_inversion(P, f):
                return False, f"dual inversion failed on a random function, k={k}"
    return True, "Moebius closed form and dual inversion verified (k <= 7)"


def criterion_geometry() -> tuple[bool, str]:
    """Covector characterization, zonotope face-lattice isomorphism,
    cube-ideal isomorphisms, and the projective-complex surrogates, k <= 8."""
    for k in range(2, 9):
        z = geometry.zonotope_iso(k)
        if not z.ok:
            return False, f"zonotope isomorphism check failed at k={k}"
        r = geometry.projective_complex_check(k)
        if not r.ok:
            return False, f"projective complex check failed at k={k}"
        pairs = [(1, 2), (1, k), (k - 1, k)] if k > 2 else [(1, 2)]
        for m, n in pairs:
            w = geometry.principal_ideal_cube_iso(k, m, n)
            if not w.ok or w.ordered_size != 3 ** (k - 2):
                return False, f"cube ideal isomorphism failed at k={k}, ({m},{n})"
    z4 = geometry.zonotope_iso(4)
    if (z4.face_counts[0], z4.face_counts[1], z4.face_counts[2]) != (14, 24, 12):
        return False, f"arity-4 zonotope face counts {z4.face_counts}"
    r4 = geometry.projective_complex_check(4)
    if (r4.cell_counts[0], r4.cell_counts[1], r4.cell_counts[2]) != (7, 12, 6):
        return False, f"arity-4 cell counts {r4.cell_counts}"
    if r4.euler != 1 or z4.euler != 2:
        return False, "arity-4 Euler characteristics wrong"
    return True, "zonotope and projective-complex checks pass for k <= 8"


def criterion_properties() -> tuple[bool, str]:
    """Edge-reconstruction bijection on sampled elements; single-trade
    subsets of the (6,9,20) presentation fail with the right witnesses."""
    for gens in BUNDLED_GENERATORS:
        S = _sg(gens)
        rho = graphs.minimal_presentation(S)
        step = max(S.c, 1)
        for n in range(0, 201, step):
            if not S.contains(n):
                continue
            if not graphs.verify_edge_reconstruction(S, rho, n):
                return False, f"edge reconstruction failed on {gens} at n={n}"
    S = _sg((6, 9, 20))
    rho = graphs.minimal_presentation(S)
    bound = graphs.betti_scan_bound(S)
    for drop in range(len(rho)):
        sub = graphs.Presentation(
            tuple(t for i, t in enumerate(rho.trades) if i != drop)
        )
        failures = graphs.presentation_failures(S, sub, bound)
        if not failures or failures[0] not in (18, 60):
            return False, f"single-trade subset failed with witnesses {failures[:3]}"
        if graphs.is_presentation(S, sub, bound):
            return False, "single-trade subset accepted as a presentation"
    if not graphs.is_presentation(S, rho, bound):
        return False, "the minimal presentation itself was rejected"
    return True, "edge-reconstruction bijection and presentation rejection verified"


CRITERIA: tuple[tuple[str, Callable[[], tuple[bool, str]]], ...] = (
    ("golden examples", criterion_golden_examples),
    ("formula/oracle scans", criterion_formula_oracle_scans),
    ("denumerant quasipolynomial", criterion_denumerant_quasipolynomial),
    ("support-edge quasipolynomial", criterion_support_edge_quasipolynomial),
    ("trade-edge quasipolynomial", criterion_trade_edge_quasipolynomial),
    ("Moebius values and inversion", criterion_mobius),
    ("zonotope and cubical complex", criterion_geometry),
    ("property suite", criterion_properties),
)


def run_all() -> list[tuple[str, bool, str]]:
    return [(name, *fn()) for name, fn in CRITERIA]
