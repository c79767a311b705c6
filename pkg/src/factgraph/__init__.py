"""Factorization graphs of numerical semigroup elements.

Exact factorization sets and denumerants, closed-form edge counts for
support and trade graphs, the disjoint-support posets with their Moebius
functions, quasipolynomial fitting, and the cubical-complex geometry of the
support poset.
"""

from ._kernels import BACKEND
from .core import (
    Factorization,
    NumericalSemigroup,
    Trade,
    direct_trade,
    new_semigroup,
)
from .graphs import (
    FactorizationGraph,
    Presentation,
    betti_elements,
    betti_scan_bound,
    connected_components,
    edge_count_support_closed,
    edge_count_trade_closed,
    is_presentation,
    minimal_presentation,
    normalize_presentation,
    support_graph,
    trade_graph,
)
from .poset import (
    BOTTOM,
    PosetDS,
    SupportPair,
    disjoint_support_poset,
    mobius_closed_form,
    mobius_recursive,
    verify_dual_mobius_inversion,
)
from .quasipoly import (
    Quasipolynomial,
    fit,
    minimal_period,
    predicted_leading_coefficient,
    verify_degree_period_claims,
)
from .geometry import (
    cube_face_lattice,
    principal_ideal_cube_iso,
    projective_complex_check,
    signed_covectors,
    zonotope_iso,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BOTTOM",
    "Factorization",
    "FactorizationGraph",
    "NumericalSemigroup",
    "PosetDS",
    "Presentation",
    "Quasipolynomial",
    "SupportPair",
    "Trade",
    "betti_elements",
    "betti_scan_bound",
    "connected_components",
    "cube_face_lattice",
    "direct_trade",
    "disjoint_support_poset",
    "edge_count_support_closed",
    "edge_count_trade_closed",
    "fit",
    "is_presentation",
    "minimal_period",
    "minimal_presentation",
    "mobius_closed_form",
    "mobius_recursive",
    "new_semigroup",
    "normalize_presentation",
    "predicted_leading_coefficient",
    "principal_ideal_cube_iso",
    "projective_complex_check",
    "signed_covectors",
    "support_graph",
    "trade_graph",
    "verify_degree_period_claims",
    "verify_dual_mobius_inversion",
    "zonotope_iso",
]
