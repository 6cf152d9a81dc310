"""Zero-inclusion regions for complex harmonic polynomials ``h + conj(g)`` and
harmonic trinomials ``z**n + c conj(z)**k - 1``, with a numerical zero finder
and winding-number counter to check them."""

from .bounds import (
    BoundReport,
    Case,
    Method,
    alpha_ring,
    beta_annulus,
    cauchy_interval,
    dehmer_disk,
    harmonic_disk,
    kennedy_ring,
    kennedy_ring_alt,
    marden_radius,
    rouche_radius,
    trinomial_disk,
    trinomial_inclusion_region,
)
from .poly_core import (
    AnalyticPoly,
    Annulus,
    Disk,
    HarmonicPoly,
    HarmonicTrinomial,
    Orientation,
    RootRecord,
    UnionRegion,
    evaluate_harmonic,
    region_contains,
    wirtinger_derivatives,
)
from .real_roots import RealPoly, dehmer_radius, descartes_positive_bound, sign_variations, solve_bracketed
from .solver import (
    SolverConfig,
    find_all_zeros,
    newton_refine,
    signed_count_consistency,
    winding_number,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticPoly",
    "Annulus",
    "BoundReport",
    "Case",
    "Disk",
    "HarmonicPoly",
    "HarmonicTrinomial",
    "Method",
    "Orientation",
    "RealPoly",
    "RootRecord",
    "SolverConfig",
    "UnionRegion",
    "alpha_ring",
    "beta_annulus",
    "cauchy_interval",
    "dehmer_disk",
    "dehmer_radius",
    "descartes_positive_bound",
    "evaluate_harmonic",
    "find_all_zeros",
    "harmonic_disk",
    "kennedy_ring",
    "kennedy_ring_alt",
    "marden_radius",
    "newton_refine",
    "region_contains",
    "rouche_radius",
    "sign_variations",
    "signed_count_consistency",
    "solve_bracketed",
    "trinomial_disk",
    "trinomial_inclusion_region",
    "winding_number",
    "wirtinger_derivatives",
]
