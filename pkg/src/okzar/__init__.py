"""okzar: exact chamber decompositions, Zariski decompositions, and global
Newton-Okounkov bodies for iterated projective-line bundles, from their
Picard-lattice data."""

from .cones import (
    ConeRep,
    Face,
    cone_from_ineqs,
    cone_from_rays,
    contains,
    dim,
    facets,
    intersect,
    minkowski_sum,
    preimage_linear,
)
from .lattice import (
    EhrhartPoly,
    HilbertBasis,
    ehrhart_polynomial,
    generators_are_hilbert_basis,
    hilbert_basis,
    lattice_point_count,
)
from .linalg import Mat, Rat, determinant, is_lattice_basis, solve_exact
from .okounkov import (
    OkounkovBody,
    SlabResult,
    body_hilbert_basis,
    cone_of_S,
    cox_report,
    divisor_body,
    global_body,
    restrict_body,
    slab,
)
from .polytopes import Polytope, fiber_slice
from .variety import (
    VarietyData,
    ZariskiChamber,
    ZariskiDecomposition,
    chamber_of,
    eff_cone,
    facet_pairing,
    fixed_support_test,
    integral_decomposition_check,
    is_effective,
    is_nef,
    load_variety,
    nef_cone,
    zariski_chambers,
    zariski_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "ConeRep",
    "EhrhartPoly",
    "Face",
    "HilbertBasis",
    "Mat",
    "OkounkovBody",
    "Polytope",
    "Rat",
    "SlabResult",
    "VarietyData",
    "ZariskiChamber",
    "ZariskiDecomposition",
    "body_hilbert_basis",
    "chamber_of",
    "cone_from_ineqs",
    "cone_from_rays",
    "cone_of_S",
    "contains",
    "cox_report",
    "determinant",
    "dim",
    "divisor_body",
    "eff_cone",
    "ehrhart_polynomial",
    "facet_pairing",
    "facets",
    "fiber_slice",
    "fixed_support_test",
    "generators_are_hilbert_basis",
    "global_body",
    "hilbert_basis",
    "integral_decomposition_check",
    "intersect",
    "is_effective",
    "is_lattice_basis",
    "is_nef",
    "lattice_point_count",
    "load_variety",
    "minkowski_sum",
    "nef_cone",
    "preimage_linear",
    "restrict_body",
    "slab",
    "solve_exact",
    "zariski_chambers",
    "zariski_decompose",
]
