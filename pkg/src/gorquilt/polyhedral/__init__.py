"""Exact polyhedral geometry: cones, lattices, semigroups."""

from .cone import (
    BruteForceResult,
    ConePresentation,
    Embedding,
    GorensteinCertificate,
    LatticeDescription,
    class_group,
    cone_from_rays,
    contains,
    count_by_degree,
    dimension,
    enumerate_by_degree,
    facets,
    gorenstein_bruteforce,
    gorenstein_facet_test,
    gorenstein_search,
    hilbert_basis,
    is_interior,
    is_pointed,
    rays,
    restrict_lattice,
    span_project,
)
from .intlinalg import smith_normal_form, solve_integral

__all__ = [
    "BruteForceResult",
    "ConePresentation",
    "Embedding",
    "GorensteinCertificate",
    "LatticeDescription",
    "class_group",
    "cone_from_rays",
    "contains",
    "count_by_degree",
    "dimension",
    "enumerate_by_degree",
    "facets",
    "gorenstein_bruteforce",
    "gorenstein_facet_test",
    "gorenstein_search",
    "hilbert_basis",
    "is_interior",
    "is_pointed",
    "rays",
    "restrict_lattice",
    "smith_normal_form",
    "solve_integral",
    "span_project",
]
