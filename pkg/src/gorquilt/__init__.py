"""Gorenstein certificates for BZ cones and quilt semigroups."""

from .bz import bz_cone, bz_gorenstein, count_fiber, omega_bz, pi3
from .groups import FinAbGroup
from .hilbert import RationalSeries, hilbert_series, stanley_symmetry
from .polyhedral import cone as cones
from .quilt import (
    certify_gorenstein,
    class_group_of_degeneration,
    graded_dim,
    load_graph,
    quilt_cone,
    quilt_hilbert_series,
)
from .reps import lr_coefficient, schur_triple_dim, tree_invariant_dim, triple_invariant_dim
from .rootdatum import (
    IsogenyDescriptor,
    SimpleType,
    adjoint,
    named_group,
    pi1_derived_group,
    predict_properties,
    simply_connected,
)

__version__ = "0.1.0"

__all__ = [
    "FinAbGroup",
    "IsogenyDescriptor",
    "RationalSeries",
    "SimpleType",
    "adjoint",
    "bz_cone",
    "bz_gorenstein",
    "certify_gorenstein",
    "class_group_of_degeneration",
    "cones",
    "count_fiber",
    "graded_dim",
    "hilbert_series",
    "load_graph",
    "lr_coefficient",
    "named_group",
    "omega_bz",
    "pi1_derived_group",
    "pi3",
    "predict_properties",
    "quilt_cone",
    "quilt_hilbert_series",
    "schur_triple_dim",
    "simply_connected",
    "stanley_symmetry",
    "tree_invariant_dim",
    "triple_invariant_dim",
]
