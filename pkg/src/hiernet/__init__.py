"""Hierarchical networks on mixed-radix labels.

Deterministic construction of the nested-clique hierarchical graph family,
exact distance parameters from label arithmetic, label-local shortest-path
routing, and a brute-force breadth-first-search oracle that cross-checks
every closed form.
"""

from ._backend import BACKEND
from .labels import (
    Block,
    BlockKind,
    BlockView,
    Label,
    LabelClass,
    LabelError,
    OrderCapError,
    RadixSpec,
    SpecError,
    SpecMismatchError,
    alt,
    binomial_spec,
    blocks,
    classify,
    common_suffix_len,
    conjugate,
    format_label,
    format_spec,
    parse_label,
    parse_spec,
)
from .metrics import (
    DistanceCase,
    DistanceResult,
    LayerHistogram,
    diameter,
    dist_to_root,
    distance,
    eccentricity,
    eccentricity_discrepancies,
    eccentricity_formula,
    layer_counts,
    radius,
    radius_diameter_scan,
)
from .oracle import (
    STANDARD_SUITE,
    ExplicitGraph,
    VerificationReport,
    bfs_from,
    build_graph,
    verify_spec,
)
from .routing import Path, descent, next_hop, route, swap_toward_root, validate_path
from .topology import (
    CopyView,
    EdgeKind,
    EdgeStream,
    build_recursive,
    clique_of,
    copy_vertices,
    edges,
    is_adjacent,
    neighbors,
    quotient,
    root_clique,
    size_closed_form,
    size_recursive,
    to_dot,
    to_edgelist,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Block",
    "BlockKind",
    "BlockView",
    "CopyView",
    "DistanceCase",
    "DistanceResult",
    "EdgeKind",
    "EdgeStream",
    "ExplicitGraph",
    "Label",
    "LabelClass",
    "LabelError",
    "LayerHistogram",
    "OrderCapError",
    "Path",
    "RadixSpec",
    "STANDARD_SUITE",
    "SpecError",
    "SpecMismatchError",
    "VerificationReport",
    "alt",
    "bfs_from",
    "binomial_spec",
    "blocks",
    "build_graph",
    "build_recursive",
    "classify",
    "clique_of",
    "common_suffix_len",
    "conjugate",
    "copy_vertices",
    "descent",
    "diameter",
    "dist_to_root",
    "distance",
    "eccentricity",
    "eccentricity_discrepancies",
    "eccentricity_formula",
    "edges",
    "format_label",
    "format_spec",
    "is_adjacent",
    "layer_counts",
    "neighbors",
    "next_hop",
    "parse_label",
    "parse_spec",
    "quotient",
    "radius",
    "radius_diameter_scan",
    "root_clique",
    "route",
    "size_closed_form",
    "size_recursive",
    "swap_toward_root",
    "to_dot",
    "to_edgelist",
    "validate_path",
    "verify_spec",
]
