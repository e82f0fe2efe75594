"""Graphicahedra: abstract polytopes built from Cayley graphs of symmetric groups.

Given a connected simple graph with p vertices and q edges, the associated
polytope has the p! permutations as vertices; its rank-i faces are the
right cosets of the Young subgroups generated by the transpositions of
i-edge subsets, ordered by containment.  The 1-skeleton is the Cayley graph
of the symmetric group with one transposition generator per graph edge; a
path graph recovers the classical permutahedron.
"""

from .cayley import CayleyGraph, build_cayley, component_of, export_dot
from .classify import (
    FaceType,
    FacetCensus,
    classify_2face,
    classify_by_construction,
    classify_intrinsic_rank3,
    facet_census,
    permutahedron_oracle,
)
from .errors import (
    CapacityError,
    DisconnectedGraphError,
    GraphicahedronError,
    InternalInconsistencyError,
    ParseError,
)
from .graphs import (
    GraphAutomorphism,
    SimpleGraph,
    automorphisms,
    components,
    is_connected,
    make_graph,
    parse_graph,
    preset_graph,
)
from .perms import (
    CosetKey,
    Perm,
    VertexPartition,
    canonical_rep,
    compose,
    conjugate,
    coset_size,
    identity,
    inverse,
    same_coset,
    transposition_of_edge,
)
from .polytope import (
    Face,
    Flag,
    Graphicahedron,
    adjacent_flag,
    build,
    face_count,
    flag_count,
    flags,
    one_skeleton_equals_cayley,
    skeleton,
    tree_order_equals_coset_inclusion,
    verify_diamond,
    verify_strong_flag_connectedness,
    vertex_figure_is_simplex,
)
from .posets import RankedPoset, posets_isomorphic, product_poset
from .symmetry import (
    AutGroupSummary,
    PolytopeAutomorphism,
    apply_graph_aut,
    apply_right,
    aut_summary,
    constructed_group_order,
    full_aut_order_via_flags,
    is_regular,
    is_vertex_transitive,
)

__version__ = "0.1.0"

__all__ = [
    "AutGroupSummary",
    "CapacityError",
    "CayleyGraph",
    "CosetKey",
    "DisconnectedGraphError",
    "Face",
    "FaceType",
    "FacetCensus",
    "Flag",
    "GraphAutomorphism",
    "Graphicahedron",
    "GraphicahedronError",
    "InternalInconsistencyError",
    "ParseError",
    "Perm",
    "PolytopeAutomorphism",
    "RankedPoset",
    "SimpleGraph",
    "VertexPartition",
    "adjacent_flag",
    "apply_graph_aut",
    "apply_right",
    "aut_summary",
    "automorphisms",
    "build",
    "build_cayley",
    "canonical_rep",
    "classify_2face",
    "classify_by_construction",
    "classify_intrinsic_rank3",
    "component_of",
    "components",
    "compose",
    "conjugate",
    "constructed_group_order",
    "coset_size",
    "export_dot",
    "face_count",
    "facet_census",
    "flag_count",
    "flags",
    "full_aut_order_via_flags",
    "identity",
    "inverse",
    "is_connected",
    "is_regular",
    "is_vertex_transitive",
    "make_graph",
    "one_skeleton_equals_cayley",
    "parse_graph",
    "permutahedron_oracle",
    "posets_isomorphic",
    "preset_graph",
    "product_poset",
    "same_coset",
    "skeleton",
    "transposition_of_edge",
    "tree_order_equals_coset_inclusion",
    "verify_diamond",
    "verify_strong_flag_connectedness",
    "vertex_figure_is_simplex",
]
