"""Vertex Ramsey certificates, pattern-degeneracy structure, and randomized
dense pattern-free graph construction."""

from .blocks import Block, BlockDecomposition, articulation_points, block_decomposition
from .certify import (
    Certificate,
    StarFamily,
    degeneracy_coloring,
    embed_or_color,
    greedy_disjoint_family,
    star_family_at_least,
    verify_coloring,
)
from .construction import (
    ConstructionParams,
    CopySample,
    TraceCover,
    construct_family_free,
    enumerate_min_trace_covers,
    estimate_copy_count,
    estimate_density,
    sample_copy_hypergraph,
    total_copy_count,
    union_graph,
    verify_cover_inequality,
)
from .degeneracy import (
    ForestDecomposition,
    Piece,
    extract_core,
    forest_decomposition,
    is_degenerate,
)
from .embed import (
    Copy,
    CopyEnumeration,
    Embedding,
    automorphism_count,
    contains_copy,
    enumerate_copies,
    enumerate_embeddings,
    find_embedding,
)
from .graphs import (
    Graph,
    VertexColoring,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    parse_edge_list,
    parse_graph6,
    path_graph,
    write_graph6,
)
from .ramsey import CopyHypergraph, RamseyDecision, copy_hypergraph, is_eps_dense, is_ramsey

__all__ = [
    "Block",
    "BlockDecomposition",
    "Certificate",
    "ConstructionParams",
    "Copy",
    "CopyEnumeration",
    "CopyHypergraph",
    "CopySample",
    "Embedding",
    "ForestDecomposition",
    "Graph",
    "Piece",
    "RamseyDecision",
    "StarFamily",
    "TraceCover",
    "VertexColoring",
    "articulation_points",
    "automorphism_count",
    "block_decomposition",
    "complete_graph",
    "construct_family_free",
    "contains_copy",
    "copy_hypergraph",
    "cycle_graph",
    "degeneracy_coloring",
    "disjoint_union",
    "embed_or_color",
    "empty_graph",
    "enumerate_copies",
    "enumerate_embeddings",
    "enumerate_min_trace_covers",
    "estimate_copy_count",
    "estimate_density",
    "extract_core",
    "find_embedding",
    "forest_decomposition",
    "greedy_disjoint_family",
    "induced_subgraph",
    "is_degenerate",
    "is_eps_dense",
    "is_ramsey",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "sample_copy_hypergraph",
    "star_family_at_least",
    "total_copy_count",
    "union_graph",
    "verify_coloring",
    "verify_cover_inequality",
    "write_graph6",
]

__version__ = "0.1.0"
