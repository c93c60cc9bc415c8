"""Edges and vertices of a signed graph on exactly one negative or one positive circle."""

from .blocks import BlockDecomposition, decompose_blocks
from .bridges import (
    Bridge,
    BridgePath,
    LayeringReport,
    Segment,
    analyze_layering,
    bridges_of_circle,
    chordify,
    paths_through_bridge,
)
from .edge_battery import (
    EdgeBatteryAnalysis,
    EdgeBatteryCertificate,
    classify_edge,
    classify_edges,
    negative_batteries_from,
    positive_batteries_from,
    verify_edge_battery,
)
from .errors import CircleCapExceeded, GraphError, InvariantViolation, ParseError, PreconditionError
from .fileformat import graph_from_dict, graph_to_dict, load_graph, parse_graph, serialize_graph
from .graph import (
    NEG,
    POS,
    Circle,
    Edge,
    SignedGraph,
    circle_sign,
    is_circle,
    subdivide_edge,
    suppress_vertex,
    symmetric_difference,
)
from .oracle import (
    DEFAULT_CAP,
    CircleCensus,
    CircleTally,
    enumerate_circles,
    oracle_classify_edge,
    oracle_classify_vertex,
)
from .switching import (
    BalanceReport,
    apply_switching,
    balancing_edges,
    find_switching,
    is_balanced,
    switching_equivalent,
)
from .vertex_battery import (
    VertexBatteryAnalysis,
    VertexBatteryCertificate,
    classify_vertex,
    classify_vertex_negative,
    classify_vertices,
    vertex_only_negative_in_block,
    vertex_unique_positive_in_block,
)

__version__ = "0.1.0"

__all__ = [
    "analyze_layering",
    "apply_switching",
    "BalanceReport",
    "balancing_edges",
    "BlockDecomposition",
    "Bridge",
    "BridgePath",
    "bridges_of_circle",
    "chordify",
    "Circle",
    "circle_sign",
    "CircleCapExceeded",
    "CircleCensus",
    "CircleTally",
    "classify_edge",
    "classify_edges",
    "classify_vertex",
    "classify_vertex_negative",
    "classify_vertices",
    "decompose_blocks",
    "DEFAULT_CAP",
    "Edge",
    "EdgeBatteryAnalysis",
    "EdgeBatteryCertificate",
    "enumerate_circles",
    "find_switching",
    "graph_from_dict",
    "graph_to_dict",
    "GraphError",
    "InvariantViolation",
    "is_balanced",
    "is_circle",
    "LayeringReport",
    "load_graph",
    "NEG",
    "negative_batteries_from",
    "oracle_classify_edge",
    "oracle_classify_vertex",
    "parse_graph",
    "ParseError",
    "paths_through_bridge",
    "POS",
    "positive_batteries_from",
    "PreconditionError",
    "Segment",
    "serialize_graph",
    "SignedGraph",
    "subdivide_edge",
    "suppress_vertex",
    "switching_equivalent",
    "symmetric_difference",
    "verify_edge_battery",
    "vertex_only_negative_in_block",
    "vertex_unique_positive_in_block",
    "VertexBatteryAnalysis",
    "VertexBatteryCertificate",
]
