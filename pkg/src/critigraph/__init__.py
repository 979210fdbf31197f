"""critigraph: vertex-critical strongly connected digraphs at desk scale.

Bit-vector digraphs on up to 64 vertices, the extremal construction
attaining C(n,2) - n + 4 edges, a constructive removable-vertex procedure,
chordless-cycle machinery, and an exhaustive enumeration engine that
verifies the extremal edge count and its supporting degree bounds for
small n.
"""

from .criticality import (
    AssertionReport,
    Cycle,
    Lemma2Report,
    all_chordless_cycles,
    check_assertion1,
    check_assertion2,
    check_lemma2,
    check_schwarz,
    extremal_digraph,
    find_chordless_cycle,
    find_removable_vertex,
    is_chordless,
    is_vertex_critical,
    non_critical_witness,
    s,
    schwarz_bound,
)
from .digraph import (
    MAX_VERTICES,
    ContractionResult,
    Digraph,
    VertexSet,
    add_edge,
    bits_of,
    contract,
    degree,
    digraph_from_edges,
    edge_count,
    edges,
    in_set,
    is_strongly_connected,
    new_digraph,
    out_set,
    reachable_set,
    remove_vertices,
    vertex_mask,
)
from .enumeration import (
    ChunkResult,
    MaskCursor,
    SearchReport,
    VerificationReport,
    Violation,
    count_strongly_connected,
    critical_masks,
    decode,
    default_chunk_bits,
    encode,
    max_critical_edges,
    strongly_connected_masks,
    verify_assertions_exhaustive,
    verify_lemma1_exhaustive,
    verify_lemma2_exhaustive,
    verify_schwarz_exhaustive,
    verify_theorem_exhaustive,
)
from .errors import (
    BoundsError,
    CapacityError,
    CritigraphError,
    DomainError,
    InvariantError,
    LoopEdgeError,
    ParseError,
    ValidationError,
)
from .formats import (
    parse_edge_list,
    parse_report,
    render_assertion_report,
    render_lemma2_report,
    render_search_report,
    render_verification_report,
    serialize_dot,
    serialize_edge_list,
    serialize_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "AssertionReport",
    "BoundsError",
    "CapacityError",
    "ChunkResult",
    "ContractionResult",
    "CritigraphError",
    "Cycle",
    "Digraph",
    "DomainError",
    "InvariantError",
    "Lemma2Report",
    "LoopEdgeError",
    "MAX_VERTICES",
    "MaskCursor",
    "ParseError",
    "SearchReport",
    "ValidationError",
    "VerificationReport",
    "VertexSet",
    "Violation",
    "add_edge",
    "all_chordless_cycles",
    "bits_of",
    "check_assertion1",
    "check_assertion2",
    "check_lemma2",
    "check_schwarz",
    "contract",
    "count_strongly_connected",
    "critical_masks",
    "decode",
    "default_chunk_bits",
    "degree",
    "digraph_from_edges",
    "edge_count",
    "edges",
    "encode",
    "extremal_digraph",
    "find_chordless_cycle",
    "find_removable_vertex",
    "in_set",
    "is_chordless",
    "is_strongly_connected",
    "is_vertex_critical",
    "max_critical_edges",
    "new_digraph",
    "non_critical_witness",
    "out_set",
    "parse_edge_list",
    "parse_report",
    "reachable_set",
    "remove_vertices",
    "render_assertion_report",
    "render_lemma2_report",
    "render_search_report",
    "render_verification_report",
    "s",
    "schwarz_bound",
    "serialize_dot",
    "serialize_edge_list",
    "serialize_matrix",
    "strongly_connected_masks",
    "vertex_mask",
    "verify_assertions_exhaustive",
    "verify_lemma1_exhaustive",
    "verify_lemma2_exhaustive",
    "verify_schwarz_exhaustive",
    "verify_theorem_exhaustive",
]
