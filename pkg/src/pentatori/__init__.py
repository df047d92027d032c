"""All-pentagon multi-torus assembly and strip-based topological indices."""

from .assembly import (
    AssembledStructure,
    Skeleton,
    SkeletonError,
    StructureParams,
    assemble,
    build_structure,
    fuse,
    skeleton_12D,
    skeleton_U1,
    skeleton_chain,
    skeleton_cycle,
    skeleton_dendrimer,
)
from .closedform import (
    ci_closed,
    counts_closed,
    cross_validate,
    discrepancy_notes,
    evaluate_closed,
    omega_closed,
)
from .dsl import (
    NamedStructure,
    OperationChain,
    ParseError,
    format_spec,
    parse,
)
from .mapops import (
    CENTER,
    MIDPOINT,
    ORIGINAL,
    Monomer,
    VertexSelection,
    build_monomer,
    open_faces,
    p4_quadrangulate,
    p4_selection,
    truncate_vertices,
)
from .omega import (
    CoCuts,
    OmegaPolynomial,
    StripPartition,
    ci,
    co_cuts,
    codistant,
    omega,
    op_pairs,
    strip_partition,
)
from .polymap import (
    CombMap,
    CountSummary,
    MapError,
    SimpleGraph,
    degree_histogram,
    euler_genus_closed,
    genus_paper,
    seed_dodecahedron,
    seed_tetrahedron,
    summarize,
    trace_faces,
)
from .ringbasis import RMAX_MAX, RMAX_MIN, Ring, RingBasis, chordless_cycles

__version__ = "0.1.0"

__all__ = [
    "AssembledStructure",
    "CENTER",
    "CoCuts",
    "CombMap",
    "CountSummary",
    "MIDPOINT",
    "MapError",
    "Monomer",
    "NamedStructure",
    "OmegaPolynomial",
    "OperationChain",
    "ORIGINAL",
    "ParseError",
    "RMAX_MAX",
    "RMAX_MIN",
    "Ring",
    "RingBasis",
    "SimpleGraph",
    "Skeleton",
    "SkeletonError",
    "StripPartition",
    "StructureParams",
    "VertexSelection",
    "assemble",
    "build_monomer",
    "build_structure",
    "chordless_cycles",
    "ci",
    "ci_closed",
    "co_cuts",
    "codistant",
    "counts_closed",
    "cross_validate",
    "degree_histogram",
    "discrepancy_notes",
    "euler_genus_closed",
    "evaluate_closed",
    "format_spec",
    "fuse",
    "genus_paper",
    "omega",
    "omega_closed",
    "op_pairs",
    "open_faces",
    "p4_quadrangulate",
    "p4_selection",
    "parse",
    "seed_dodecahedron",
    "seed_tetrahedron",
    "skeleton_12D",
    "skeleton_U1",
    "skeleton_chain",
    "skeleton_cycle",
    "skeleton_dendrimer",
    "strip_partition",
    "summarize",
    "trace_faces",
    "truncate_vertices",
]
