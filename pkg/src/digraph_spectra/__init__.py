"""Spectral analysis of directed-graph Laplacians.

Classifies digraph topologies whose Laplacian spectrum is guaranteed
real or guaranteed complex, cross-validates structural claims against a
numerical eigensolver, and simulates delayed consensus dynamics to show
the difference in practice.
"""

from .classifier import (
    Basis,
    ClassificationVerdict,
    Theorem1Result,
    Verdict,
    check_corollary1,
    check_lemma2,
    check_theorem1,
    check_theorem1_bruteforce,
    classify,
    detect_cycle,
    detect_udcec,
)
from .connectivity import (
    Block,
    BlockDecomposition,
    BlockTag,
    DecompositionFailure,
    block_decomposition,
    is_strongly_connected,
    strongly_connected_components,
)
from .consensus import (
    SimConfig,
    SimStatus,
    SimulationResult,
    delay_margin,
    disagreement,
    simulate,
    write_trajectory_csv,
)
from .graph import (
    Digraph,
    InteractionKind,
    adjacency,
    block_submatrix,
    build_digraph,
    has_digon_sign_asymmetric,
    induced_subgraph,
    interaction_kind,
    is_undirected,
    laplacian,
)
from .io import (
    GraphFormatError,
    load_cross_edges,
    load_graph,
    parse_graph,
    write_graph,
)
from .multilayer import (
    Composition,
    DcidGraph,
    augmented_first_block,
    build_dcid,
    build_udcec,
    compose,
    corollary2_applies,
    corollary3_applies,
)
from .spectra import (
    DEFAULT_REALNESS_TOL,
    SpectralReport,
    cycle_spectrum,
    dcid_spectrum,
    eigenvalues,
    is_real_spectrum,
    multiset_max_distance,
    refine_spectrum,
    spectra_match,
    two_node_spectrum,
    udcec_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "Block",
    "BlockDecomposition",
    "BlockTag",
    "ClassificationVerdict",
    "Composition",
    "DcidGraph",
    "DecompositionFailure",
    "DEFAULT_REALNESS_TOL",
    "Digraph",
    "GraphFormatError",
    "InteractionKind",
    "SimConfig",
    "SimStatus",
    "SimulationResult",
    "SpectralReport",
    "Theorem1Result",
    "Verdict",
    "adjacency",
    "augmented_first_block",
    "block_decomposition",
    "block_submatrix",
    "build_dcid",
    "build_digraph",
    "build_udcec",
    "check_corollary1",
    "check_lemma2",
    "check_theorem1",
    "check_theorem1_bruteforce",
    "classify",
    "compose",
    "corollary2_applies",
    "corollary3_applies",
    "cycle_spectrum",
    "dcid_spectrum",
    "delay_margin",
    "detect_cycle",
    "detect_udcec",
    "disagreement",
    "eigenvalues",
    "has_digon_sign_asymmetric",
    "induced_subgraph",
    "interaction_kind",
    "is_real_spectrum",
    "is_strongly_connected",
    "is_undirected",
    "laplacian",
    "load_cross_edges",
    "load_graph",
    "multiset_max_distance",
    "parse_graph",
    "refine_spectrum",
    "simulate",
    "spectra_match",
    "strongly_connected_components",
    "two_node_spectrum",
    "udcec_spectrum",
    "write_graph",
    "write_trajectory_csv",
]
