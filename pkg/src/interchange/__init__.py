"""Minimum-genus cyclically symmetric embeddings of K_{n,n} with a Hamiltonian face."""

from __future__ import annotations

from .bounds import BoundsReport, bounds_report, l_c, l_c_star, l_c_star_attainable, l_c_star_tilde
from .cuts import (
    CutCurve,
    CutSystem,
    RingBlock,
    base_m1,
    construct_3d,
    cut_voltage,
    rh_genus,
    ring_block,
    validate_cut_system,
    validate_lower_bound_obstruction,
    verify_n4_exception,
)
from .embedding import (
    EmbeddedGraph,
    Face,
    Multigraph,
    euler_genus,
    hamiltonian_faces,
    is_simple_complete_bipartite,
    trace_faces,
)
from .errors import DomainError, InfeasibleError, InterchangeError, InternalError, ValidationError
from .search import SearchResult, canonical_reduce, enumerate_min_genus, histogram
from .transition import (
    TransitionGraph,
    alternating_cycles,
    construct_optimal_symmetric,
    genus_from_cycles,
    optimal_transition_graph,
)
from .voltage import CyclicElement, VoltageGraph, derive_embedding, derive_graph, zn_order

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "CutCurve",
    "CutSystem",
    "CyclicElement",
    "DomainError",
    "EmbeddedGraph",
    "Face",
    "InfeasibleError",
    "InterchangeError",
    "InternalError",
    "Multigraph",
    "RingBlock",
    "SearchResult",
    "TransitionGraph",
    "ValidationError",
    "VoltageGraph",
    "alternating_cycles",
    "base_m1",
    "bounds_report",
    "canonical_reduce",
    "construct_3d",
    "construct_optimal_symmetric",
    "cut_voltage",
    "derive_embedding",
    "derive_graph",
    "enumerate_min_genus",
    "euler_genus",
    "genus_from_cycles",
    "hamiltonian_faces",
    "histogram",
    "is_simple_complete_bipartite",
    "l_c",
    "l_c_star",
    "l_c_star_attainable",
    "l_c_star_tilde",
    "optimal_transition_graph",
    "rh_genus",
    "ring_block",
    "trace_faces",
    "validate_cut_system",
    "validate_lower_bound_obstruction",
    "verify_n4_exception",
    "zn_order",
]
