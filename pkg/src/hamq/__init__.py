"""Hamilton-connectivity certification via signless Laplacian spectral
conditions, with exact oracles and extremal-family machinery."""

from .certifier import Certificate, CertifyConfig, certify, explain
from .errors import HamqError
from .families import (
    AppendixReport,
    FamilyHandle,
    Thresholds,
    appendix_check,
    build_S,
    build_T,
    class_bound,
    enumerate_class,
    family_member,
    membership,
    spanning_subgraph_of,
    thresholds,
)
from .graph import (
    Graph,
    complete,
    copies,
    cycle,
    delete_edges,
    disjoint_union,
    emit_graph6,
    join,
    min_degree,
    parse_edgelist,
    parse_graph6,
    path_graph,
)
from .hamilton import (
    OracleAnswer,
    hamilton_path_between,
    is_hamilton_connected,
    is_hamiltonian,
    is_traceable,
    ore_check,
)
from .spectral import (
    SpectralEstimate,
    eigen_residual,
    perron_pair,
    q_apply,
    rayleigh_quotient_exact,
    upper_bound_edge_count,
)
from .transforms import ClosureTrace, closure, kelmans

__version__ = "0.1.0"

__all__ = [
    "AppendixReport",
    "Certificate",
    "CertifyConfig",
    "ClosureTrace",
    "FamilyHandle",
    "Graph",
    "HamqError",
    "OracleAnswer",
    "SpectralEstimate",
    "Thresholds",
    "appendix_check",
    "build_S",
    "build_T",
    "certify",
    "class_bound",
    "complete",
    "copies",
    "closure",
    "cycle",
    "delete_edges",
    "disjoint_union",
    "eigen_residual",
    "emit_graph6",
    "enumerate_class",
    "explain",
    "family_member",
    "hamilton_path_between",
    "is_hamilton_connected",
    "is_hamiltonian",
    "is_traceable",
    "join",
    "kelmans",
    "membership",
    "min_degree",
    "ore_check",
    "parse_edgelist",
    "parse_graph6",
    "path_graph",
    "perron_pair",
    "q_apply",
    "rayleigh_quotient_exact",
    "spanning_subgraph_of",
    "thresholds",
    "upper_bound_edge_count",
]
