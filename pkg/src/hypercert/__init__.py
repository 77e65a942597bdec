"""Exact Schmidt ranks and restriction-based Schmidt-rank certificates for qubit hypergraph states."""

__version__ = "0.1.0"

from .anf import (
    AnfPolynomial,
    anf_from_hyperedges,
    anf_from_truth_table,
    boolean_derivative,
    cut_decompose,
    evaluate,
    restrict,
    truth_table,
)
from .certificate import (
    CertificateRejected,
    CoreCertificate,
    Restriction,
    check_bridge_conditions,
    search_and_verify,
    verify_certificate,
)
from .f2 import F2Matrix, bilinear_slice, rank_f2
from .hypergraph import BridgeBlock, Cut, Hypergraph, bridge_blocks, cross_edges
from .oracle import OracleLimits, SignMatrix, real_rank_exact, schmidt_rank
