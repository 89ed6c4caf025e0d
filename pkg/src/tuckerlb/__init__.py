"""Certifying recognition for the consecutive-ones property and
interval graphs.

A binary matrix is either given a column ordering with consecutive 1s in
every row, or a minimal Tucker forbidden submatrix.  A graph is either
given an interval model, or a minimal Lekkerkerker-Boland forbidden
induced subgraph.  Every certificate can be re-checked by an independent
verifier.
"""

from .c1p import C1pOutcome, PrefixResult, max_c1p_prefix, test_c1p
from .chordal import (
    CliqueMatrixBundle,
    EliminationOrdering,
    chordless_cycle,
    clique_matrix,
    elimination_order,
    is_chordal,
)
from .errors import (
    ClassificationError,
    ContractViolationError,
    InputDomainError,
    InvariantViolationError,
    NotConnectedError,
)
from .graph import SimpleGraph, from_edges, format_graph, parse_graph
from .lb import (
    IntervalModel,
    LbCertificate,
    LbKind,
    RecognitionResult,
    classify_lb,
    find_lb_subgraph,
    format_interval_model,
    format_lb_certificate,
    gen_lb,
    interval_model,
    parse_interval_model,
    parse_lb_certificate,
    recognize_interval,
)
from .matrix import (
    ColumnOrdering,
    SparseBinaryMatrix,
    format_matrix,
    from_lists,
    matrix_size,
    parse_matrix,
    restrict,
)
from .tucker import (
    TuckerCertificate,
    TuckerKind,
    classify_tucker,
    format_tucker_certificate,
    gen_tucker,
    parse_tucker_certificate,
    tucker_submatrix,
)
from .verify import (
    Verdict,
    brute_c1p,
    gen_instances,
    is_asteroidal_triple,
    verify_interval_model,
    verify_lb_certificate,
    verify_tucker_certificate,
)

__all__ = [
    "C1pOutcome",
    "ClassificationError",
    "CliqueMatrixBundle",
    "ColumnOrdering",
    "ContractViolationError",
    "EliminationOrdering",
    "InputDomainError",
    "IntervalModel",
    "InvariantViolationError",
    "LbCertificate",
    "LbKind",
    "NotConnectedError",
    "PrefixResult",
    "RecognitionResult",
    "SimpleGraph",
    "SparseBinaryMatrix",
    "TuckerCertificate",
    "TuckerKind",
    "Verdict",
    "brute_c1p",
    "chordless_cycle",
    "classify_lb",
    "classify_tucker",
    "clique_matrix",
    "elimination_order",
    "find_lb_subgraph",
    "format_graph",
    "format_interval_model",
    "format_lb_certificate",
    "format_matrix",
    "format_tucker_certificate",
    "from_edges",
    "from_lists",
    "gen_instances",
    "gen_lb",
    "gen_tucker",
    "interval_model",
    "is_asteroidal_triple",
    "is_chordal",
    "matrix_size",
    "max_c1p_prefix",
    "parse_graph",
    "parse_interval_model",
    "parse_lb_certificate",
    "parse_matrix",
    "parse_tucker_certificate",
    "recognize_interval",
    "restrict",
    "test_c1p",
    "tucker_submatrix",
    "verify_interval_model",
    "verify_lb_certificate",
    "verify_tucker_certificate",
]

__version__ = "0.1.0"
