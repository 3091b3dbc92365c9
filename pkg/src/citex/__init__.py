"""Coupled author/paper importance scores for publication networks.

Authors and papers reinforce each other: a paper's score divides among its
authors, an author's score flows back into their papers, and every paper
additionally absorbs the scores of the papers citing it. Iterating these
updates with per-iteration L1 normalization converges to a simultaneous
ranking of authors and papers. Classic bibliometric indices (h, g, e,
citation averages) are included for comparison, along with venue-level
aggregates and a CLI.

Quick start::

    >>> from citex import build_corpus, run
    >>> corpus = build_corpus(
    ...     authors=["alice", "bob"],
    ...     papers=["p1", "p2"],
    ...     authorship=[("alice", "p1"), ("alice", "p2"), ("bob", "p2")],
    ...     citations=[("p2", "p1")],
    ... )
    >>> result = run(corpus)
    >>> float(result.author_scores.sum())
    1.0
"""

from .dataset import Dataset, load_dataset, parse_dataset, serialize_dataset, write_dataset
from .engine import (
    ConvergenceReport,
    IterationConfig,
    RunResult,
    adjusted_paper_scores,
    author_update,
    citation_boost,
    normalize_l1,
    paper_update,
    reputation_boost,
    run,
)
from .errors import (
    CitationCycleError,
    CitexError,
    CorpusError,
    DatasetError,
    DimensionMismatchError,
    DuplicateEdgeWarning,
    DuplicateIdError,
    NegativeWeightError,
    OrphanPaperError,
    SelfCitationError,
    SelfRatingError,
    UnknownReferenceError,
    ZeroColumnSumError,
    ZeroVectorError,
)
from .graph import AdjacencyView, Corpus, build_corpus, validate_dag
from .matrices import (
    SparseMatrix,
    citation_matrix,
    contribution_matrix,
    publication_matrix,
    reputation_matrix,
    spmv,
    spmv_transposed,
    weight_matrix,
)
from .metrics import (
    MetricsRecord,
    author_metrics,
    authors_per_paper,
    citation_counts,
    e_index,
    g_index,
    h_index,
    significant_papers,
    top_k_citations,
)
from .venues import VenueAssignment, VenueScore, venue_scores

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # graph model
    "Corpus",
    "AdjacencyView",
    "build_corpus",
    "validate_dag",
    # matrices
    "SparseMatrix",
    "publication_matrix",
    "contribution_matrix",
    "citation_matrix",
    "reputation_matrix",
    "weight_matrix",
    "spmv",
    "spmv_transposed",
    # engine
    "IterationConfig",
    "ConvergenceReport",
    "RunResult",
    "run",
    "adjusted_paper_scores",
    "author_update",
    "paper_update",
    "citation_boost",
    "reputation_boost",
    "normalize_l1",
    # classic metrics
    "MetricsRecord",
    "author_metrics",
    "authors_per_paper",
    "citation_counts",
    "h_index",
    "g_index",
    "e_index",
    "significant_papers",
    "top_k_citations",
    # venues
    "VenueAssignment",
    "VenueScore",
    "venue_scores",
    # datasets
    "Dataset",
    "load_dataset",
    "parse_dataset",
    "serialize_dataset",
    "write_dataset",
    # errors
    "CitexError",
    "CorpusError",
    "DuplicateIdError",
    "UnknownReferenceError",
    "OrphanPaperError",
    "SelfCitationError",
    "SelfRatingError",
    "NegativeWeightError",
    "CitationCycleError",
    "DimensionMismatchError",
    "ZeroColumnSumError",
    "ZeroVectorError",
    "DatasetError",
    "DuplicateEdgeWarning",
]
