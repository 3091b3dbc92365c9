"""Coupled author/paper score iteration.

One full iteration, in order:

1. author scores from the current paper scores, through the per-paper
   weight split (each paper's score divides among its authors);
2. optional reputation boost: each author absorbs the scores of the
   authors who rated them;
3. paper scores from the new author scores (sum over a paper's authors);
4. citation boost: each paper absorbs its citers' scores;
5. L1 normalization of both vectors.

This is normalized power iteration on a non-negative operator, so from any
non-negative, non-zero start the vectors settle into the direction of the
principal eigenvector; iteration stops when both normalized vectors change
by at most ``tolerance`` in L1, or after ``max_iterations``. Hitting the
iteration cap is not an error — the report carries the termination reason.

A run is a single logical sequence; distinct corpora may be ranked
concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ZeroVectorError
from .graph import Corpus
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

__all__ = [
    "IterationConfig",
    "ConvergenceReport",
    "RunResult",
    "adjusted_paper_scores",
    "author_update",
    "paper_update",
    "citation_boost",
    "reputation_boost",
    "normalize_l1",
    "run",
]

#: Score vectors are plain 1-D float arrays; after :func:`normalize_l1` all
#: entries lie in [0, 1] and sum to 1.
ScoreVector = np.ndarray


@dataclass(frozen=True)
class IterationConfig:
    """Iteration controls.

    ``weighted`` ranks with raw contribution weights instead of the 0-1
    authorship pattern; ``reputation`` enables the author-rating boost.
    """

    max_iterations: int = 100
    tolerance: float = 1e-9
    weighted: bool = False
    reputation: bool = False

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be > 0")


@dataclass(frozen=True)
class ConvergenceReport:
    """Diagnostics for one run.

    ``author_deltas``/``paper_deltas`` hold the L1 change of the normalized
    vectors at every iteration. The residuals measure how much one further
    full normalized update would still move the final vectors (a fixed-point
    check). ``eigenvalue_estimate`` is the growth ratio of the raw paper
    vector over the last iteration — an estimate of the dominant eigenvalue
    of the composite update operator.
    """

    iterations: int
    termination: str  # "converged" or "max_iterations"
    author_deltas: tuple[float, ...]
    paper_deltas: tuple[float, ...]
    author_residual: float
    paper_residual: float
    eigenvalue_estimate: float

    @property
    def converged(self) -> bool:
        return self.termination == "converged"


@dataclass(frozen=True)
class RunResult:
    author_scores: ScoreVector
    paper_scores: ScoreVector
    report: ConvergenceReport


def normalize_l1(values) -> ScoreVector:
    """Scale a non-negative vector so its entries sum to 1.

    Raises :class:`ZeroVectorError` when the sum is zero (degenerate corpus
    or an all-zero start vector).
    """
    v = np.asarray(values, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError("expected a 1-D vector")
    if not np.all(np.isfinite(v)) or np.any(v < 0):
        raise ValueError("scores must be finite and non-negative")
    total = v.sum()
    if total <= 0.0:
        raise ZeroVectorError("cannot normalize: vector sums to zero")
    return v / total


def adjusted_paper_scores(paper_scores, corpus: Corpus) -> np.ndarray:
    """Divide each paper's score by its number of authors (per-author share)."""
    y = np.asarray(paper_scores, dtype=np.float64)
    counts = np.array([len(a) for a in corpus.adjacency.authors_of], dtype=np.float64)
    return y / counts


def author_update(weights: SparseMatrix, paper_scores) -> np.ndarray:
    """New author scores: each author sums the adjusted scores of their papers.

    ``weights`` is the column-normalized matrix from :func:`weight_matrix`,
    so the division by author count is already folded in.
    """
    return spmv(weights, paper_scores)


def paper_update(incidence: SparseMatrix, author_scores) -> np.ndarray:
    """New paper scores: each paper sums its authors' scores.

    ``incidence`` is the 0-1 publication matrix, or the raw contribution
    matrix in weighted mode.
    """
    return spmv_transposed(incidence, author_scores)


def citation_boost(citation: SparseMatrix, paper_scores) -> np.ndarray:
    """Add to each paper the scores of the papers citing it."""
    y = np.asarray(paper_scores, dtype=np.float64)
    return y + spmv_transposed(citation, y)


def reputation_boost(reputation: SparseMatrix, author_scores) -> np.ndarray:
    """Add to each author the rating-weighted scores of the authors rating them."""
    x = np.asarray(author_scores, dtype=np.float64)
    return x + spmv_transposed(reputation, x)


def run(
    corpus: Corpus,
    config: IterationConfig | None = None,
    initial_paper_scores=None,
) -> RunResult:
    """Iterate to the coupled author/paper fixed point.

    Starts from all-ones paper scores unless ``initial_paper_scores`` is
    given (any non-negative, non-zero vector). Returns the final normalized
    vectors plus a convergence report.
    """
    cfg = config if config is not None else IterationConfig()
    incidence = contribution_matrix(corpus) if cfg.weighted else publication_matrix(corpus)
    weights = weight_matrix(incidence)
    citation = citation_matrix(corpus)
    rated = reputation_matrix(corpus) if cfg.reputation else None

    start = np.ones(corpus.num_papers) if initial_paper_scores is None else initial_paper_scores
    y = normalize_l1(start)
    x = normalize_l1(np.ones(corpus.num_authors))

    def full_update(current_y):
        x_raw = author_update(weights, current_y)
        if rated is not None:
            x_raw = reputation_boost(rated, x_raw)
        y_raw = citation_boost(citation, paper_update(incidence, x_raw))
        return x_raw, y_raw

    author_deltas: list[float] = []
    paper_deltas: list[float] = []
    eigenvalue = float("nan")
    converged = False
    iterations = 0
    for _ in range(cfg.max_iterations):
        x_raw, y_raw = full_update(y)
        eigenvalue = float(y_raw.sum())  # y is normalized, so this is the growth ratio
        x_new = normalize_l1(x_raw)
        y_new = normalize_l1(y_raw)
        author_deltas.append(float(np.abs(x_new - x).sum()))
        paper_deltas.append(float(np.abs(y_new - y).sum()))
        x, y = x_new, y_new
        iterations += 1
        if author_deltas[-1] <= cfg.tolerance and paper_deltas[-1] <= cfg.tolerance:
            converged = True
            break

    # Fixed-point residuals from one extra update; not part of the result.
    x_hat_raw, y_hat_raw = full_update(y)
    author_residual = float(np.abs(normalize_l1(x_hat_raw) - x).sum())
    paper_residual = float(np.abs(normalize_l1(y_hat_raw) - y).sum())

    report = ConvergenceReport(
        iterations=iterations,
        termination="converged" if converged else "max_iterations",
        author_deltas=tuple(author_deltas),
        paper_deltas=tuple(paper_deltas),
        author_residual=author_residual,
        paper_residual=paper_residual,
        eigenvalue_estimate=eigenvalue,
    )
    return RunResult(author_scores=x, paper_scores=y, report=report)
