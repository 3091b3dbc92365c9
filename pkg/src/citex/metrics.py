"""Classic per-author citation metrics, for comparison with the iterative scores."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .graph import Corpus

__all__ = [
    "MetricsRecord",
    "citation_counts",
    "h_index",
    "g_index",
    "e_index",
    "significant_papers",
    "top_k_citations",
    "authors_per_paper",
    "author_metrics",
]


def citation_counts(corpus: Corpus, exclude_self_citations: bool = False) -> list[int]:
    """Citations received per paper, in paper order.

    With ``exclude_self_citations`` set, citations between papers sharing at
    least one author are not counted.
    """
    adj = corpus.adjacency
    if not exclude_self_citations:
        return [len(citers) for citers in adj.cited_by]
    author_sets = [frozenset(a) for a in adj.authors_of]
    counts = [0] * corpus.num_papers
    for citing, cited in corpus.citations:
        if author_sets[citing].isdisjoint(author_sets[cited]):
            counts[cited] += 1
    return counts


def h_index(citations: Sequence[int]) -> int:
    """Largest h such that h papers have at least h citations each."""
    ranked = sorted(citations, reverse=True)
    h = 0
    for i, c in enumerate(ranked, 1):
        if c >= i:
            h = i
        else:
            break
    return h


def g_index(citations: Sequence[int]) -> int:
    """Largest g such that the g most-cited papers have >= g^2 citations combined.

    Capped at the number of papers (no fictitious zero-cited padding), so the
    index saturates once average citations exceed the paper count.
    """
    ranked = sorted(citations, reverse=True)
    total = 0
    g = 0
    for i, c in enumerate(ranked, 1):
        total += c
        if total >= i * i:
            g = i
        else:
            break
    return g


def e_index(citations: Sequence[int]) -> float:
    """Square root of the h-core's citations in excess of h^2."""
    h = h_index(citations)
    core = sorted(citations, reverse=True)[:h]
    return math.sqrt(max(sum(core) - h * h, 0))


def significant_papers(citations: Sequence[int], c: int) -> int:
    """Number of papers with strictly more than c citations."""
    if c < 0:
        raise ValueError("c must be >= 0")
    return sum(1 for v in citations if v > c)


def top_k_citations(citations: Sequence[int], k: int) -> int:
    """Total citations of the k most-cited papers (all papers when k exceeds N_p)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return sum(sorted(citations, reverse=True)[:k])


def authors_per_paper(corpus: Corpus) -> float:
    """Corpus-level average number of authors per paper (0 for an empty corpus)."""
    if corpus.num_papers == 0:
        return 0.0
    return len(corpus.authorship) / corpus.num_papers


@dataclass(frozen=True)
class MetricsRecord:
    """Every classic metric for one author.

    ``ratios_defined`` is False for authors with no papers, in which case the
    per-paper ratio is reported as 0. ``significant_papers`` and
    ``top_k_citations`` are None unless c / k were supplied.
    """

    author: str
    papers: int
    citations: int
    citations_per_paper: float
    citations_per_author: float
    papers_per_author: float
    h_index: int
    g_index: int
    e_index: float
    significant_papers: int | None = None
    top_k_citations: int | None = None
    ratios_defined: bool = True


def author_metrics(
    corpus: Corpus,
    c: int | None = None,
    k: int | None = None,
    exclude_self_citations: bool = False,
) -> list[MetricsRecord]:
    """Compute a :class:`MetricsRecord` for every author, in author order.

    ``c`` sets the threshold for the significant-paper count (strictly more
    than c citations); ``k`` selects how many top papers the top-k citation
    total covers. Either may be None to skip that metric.
    """
    adj = corpus.adjacency
    per_paper = citation_counts(corpus, exclude_self_citations=exclude_self_citations)
    records = []
    for i, author in enumerate(corpus.authors):
        papers = adj.papers_of[i]
        cites = [per_paper[j] for j in papers]
        n_p = len(papers)
        n_c = sum(cites)
        records.append(
            MetricsRecord(
                author=author,
                papers=n_p,
                citations=n_c,
                citations_per_paper=n_c / n_p if n_p else 0.0,
                citations_per_author=sum(per_paper[j] / len(adj.authors_of[j]) for j in papers),
                papers_per_author=sum(1.0 / len(adj.authors_of[j]) for j in papers),
                h_index=h_index(cites),
                g_index=g_index(cites),
                e_index=e_index(cites),
                significant_papers=significant_papers(cites, c) if c is not None else None,
                top_k_citations=top_k_citations(cites, k) if k is not None else None,
                ratios_defined=n_p > 0,
            )
        )
    return records
