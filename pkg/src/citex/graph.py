"""Corpus data model: authors, papers, and the edges between them.

A :class:`Corpus` holds the bipartite authorship relation, the directed
citation relation over papers, and an optional author-to-author reputation
relation. Construction via :func:`build_corpus` validates every structural
invariant the numerical layers rely on: identifiers are unique, every paper
has at least one author, citations are acyclic with no self-loops, and all
weights are finite and non-negative.

Corpus and AdjacencyView are immutable after construction and safe for
concurrent reads; construction itself is single-threaded.
"""

from __future__ import annotations

import heapq
import warnings
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    CitationCycleError,
    DuplicateEdgeWarning,
    DuplicateIdError,
    NegativeWeightError,
    OrphanPaperError,
    SelfCitationError,
    SelfRatingError,
    UnknownReferenceError,
)

__all__ = ["Corpus", "AdjacencyView", "build_corpus", "validate_dag"]


@dataclass(frozen=True)
class Corpus:
    """Validated publication corpus with dense 0-based node indices.

    ``authors`` and ``papers`` fix the index assignment: the author at list
    position ``i`` has dense index ``i`` (likewise papers). Edges are stored
    as index tuples, sorted, with no duplicates:

    * ``authorship``: ``(author, paper, weight)`` triples, weight >= 0
      (1.0 unless the input said otherwise);
    * ``citations``: ``(citing, cited)`` pairs forming a DAG;
    * ``reputation``: ``(rater, rated, rating)`` triples, rating >= 0.
    """

    authors: tuple[str, ...]
    papers: tuple[str, ...]
    authorship: tuple[tuple[int, int, float], ...]
    citations: tuple[tuple[int, int], ...]
    reputation: tuple[tuple[int, int, float], ...] = ()

    @property
    def num_authors(self) -> int:
        return len(self.authors)

    @property
    def num_papers(self) -> int:
        return len(self.papers)

    @cached_property
    def author_index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.authors)}

    @cached_property
    def paper_index(self) -> dict[str, int]:
        return {p: j for j, p in enumerate(self.papers)}

    @cached_property
    def adjacency(self) -> "AdjacencyView":
        return AdjacencyView.from_corpus(self)


@dataclass(frozen=True)
class AdjacencyView:
    """Per-node neighbour lists derived from a corpus, as sorted index tuples.

    * ``papers_of[i]`` — papers written by author ``i``;
    * ``authors_of[j]`` — authors of paper ``j`` (never empty);
    * ``cited_by[j]`` — papers that cite paper ``j``;
    * ``references[j]`` — papers that paper ``j`` cites (accessor only,
      no update rule reads it);
    * ``raters_of[i]`` — authors who rated author ``i``.
    """

    papers_of: tuple[tuple[int, ...], ...]
    authors_of: tuple[tuple[int, ...], ...]
    cited_by: tuple[tuple[int, ...], ...]
    references: tuple[tuple[int, ...], ...]
    raters_of: tuple[tuple[int, ...], ...]

    @classmethod
    def from_corpus(cls, corpus: Corpus) -> "AdjacencyView":
        m, n = corpus.num_authors, corpus.num_papers
        papers_of: list[list[int]] = [[] for _ in range(m)]
        authors_of: list[list[int]] = [[] for _ in range(n)]
        for a, p, _w in corpus.authorship:
            papers_of[a].append(p)
            authors_of[p].append(a)
        cited_by: list[list[int]] = [[] for _ in range(n)]
        references: list[list[int]] = [[] for _ in range(n)]
        for citing, cited in corpus.citations:
            cited_by[cited].append(citing)
            references[citing].append(cited)
        raters_of: list[list[int]] = [[] for _ in range(m)]
        for rater, rated, _r in corpus.reputation:
            raters_of[rated].append(rater)
        freeze = lambda lists: tuple(tuple(sorted(xs)) for xs in lists)
        return cls(
            papers_of=freeze(papers_of),
            authors_of=freeze(authors_of),
            cited_by=freeze(cited_by),
            references=freeze(references),
            raters_of=freeze(raters_of),
        )


def _index_nodes(ids: Iterable[str], kind: str) -> tuple[tuple[str, ...], dict[str, int]]:
    ordered: list[str] = []
    index: dict[str, int] = {}
    for node_id in ids:
        node_id = str(node_id)
        if node_id in index:
            raise DuplicateIdError(f"duplicate {kind} id {node_id!r}")
        index[node_id] = len(ordered)
        ordered.append(node_id)
    return tuple(ordered), index


def _check_weight(value, what: str) -> float:
    try:
        w = float(value)
    except (TypeError, ValueError):
        raise NegativeWeightError(f"{what} is not a number: {value!r}") from None
    if not (0.0 <= w < float("inf")):  # also rejects NaN
        raise NegativeWeightError(f"{what} must be finite and >= 0, got {value!r}")
    return w


def build_corpus(
    authors: Iterable[str],
    papers: Iterable[str],
    authorship: Iterable[Sequence],
    citations: Iterable[Sequence] = (),
    reputation: Iterable[Sequence] = (),
) -> Corpus:
    """Build a validated :class:`Corpus` from string-id records.

    ``authorship`` rows are ``(author_id, paper_id)`` or
    ``(author_id, paper_id, weight)``; ``citations`` rows are
    ``(citing_id, cited_id)``; ``reputation`` rows are
    ``(rater_id, rated_id, rating)`` (rating optional, default 1).

    Duplicate edges collapse to one with a :class:`DuplicateEdgeWarning`
    (first weight wins). Raises on duplicate ids, unknown references,
    authorless papers, self-citations, citation cycles, self-ratings, and
    negative or non-finite weights.
    """
    author_ids, author_index = _index_nodes(authors, "author")
    paper_ids, paper_index = _index_nodes(papers, "paper")

    edges: dict[tuple[int, int], float] = {}
    for row in authorship:
        author_id, paper_id = str(row[0]), str(row[1])
        weight = _check_weight(row[2], f"authorship weight for ({author_id}, {paper_id})") if len(row) > 2 else 1.0
        if author_id not in author_index:
            raise UnknownReferenceError(f"authorship edge names unknown author {author_id!r}")
        if paper_id not in paper_index:
            raise UnknownReferenceError(f"authorship edge names unknown paper {paper_id!r}")
        key = (author_index[author_id], paper_index[paper_id])
        if key in edges:
            warnings.warn(
                f"duplicate authorship edge ({author_id}, {paper_id}) collapsed",
                DuplicateEdgeWarning,
                stacklevel=2,
            )
            continue
        edges[key] = weight

    authored = {p for (_a, p) in edges}
    orphans = [paper_ids[j] for j in range(len(paper_ids)) if j not in authored]
    if orphans:
        raise OrphanPaperError(f"papers with no authors: {', '.join(orphans)}")

    cite_edges: set[tuple[int, int]] = set()
    for row in citations:
        citing_id, cited_id = str(row[0]), str(row[1])
        if citing_id not in paper_index:
            raise UnknownReferenceError(f"citation edge names unknown paper {citing_id!r}")
        if cited_id not in paper_index:
            raise UnknownReferenceError(f"citation edge names unknown paper {cited_id!r}")
        if citing_id == cited_id:
            raise SelfCitationError(f"paper {citing_id!r} cites itself")
        key = (paper_index[citing_id], paper_index[cited_id])
        if key in cite_edges:
            warnings.warn(
                f"duplicate citation edge ({citing_id}, {cited_id}) collapsed",
                DuplicateEdgeWarning,
                stacklevel=2,
            )
            continue
        cite_edges.add(key)

    try:
        validate_dag(cite_edges, len(paper_ids))
    except CitationCycleError as exc:
        raise CitationCycleError([paper_ids[j] for j in exc.cycle]) from None

    rep_edges: dict[tuple[int, int], float] = {}
    for row in reputation:
        rater_id, rated_id = str(row[0]), str(row[1])
        rating = _check_weight(row[2], f"rating for ({rater_id}, {rated_id})") if len(row) > 2 else 1.0
        if rater_id not in author_index:
            raise UnknownReferenceError(f"reputation edge names unknown author {rater_id!r}")
        if rated_id not in author_index:
            raise UnknownReferenceError(f"reputation edge names unknown author {rated_id!r}")
        if rater_id == rated_id:
            raise SelfRatingError(f"author {rater_id!r} rates themself")
        key = (author_index[rater_id], author_index[rated_id])
        if key in rep_edges:
            warnings.warn(
                f"duplicate reputation edge ({rater_id}, {rated_id}) collapsed",
                DuplicateEdgeWarning,
                stacklevel=2,
            )
            continue
        rep_edges[key] = rating

    return Corpus(
        authors=author_ids,
        papers=paper_ids,
        authorship=tuple(sorted((a, p, w) for (a, p), w in edges.items())),
        citations=tuple(sorted(cite_edges)),
        reputation=tuple(sorted((a, b, r) for (a, b), r in rep_edges.items())),
    )


def validate_dag(citations: Iterable[tuple[int, int]], paper_count: int) -> list[int]:
    """Order papers so that every citation points from an earlier position
    to a later one ("newest first").

    Permuting the citation matrix rows and columns by the returned order
    makes it strictly upper-triangular. The order is deterministic: among
    simultaneously available papers, the lowest input index comes first.

    Raises :class:`CitationCycleError` (carrying one offending cycle as a
    list of indices) when no such order exists.
    """
    out_edges: dict[int, set[int]] = defaultdict(set)
    in_degree = [0] * paper_count
    for citing, cited in citations:
        if cited not in out_edges[citing]:
            out_edges[citing].add(cited)
            in_degree[cited] += 1

    ready = [j for j in range(paper_count) if in_degree[j] == 0]
    heapq.heapify(ready)
    order: list[int] = []
    while ready:
        j = heapq.heappop(ready)
        order.append(j)
        for k in sorted(out_edges[j]):
            in_degree[k] -= 1
            if in_degree[k] == 0:
                heapq.heappush(ready, k)

    if len(order) < paper_count:
        raise CitationCycleError(_find_cycle(out_edges, in_degree))
    return order


def _find_cycle(out_edges: dict[int, set[int]], in_degree: list[int]) -> list[int]:
    """Extract one directed cycle from the nodes Kahn's algorithm left behind."""
    remaining = {j for j, d in enumerate(in_degree) if d > 0}
    preds: dict[int, list[int]] = defaultdict(list)
    for j, targets in out_edges.items():
        if j in remaining:
            for k in targets:
                if k in remaining:
                    preds[k].append(j)
    # Every remaining node has a remaining predecessor, so walking
    # predecessors must revisit a node.
    start = min(remaining)
    path = [start]
    seen = {start: 0}
    while True:
        prev = min(preds[path[-1]])
        if prev in seen:
            tail = path[seen[prev] + 1 :]
            return [prev] + tail[::-1] + [prev]
        seen[prev] = len(path)
        path.append(prev)
