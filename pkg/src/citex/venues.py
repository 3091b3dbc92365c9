"""Venue quality estimates: average converged scores over a venue's members."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import DimensionMismatchError, UnknownReferenceError
from .graph import Corpus

__all__ = ["VenueAssignment", "VenueScore", "venue_scores"]


@dataclass(frozen=True)
class VenueAssignment:
    """Maps papers to venues, with the derived author-side view.

    ``paper_venue[j]`` is paper j's venue id or None; ``author_venues[i]`` is
    the set of venues author i has published in. ``venues`` lists all venue
    ids (sorted), including declared venues with no papers.
    """

    paper_venue: tuple[str | None, ...]
    author_venues: tuple[frozenset[str], ...]
    venues: tuple[str, ...]

    @classmethod
    def from_mapping(
        cls,
        corpus: Corpus,
        paper_to_venue: Mapping[str, str],
        extra_venues: Iterable[str] = (),
    ) -> "VenueAssignment":
        """Build an assignment from a {paper id: venue id} mapping.

        Raises :class:`UnknownReferenceError` for paper ids not in the corpus.
        ``extra_venues`` declares venues to report even if empty.
        """
        venue_of: list[str | None] = [None] * corpus.num_papers
        for paper_id, venue in paper_to_venue.items():
            j = corpus.paper_index.get(str(paper_id))
            if j is None:
                raise UnknownReferenceError(f"venue assignment names unknown paper {paper_id!r}")
            venue_of[j] = str(venue)
        adj = corpus.adjacency
        author_venues = tuple(
            frozenset(venue_of[j] for j in adj.papers_of[i] if venue_of[j] is not None)
            for i in range(corpus.num_authors)
        )
        names = {v for v in venue_of if v is not None}
        names.update(str(v) for v in extra_venues)
        return cls(
            paper_venue=tuple(venue_of),
            author_venues=author_venues,
            venues=tuple(sorted(names)),
        )


@dataclass(frozen=True)
class VenueScore:
    """Average scores for one venue; averages are None when the venue is empty.

    Authors contributing to several of a venue's papers count once for that
    venue (and fully again in any other venue they publish in).
    """

    venue: str
    paper_count: int
    author_count: int
    avg_paper_score: float | None
    avg_author_score: float | None


def venue_scores(
    assignment: VenueAssignment,
    author_scores,
    paper_scores,
) -> list[VenueScore]:
    """Per-venue mean of member papers' scores and contributing authors' scores."""
    x = np.asarray(author_scores, dtype=np.float64)
    y = np.asarray(paper_scores, dtype=np.float64)
    if y.shape != (len(assignment.paper_venue),):
        raise DimensionMismatchError(
            f"paper scores: expected length {len(assignment.paper_venue)}, got shape {y.shape}"
        )
    if x.shape != (len(assignment.author_venues),):
        raise DimensionMismatchError(
            f"author scores: expected length {len(assignment.author_venues)}, got shape {x.shape}"
        )
    results = []
    for venue in assignment.venues:
        papers = [j for j, v in enumerate(assignment.paper_venue) if v == venue]
        authors = [i for i, vs in enumerate(assignment.author_venues) if venue in vs]
        results.append(
            VenueScore(
                venue=venue,
                paper_count=len(papers),
                author_count=len(authors),
                avg_paper_score=float(y[papers].mean()) if papers else None,
                avg_author_score=float(x[authors].mean()) if authors else None,
            )
        )
    return results
