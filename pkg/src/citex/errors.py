"""Exception and warning types shared across the package."""

from __future__ import annotations


class CitexError(Exception):
    """Base class for every error this package raises deliberately."""


class CorpusError(CitexError):
    """A corpus violates one of its structural invariants."""


class DuplicateIdError(CorpusError):
    """An author or paper identifier appears more than once."""


class UnknownReferenceError(CorpusError):
    """An edge names an author or paper that was never declared."""


class OrphanPaperError(CorpusError):
    """A paper has no authors (the per-paper weight split would divide by zero)."""


class SelfCitationError(CorpusError):
    """A paper cites itself."""


class SelfRatingError(CorpusError):
    """An author rates themself in the reputation edges."""


class NegativeWeightError(CorpusError):
    """An authorship weight or reputation rating is negative or non-finite."""


class CitationCycleError(CorpusError):
    """The citation edges contain a directed cycle.

    ``cycle`` lists the members in citation order, closed back to the start,
    e.g. ``["p1", "p2", "p1"]``.
    """

    def __init__(self, cycle):
        self.cycle = list(cycle)
        arrows = " -> ".join(str(p) for p in self.cycle)
        super().__init__(f"citation graph has a cycle: {arrows}")


class DimensionMismatchError(CitexError):
    """Operand shapes do not agree."""


class ZeroColumnSumError(CitexError):
    """A paper's authorship weights sum to zero, so they cannot be split."""


class ZeroVectorError(CitexError):
    """A score vector sums to zero and cannot be normalized (degenerate corpus)."""


class DatasetError(CitexError):
    """A dataset file cannot be parsed; the message carries the location."""


class DuplicateEdgeWarning(UserWarning):
    """Duplicate input edges were collapsed to a single edge."""
