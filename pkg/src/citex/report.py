"""Result assembly and rendering (plain table, JSON, CSV).

Table and CSV surfaces print scores with 6 decimal places; JSON carries
full-precision floats for downstream tooling plus an explicit
``schema_version`` field. All formats are byte-deterministic: two runs over
the same dataset produce identical output.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .engine import ConvergenceReport, IterationConfig, RunResult
from .graph import Corpus
from .metrics import MetricsRecord, author_metrics, authors_per_paper, citation_counts
from .venues import VenueAssignment, VenueScore, venue_scores

__all__ = [
    "SCHEMA_VERSION",
    "RankedAuthor",
    "RankedPaper",
    "RankReport",
    "build_rank_report",
    "render_rank_table",
    "render_rank_json_doc",
    "render_rank_csv",
    "metrics_json_doc",
    "render_metrics_table",
    "render_metrics_csv",
    "venues_json_doc",
    "render_venues_table",
    "render_venues_csv",
    "render_json",
]

SCHEMA_VERSION = 1


def mode_name(config: IterationConfig) -> str:
    if config.weighted and config.reputation:
        return "weighted+reputation"
    if config.weighted:
        return "weighted"
    if config.reputation:
        return "reputation"
    return "base"


def rank_positions(scores) -> list[int]:
    """Indices ordered by descending score; ties keep input order."""
    return list(np.argsort(-np.asarray(scores, dtype=np.float64), kind="stable"))


@dataclass(frozen=True)
class RankedAuthor:
    id: str
    rank: int
    score: float
    papers: int
    citations: int
    citations_per_paper: float
    citations_per_author: float
    papers_per_author: float
    h_index: int
    g_index: int
    e_index: float


@dataclass(frozen=True)
class RankedPaper:
    id: str
    rank: int
    score: float
    citations: int


@dataclass(frozen=True)
class RankReport:
    """The full ranking result: both ranked tables, convergence diagnostics,
    and the venue table when the dataset labels venues."""

    mode: str
    config: IterationConfig
    authors: tuple[RankedAuthor, ...]
    papers: tuple[RankedPaper, ...]
    convergence: ConvergenceReport
    venues: tuple[VenueScore, ...] | None


def build_rank_report(
    corpus: Corpus,
    result: RunResult,
    config: IterationConfig,
    assignment: VenueAssignment | None = None,
) -> RankReport:
    records = author_metrics(corpus)
    author_rows = []
    for rank, i in enumerate(rank_positions(result.author_scores), 1):
        rec: MetricsRecord = records[i]
        author_rows.append(
            RankedAuthor(
                id=corpus.authors[i],
                rank=rank,
                score=float(result.author_scores[i]),
                papers=rec.papers,
                citations=rec.citations,
                citations_per_paper=rec.citations_per_paper,
                citations_per_author=rec.citations_per_author,
                papers_per_author=rec.papers_per_author,
                h_index=rec.h_index,
                g_index=rec.g_index,
                e_index=rec.e_index,
            )
        )
    counts = citation_counts(corpus)
    paper_rows = []
    for rank, j in enumerate(rank_positions(result.paper_scores), 1):
        paper_rows.append(
            RankedPaper(
                id=corpus.papers[j],
                rank=rank,
                score=float(result.paper_scores[j]),
                citations=counts[j],
            )
        )
    venue_rows = None
    if assignment is not None:
        venue_rows = tuple(venue_scores(assignment, result.author_scores, result.paper_scores))
    return RankReport(
        mode=mode_name(config),
        config=config,
        authors=tuple(author_rows),
        papers=tuple(paper_rows),
        convergence=result.report,
        venues=venue_rows,
    )


# ---------------------------------------------------------------------------
# formatting helpers
# ---------------------------------------------------------------------------


def _score(x: float) -> str:
    return f"{x:.6f}"


def _tiny(x: float) -> str:
    return f"{x:.3e}"


def _opt_score(x: float | None) -> str:
    return "" if x is None else _score(x)


def _text_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip(),
        "  ".join("-" * widths[i] for i in range(len(headers))).rstrip(),
    ]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines)


def _csv_block(headers: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue()


def render_json(doc: dict) -> str:
    import json

    return json.dumps(doc, indent=2) + "\n"


def _convergence_summary(report: ConvergenceReport) -> list[tuple[str, str]]:
    last_dx = report.author_deltas[-1] if report.author_deltas else float("nan")
    last_dy = report.paper_deltas[-1] if report.paper_deltas else float("nan")
    return [
        ("iterations", str(report.iterations)),
        ("termination", report.termination),
        ("final_author_delta", _tiny(last_dx)),
        ("final_paper_delta", _tiny(last_dy)),
        ("author_residual", _tiny(report.author_residual)),
        ("paper_residual", _tiny(report.paper_residual)),
        ("eigenvalue_estimate", _score(report.eigenvalue_estimate)),
    ]


_AUTHOR_HEADERS = [
    "rank",
    "id",
    "score",
    "papers",
    "citations",
    "cites/paper",
    "cites/author",
    "papers/author",
    "h",
    "g",
    "e",
]

_PAPER_HEADERS = ["rank", "id", "score", "citations"]

_VENUE_HEADERS = ["venue", "papers", "authors", "avg_paper_score", "avg_author_score"]


def _author_cells(a: RankedAuthor) -> list[str]:
    return [
        str(a.rank),
        a.id,
        _score(a.score),
        str(a.papers),
        str(a.citations),
        _score(a.citations_per_paper),
        _score(a.citations_per_author),
        _score(a.papers_per_author),
        str(a.h_index),
        str(a.g_index),
        _score(a.e_index),
    ]


def _paper_cells(p: RankedPaper) -> list[str]:
    return [str(p.rank), p.id, _score(p.score), str(p.citations)]


def _venue_cells(v: VenueScore) -> list[str]:
    return [
        v.venue,
        str(v.paper_count),
        str(v.author_count),
        _opt_score(v.avg_paper_score),
        _opt_score(v.avg_author_score),
    ]


# ---------------------------------------------------------------------------
# rank output
# ---------------------------------------------------------------------------


def render_rank_table(report: RankReport) -> str:
    parts = [f"mode: {report.mode}"]
    parts.extend(f"{key}: {value}" for key, value in _convergence_summary(report.convergence))
    parts.append("")
    parts.append("authors:")
    parts.append(_text_table(_AUTHOR_HEADERS, [_author_cells(a) for a in report.authors]))
    parts.append("")
    parts.append("papers:")
    parts.append(_text_table(_PAPER_HEADERS, [_paper_cells(p) for p in report.papers]))
    if report.venues is not None:
        parts.append("")
        parts.append("venues:")
        parts.append(_text_table(_VENUE_HEADERS, [_venue_cells(v) for v in report.venues]))
    return "\n".join(parts) + "\n"


def render_rank_json_doc(report: RankReport) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "mode": report.mode,
        "convergence": {
            "iterations": report.convergence.iterations,
            "termination": report.convergence.termination,
            "max_iterations": report.config.max_iterations,
            "tolerance": report.config.tolerance,
            "author_deltas": list(report.convergence.author_deltas),
            "paper_deltas": list(report.convergence.paper_deltas),
            "author_residual": report.convergence.author_residual,
            "paper_residual": report.convergence.paper_residual,
            "eigenvalue_estimate": report.convergence.eigenvalue_estimate,
        },
        "authors": [
            {
                "id": a.id,
                "rank": a.rank,
                "score": a.score,
                "papers": a.papers,
                "citations": a.citations,
                "citations_per_paper": a.citations_per_paper,
                "citations_per_author": a.citations_per_author,
                "papers_per_author": a.papers_per_author,
                "h_index": a.h_index,
                "g_index": a.g_index,
                "e_index": a.e_index,
            }
            for a in report.authors
        ],
        "papers": [
            {"id": p.id, "rank": p.rank, "score": p.score, "citations": p.citations}
            for p in report.papers
        ],
    }
    if report.venues is not None:
        doc["venues"] = [
            {
                "venue": v.venue,
                "papers": v.paper_count,
                "authors": v.author_count,
                "avg_paper_score": v.avg_paper_score,
                "avg_author_score": v.avg_author_score,
            }
            for v in report.venues
        ]
    return doc


def render_rank_csv(report: RankReport) -> str:
    blocks = [
        "# convergence\n"
        + _csv_block(
            ["field", "value"],
            [[key, value] for key, value in [("mode", report.mode)] + _convergence_summary(report.convergence)],
        ),
        "# authors\n" + _csv_block(_AUTHOR_HEADERS, [_author_cells(a) for a in report.authors]),
        "# papers\n" + _csv_block(_PAPER_HEADERS, [_paper_cells(p) for p in report.papers]),
    ]
    if report.venues is not None:
        blocks.append("# venues\n" + _csv_block(_VENUE_HEADERS, [_venue_cells(v) for v in report.venues]))
    return "\n".join(blocks)


# ---------------------------------------------------------------------------
# metrics output
# ---------------------------------------------------------------------------

_METRIC_HEADERS = [
    "id",
    "papers",
    "citations",
    "cites/paper",
    "cites/author",
    "papers/author",
    "h",
    "g",
    "e",
    "significant",
    "top_k",
]


def _metric_cells(r: MetricsRecord) -> list[str]:
    return [
        r.author,
        str(r.papers),
        str(r.citations),
        _score(r.citations_per_paper),
        _score(r.citations_per_author),
        _score(r.papers_per_author),
        str(r.h_index),
        str(r.g_index),
        _score(r.e_index),
        "" if r.significant_papers is None else str(r.significant_papers),
        "" if r.top_k_citations is None else str(r.top_k_citations),
    ]


def render_metrics_table(corpus: Corpus, records: list[MetricsRecord], c: int, k: int) -> str:
    head = [
        f"significant threshold c={c}, top-k citations k={k}",
        f"authors/paper (corpus average): {_score(authors_per_paper(corpus))}",
        "",
    ]
    return "\n".join(head) + _text_table(_METRIC_HEADERS, [_metric_cells(r) for r in records]) + "\n"


def metrics_json_doc(
    corpus: Corpus, records: list[MetricsRecord], c: int, k: int, exclude_self_citations: bool
) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "c": c,
        "k": k,
        "exclude_self_citations": exclude_self_citations,
        "authors_per_paper": authors_per_paper(corpus),
        "authors": [
            {
                "id": r.author,
                "papers": r.papers,
                "citations": r.citations,
                "citations_per_paper": r.citations_per_paper,
                "citations_per_author": r.citations_per_author,
                "papers_per_author": r.papers_per_author,
                "h_index": r.h_index,
                "g_index": r.g_index,
                "e_index": r.e_index,
                "significant_papers": r.significant_papers,
                "top_k_citations": r.top_k_citations,
                "ratios_defined": r.ratios_defined,
            }
            for r in records
        ],
    }


def render_metrics_csv(records: list[MetricsRecord]) -> str:
    return _csv_block(_METRIC_HEADERS, [_metric_cells(r) for r in records])


# ---------------------------------------------------------------------------
# venues output
# ---------------------------------------------------------------------------


def render_venues_table(rows: list[VenueScore]) -> str:
    return _text_table(_VENUE_HEADERS, [_venue_cells(v) for v in rows]) + "\n"


def venues_json_doc(rows: list[VenueScore], mode: str) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "mode": mode,
        "venues": [
            {
                "venue": v.venue,
                "papers": v.paper_count,
                "authors": v.author_count,
                "avg_paper_score": v.avg_paper_score,
                "avg_author_score": v.avg_author_score,
            }
            for v in rows
        ],
    }


def render_venues_csv(rows: list[VenueScore]) -> str:
    return _csv_block(_VENUE_HEADERS, [_venue_cells(v) for v in rows])
