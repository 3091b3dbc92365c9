"""Command-line interface.

Subcommands: ``rank`` (iterative scores plus ranked tables), ``metrics``
(classic per-author indices), ``venues`` (average scores per venue), and
``validate`` (structural checks only). Exit codes: 0 success, 1 validation
or data error, 2 usage error. Reaching the iteration cap is reported as a
warning on stderr, not a failure.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from .dataset import Dataset, load_dataset
from .engine import IterationConfig, run
from .errors import CitexError
from .graph import validate_dag
from .metrics import author_metrics
from .report import (
    build_rank_report,
    metrics_json_doc,
    mode_name,
    render_json,
    render_metrics_csv,
    render_metrics_table,
    render_rank_csv,
    render_rank_json_doc,
    render_rank_table,
    render_venues_csv,
    render_venues_table,
    venues_json_doc,
)
from .venues import VenueAssignment, venue_scores

__all__ = ["build_parser", "cli_main", "main"]


def _positive_float(value: str) -> float:
    x = float(value)
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {value}")
    return x


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return n


def _non_negative_int(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return n


def _add_engine_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-iters", type=_positive_int, default=100, help="iteration cap (default 100)")
    parser.add_argument(
        "--tol",
        type=_positive_float,
        default=1e-9,
        help="L1 convergence tolerance on successive normalized vectors (default 1e-9)",
    )
    parser.add_argument("--weighted", action="store_true", help="use raw contribution weights")
    parser.add_argument("--reputation", action="store_true", help="enable the author-rating boost")


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--output-format",
        choices=("table", "json", "csv"),
        default="table",
        help="output format (default table)",
    )
    parser.add_argument("--output", type=Path, default=None, help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="citex",
        description="Author/paper importance scores for publication networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rank = sub.add_parser("rank", help="run the score iteration and print ranked tables")
    p_rank.add_argument("dataset", help="dataset file (JSON) or CSV directory")
    _add_engine_flags(p_rank)
    _add_output_flags(p_rank)
    p_rank.set_defaults(func=_cmd_rank)

    p_metrics = sub.add_parser("metrics", help="classic citation metrics per author")
    p_metrics.add_argument("dataset", help="dataset file (JSON) or CSV directory")
    p_metrics.add_argument("--c", type=_non_negative_int, required=True,
                           help="threshold for the significant-paper count (strictly more than c citations)")
    p_metrics.add_argument("--k", type=_non_negative_int, required=True,
                           help="number of top papers for the top-k citation total")
    p_metrics.add_argument("--exclude-self-citations", action="store_true",
                           help="ignore citations between papers sharing an author")
    _add_output_flags(p_metrics)
    p_metrics.set_defaults(func=_cmd_metrics)

    p_venues = sub.add_parser("venues", help="average scores per journal/conference")
    p_venues.add_argument("dataset", help="dataset file (JSON) or CSV directory with venue labels")
    _add_engine_flags(p_venues)
    _add_output_flags(p_venues)
    p_venues.set_defaults(func=_cmd_venues)

    p_validate = sub.add_parser("validate", help="structural validation and citation DAG check only")
    p_validate.add_argument("dataset", help="dataset file (JSON) or CSV directory")
    p_validate.set_defaults(func=_cmd_validate)

    return parser


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def _load(path: str) -> Dataset:
    """Load a dataset, forwarding collapsed-duplicate warnings to stderr."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        dataset = load_dataset(path)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return dataset


def _engine_config(args: argparse.Namespace) -> IterationConfig:
    return IterationConfig(
        max_iterations=args.max_iters,
        tolerance=args.tol,
        weighted=args.weighted,
        reputation=args.reputation,
    )


def _cmd_rank(args: argparse.Namespace) -> int:
    dataset = _load(args.dataset)
    config = _engine_config(args)
    result = run(dataset.corpus, config)
    assignment = None
    if dataset.venues:
        assignment = VenueAssignment.from_mapping(dataset.corpus, dataset.venues)
    report = build_rank_report(dataset.corpus, result, config, assignment)
    if args.output_format == "json":
        _emit(render_json(render_rank_json_doc(report)), args.output)
    elif args.output_format == "csv":
        _emit(render_rank_csv(report), args.output)
    else:
        _emit(render_rank_table(report), args.output)
    if not result.report.converged:
        print(
            f"warning: stopped after {result.report.iterations} iterations without "
            f"converging (tolerance {config.tolerance:g}); scores may still be moving",
            file=sys.stderr,
        )
    return 0


def _cmd_metrics(args: argparse.Namespace) -> int:
    dataset = _load(args.dataset)
    records = author_metrics(
        dataset.corpus, c=args.c, k=args.k, exclude_self_citations=args.exclude_self_citations
    )
    if args.output_format == "json":
        doc = metrics_json_doc(dataset.corpus, records, args.c, args.k, args.exclude_self_citations)
        _emit(render_json(doc), args.output)
    elif args.output_format == "csv":
        _emit(render_metrics_csv(records), args.output)
    else:
        _emit(render_metrics_table(dataset.corpus, records, args.c, args.k), args.output)
    return 0


def _cmd_venues(args: argparse.Namespace) -> int:
    dataset = _load(args.dataset)
    if not dataset.venues:
        print("error: dataset has no venue labels (add a 'venue' field to papers)", file=sys.stderr)
        return 1
    config = _engine_config(args)
    result = run(dataset.corpus, config)
    assignment = VenueAssignment.from_mapping(dataset.corpus, dataset.venues)
    rows = venue_scores(assignment, result.author_scores, result.paper_scores)
    if args.output_format == "json":
        _emit(render_json(venues_json_doc(rows, mode_name(config))), args.output)
    elif args.output_format == "csv":
        _emit(render_venues_csv(rows), args.output)
    else:
        _emit(render_venues_table(rows), args.output)
    if not result.report.converged:
        print(
            f"warning: stopped after {result.report.iterations} iterations without converging",
            file=sys.stderr,
        )
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    dataset = _load(args.dataset)
    corpus = dataset.corpus
    validate_dag(corpus.citations, corpus.num_papers)
    print(
        f"ok: {corpus.num_authors} authors, {corpus.num_papers} papers, "
        f"{len(corpus.authorship)} authorship edges, {len(corpus.citations)} citations, "
        f"{len(corpus.reputation)} reputation edges; citation graph is acyclic"
    )
    return 0


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except CitexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())
