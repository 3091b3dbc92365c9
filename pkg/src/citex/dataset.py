"""Dataset ingestion and serialization.

Two on-disk forms are accepted:

* a single JSON document with sections ``authors``, ``papers``,
  ``authorship``, ``citations`` and optional ``reputation``; papers may carry
  an optional ``venue`` field;
* a directory of CSV files: ``authorship.csv`` (required; columns
  ``author,paper[,weight]``), ``citations.csv`` (``from,to``),
  ``reputation.csv`` (``from,to[,rating]``), plus optional node lists
  ``authors.csv`` (``id``) and ``papers.csv`` (``id[,venue]``) for paperless
  authors and venue labels.

Parsing reports the offending section/row on error and passes every
graph-level validation error through unchanged.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Any, Mapping

from .errors import DatasetError, UnknownReferenceError
from .graph import Corpus, build_corpus

__all__ = ["Dataset", "load_dataset", "parse_dataset", "serialize_dataset", "write_dataset"]

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Dataset:
    """A parsed corpus plus its optional venue labels (paper id -> venue id)."""

    corpus: Corpus
    venues: dict[str, str] = field(default_factory=dict)


def load_dataset(source: str | Path | IO[str]) -> Dataset:
    """Parse a dataset from a JSON file, a CSV directory, or an open stream."""
    if hasattr(source, "read"):
        return _from_document(_read_json(source, "<stream>"), "<stream>")
    path = Path(source)
    if not path.exists():
        raise DatasetError(f"{path}: no such file or directory")
    if path.is_dir():
        return _load_csv_dir(path)
    with open(path, encoding="utf-8") as fh:
        return _from_document(_read_json(fh, str(path)), str(path))


def parse_dataset(source: str | Path | IO[str]) -> Corpus:
    """Parse a dataset and return just the validated corpus."""
    return load_dataset(source).corpus


# ---------------------------------------------------------------------------
# JSON form
# ---------------------------------------------------------------------------


def _read_json(stream: IO[str], where: str) -> Any:
    try:
        return json.load(stream)
    except json.JSONDecodeError as exc:
        raise DatasetError(f"{where}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _node_id(entry: Any, section: str, idx: int) -> str:
    if isinstance(entry, str):
        return entry
    if isinstance(entry, Mapping):
        if "id" not in entry:
            raise DatasetError(f"{section}[{idx}]: missing field 'id'")
        return str(entry["id"])
    raise DatasetError(f"{section}[{idx}]: expected a string or an object with 'id'")


def _edge_field(entry: Any, section: str, idx: int, name: str) -> str:
    if not isinstance(entry, Mapping):
        raise DatasetError(f"{section}[{idx}]: expected an object")
    if name not in entry:
        raise DatasetError(f"{section}[{idx}]: missing field {name!r}")
    return str(entry[name])


def _number(entry: Mapping, section: str, idx: int, name: str, default: float) -> float:
    if name not in entry:
        return default
    try:
        return float(entry[name])
    except (TypeError, ValueError):
        raise DatasetError(f"{section}[{idx}]: field {name!r} is not a number: {entry[name]!r}") from None


def _section(doc: Mapping, name: str, required: bool) -> list:
    value = doc.get(name, [])
    if required and not value:
        raise DatasetError(f"no {name}")
    if not isinstance(value, list):
        raise DatasetError(f"section {name!r} must be a list")
    return value


def _from_document(doc: Any, where: str) -> Dataset:
    if not isinstance(doc, Mapping):
        raise DatasetError(f"{where}: top-level value must be an object")

    authors = [_node_id(e, "authors", i) for i, e in enumerate(_section(doc, "authors", required=True))]
    papers = []
    venues: dict[str, str] = {}
    for i, entry in enumerate(_section(doc, "papers", required=True)):
        paper_id = _node_id(entry, "papers", i)
        papers.append(paper_id)
        if isinstance(entry, Mapping) and entry.get("venue") is not None:
            venues[paper_id] = str(entry["venue"])

    author_set, paper_set = set(authors), set(papers)
    authorship = []
    for i, entry in enumerate(_section(doc, "authorship", required=False)):
        author = _edge_field(entry, "authorship", i, "author")
        paper = _edge_field(entry, "authorship", i, "paper")
        if author not in author_set:
            raise UnknownReferenceError(f"authorship[{i}]: unknown author {author!r}")
        if paper not in paper_set:
            raise UnknownReferenceError(f"authorship[{i}]: unknown paper {paper!r}")
        authorship.append((author, paper, _number(entry, "authorship", i, "weight", 1.0)))

    citations = []
    for i, entry in enumerate(_section(doc, "citations", required=False)):
        src = _edge_field(entry, "citations", i, "from")
        dst = _edge_field(entry, "citations", i, "to")
        if src not in paper_set:
            raise UnknownReferenceError(f"citations[{i}]: unknown paper {src!r}")
        if dst not in paper_set:
            raise UnknownReferenceError(f"citations[{i}]: unknown paper {dst!r}")
        citations.append((src, dst))

    reputation = []
    for i, entry in enumerate(_section(doc, "reputation", required=False)):
        src = _edge_field(entry, "reputation", i, "from")
        dst = _edge_field(entry, "reputation", i, "to")
        if src not in author_set:
            raise UnknownReferenceError(f"reputation[{i}]: unknown author {src!r}")
        if dst not in author_set:
            raise UnknownReferenceError(f"reputation[{i}]: unknown author {dst!r}")
        reputation.append((src, dst, _number(entry, "reputation", i, "rating", 1.0)))

    corpus = build_corpus(authors, papers, authorship, citations, reputation)
    return Dataset(corpus=corpus, venues=venues)


# ---------------------------------------------------------------------------
# CSV directory form
# ---------------------------------------------------------------------------


def _read_csv(path: Path, required_cols: tuple[str, ...]) -> list[tuple[int, dict[str, str]]]:
    """Rows of a CSV file as (line number, record); validates the header."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise DatasetError(f"{path.name}: empty file (expected a header row)")
        missing = [c for c in required_cols if c not in reader.fieldnames]
        if missing:
            raise DatasetError(f"{path.name}: missing column(s) {', '.join(missing)}")
        rows = []
        for record in reader:
            for col in required_cols:
                if not (record.get(col) or "").strip():
                    raise DatasetError(f"{path.name}:{reader.line_num}: empty {col!r} field")
            rows.append((reader.line_num, {k: (v or "").strip() for k, v in record.items() if k}))
        return rows


def _csv_number(row: dict[str, str], name: str, default: float, where: str) -> float:
    raw = row.get(name, "")
    if not raw:
        return default
    try:
        return float(raw)
    except ValueError:
        raise DatasetError(f"{where}: {name} is not a number: {raw!r}") from None


def _load_csv_dir(root: Path) -> Dataset:
    authorship_path = root / "authorship.csv"
    if not authorship_path.exists():
        raise DatasetError(f"{root}: missing authorship.csv")

    authors: list[str] = []
    papers: list[str] = []
    seen_authors: set[str] = set()
    seen_papers: set[str] = set()

    def add_author(a: str) -> None:
        if a not in seen_authors:
            seen_authors.add(a)
            authors.append(a)

    def add_paper(p: str) -> None:
        if p not in seen_papers:
            seen_papers.add(p)
            papers.append(p)

    venues: dict[str, str] = {}
    if (root / "authors.csv").exists():
        for _line, row in _read_csv(root / "authors.csv", ("id",)):
            add_author(row["id"])
    if (root / "papers.csv").exists():
        for _line, row in _read_csv(root / "papers.csv", ("id",)):
            add_paper(row["id"])
            if row.get("venue"):
                venues[row["id"]] = row["venue"]

    authorship = []
    for line, row in _read_csv(authorship_path, ("author", "paper")):
        add_author(row["author"])
        add_paper(row["paper"])
        weight = _csv_number(row, "weight", 1.0, f"authorship.csv:{line}")
        authorship.append((row["author"], row["paper"], weight))

    citations = []
    if (root / "citations.csv").exists():
        for line, row in _read_csv(root / "citations.csv", ("from", "to")):
            for endpoint in (row["from"], row["to"]):
                if endpoint not in seen_papers:
                    raise UnknownReferenceError(f"citations.csv:{line}: unknown paper {endpoint!r}")
            citations.append((row["from"], row["to"]))

    reputation = []
    if (root / "reputation.csv").exists():
        for line, row in _read_csv(root / "reputation.csv", ("from", "to")):
            for endpoint in (row["from"], row["to"]):
                if endpoint not in seen_authors:
                    raise UnknownReferenceError(f"reputation.csv:{line}: unknown author {endpoint!r}")
            rating = _csv_number(row, "rating", 1.0, f"reputation.csv:{line}")
            reputation.append((row["from"], row["to"], rating))

    if not authors:
        raise DatasetError("no authors")
    corpus = build_corpus(authors, papers, authorship, citations, reputation)
    return Dataset(corpus=corpus, venues=venues)


# ---------------------------------------------------------------------------
# Serialization (canonical JSON form)
# ---------------------------------------------------------------------------


def serialize_dataset(corpus: Corpus, venues: Mapping[str, str] | None = None) -> dict:
    """Render a corpus (plus optional venue labels) as the JSON document form.

    Feeding the result back through :func:`load_dataset` reproduces the same
    dense indices, edge sets, and venue labels.
    """
    venues = dict(venues or {})
    papers = []
    for p in corpus.papers:
        entry: dict[str, Any] = {"id": p}
        if p in venues:
            entry["venue"] = venues[p]
        papers.append(entry)
    return {
        "schema_version": SCHEMA_VERSION,
        "authors": [{"id": a} for a in corpus.authors],
        "papers": papers,
        "authorship": [
            {"author": corpus.authors[a], "paper": corpus.papers[p], "weight": w}
            for a, p, w in corpus.authorship
        ],
        "citations": [
            {"from": corpus.papers[j], "to": corpus.papers[k]} for j, k in corpus.citations
        ],
        "reputation": [
            {"from": corpus.authors[a], "to": corpus.authors[b], "rating": r}
            for a, b, r in corpus.reputation
        ],
    }


def write_dataset(path: str | Path, corpus: Corpus, venues: Mapping[str, str] | None = None) -> None:
    """Write the canonical JSON form to ``path``."""
    document = serialize_dataset(corpus, venues)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(document, fh, indent=2)
        fh.write("\n")
