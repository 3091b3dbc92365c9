"""Dataset parsing (JSON and CSV forms), serialization, and round-trips."""

from __future__ import annotations

import json

import pytest

from citex import (
    DatasetError,
    DuplicateEdgeWarning,
    UnknownReferenceError,
    load_dataset,
    parse_dataset,
    serialize_dataset,
    write_dataset,
)

EXAMPLE1_DOC = {
    "authors": [{"id": "a1"}, {"id": "a2"}, {"id": "a3"}, {"id": "a4"}],
    "papers": [
        {"id": "p1", "venue": "V1"},
        {"id": "p2", "venue": "V1"},
        {"id": "p3"},
        {"id": "p4"},
        {"id": "p5"},
    ],
    "authorship": [
        {"author": "a1", "paper": "p1"},
        {"author": "a1", "paper": "p3"},
        {"author": "a1", "paper": "p5"},
        {"author": "a2", "paper": "p2"},
        {"author": "a2", "paper": "p4"},
        {"author": "a3", "paper": "p2"},
        {"author": "a3", "paper": "p3"},
        {"author": "a3", "paper": "p5"},
        {"author": "a4", "paper": "p1"},
        {"author": "a4", "paper": "p3"},
        {"author": "a4", "paper": "p4"},
        {"author": "a4", "paper": "p5"},
    ],
    "citations": [
        {"from": "p1", "to": "p2"},
        {"from": "p1", "to": "p3"},
        {"from": "p1", "to": "p5"},
        {"from": "p2", "to": "p3"},
        {"from": "p2", "to": "p4"},
        {"from": "p3", "to": "p5"},
        {"from": "p4", "to": "p5"},
    ],
}


@pytest.fixture
def example1_path(tmp_path):
    path = tmp_path / "example1.json"
    path.write_text(json.dumps(EXAMPLE1_DOC))
    return path


def test_parse_example1(example1_path):
    corpus = parse_dataset(example1_path)
    assert corpus.num_authors == 4
    assert corpus.num_papers == 5
    assert len(corpus.authorship) == 12
    assert len(corpus.citations) == 7


def test_venue_labels_parsed(example1_path):
    dataset = load_dataset(example1_path)
    assert dataset.venues == {"p1": "V1", "p2": "V1"}


def test_missing_file():
    with pytest.raises(DatasetError, match="no such file"):
        load_dataset("does-not-exist.json")


def test_bad_json_reports_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"authors": [}')
    with pytest.raises(DatasetError, match=r":1:14"):
        load_dataset(path)


def test_empty_authors_rejected(tmp_path):
    path = tmp_path / "empty.json"
    path.write_text(json.dumps({"authors": [], "papers": []}))
    with pytest.raises(DatasetError, match="no authors"):
        load_dataset(path)


def test_missing_edge_field_reports_section_and_index(tmp_path):
    doc = {
        "authors": ["a1"],
        "papers": ["p1"],
        "authorship": [{"author": "a1"}],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(DatasetError, match=r"authorship\[0\]"):
        load_dataset(path)


def test_unknown_citation_reference_reports_row(tmp_path):
    doc = {
        "authors": ["a1"],
        "papers": ["p1", "p2"],
        "authorship": [
            {"author": "a1", "paper": "p1"},
            {"author": "a1", "paper": "p2"},
        ],
        "citations": [
            {"from": "p1", "to": "p2"},
            {"from": "p1", "to": "p9"},
        ],
    }
    path = tmp_path / "badref.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(UnknownReferenceError, match=r"citations\[1\].*p9"):
        load_dataset(path)


def test_bare_string_nodes_accepted(tmp_path):
    doc = {
        "authors": ["a1"],
        "papers": ["p1"],
        "authorship": [{"author": "a1", "paper": "p1"}],
    }
    path = tmp_path / "bare.json"
    path.write_text(json.dumps(doc))
    assert parse_dataset(path).num_authors == 1


def test_parse_from_stream(example1_path):
    with open(example1_path) as fh:
        corpus = parse_dataset(fh)
    assert corpus.num_papers == 5


def test_duplicate_edges_warn(tmp_path):
    doc = {
        "authors": ["a1"],
        "papers": ["p1"],
        "authorship": [
            {"author": "a1", "paper": "p1"},
            {"author": "a1", "paper": "p1"},
        ],
    }
    path = tmp_path / "dup.json"
    path.write_text(json.dumps(doc))
    with pytest.warns(DuplicateEdgeWarning):
        parse_dataset(path)


def test_roundtrip_preserves_everything(example1_path, tmp_path):
    dataset = load_dataset(example1_path)
    out = tmp_path / "roundtrip.json"
    write_dataset(out, dataset.corpus, dataset.venues)
    again = load_dataset(out)
    assert again.corpus == dataset.corpus
    assert again.venues == dataset.venues
    assert again.corpus.author_index == dataset.corpus.author_index
    assert again.corpus.paper_index == dataset.corpus.paper_index


def test_roundtrip_with_weights_and_reputation(tmp_path):
    doc = {
        "authors": ["a1", "a2"],
        "papers": ["p1"],
        "authorship": [
            {"author": "a1", "paper": "p1", "weight": 2.0},
            {"author": "a2", "paper": "p1", "weight": 0.5},
        ],
        "reputation": [{"from": "a1", "to": "a2", "rating": 1.5}],
    }
    path = tmp_path / "weighted.json"
    path.write_text(json.dumps(doc))
    dataset = load_dataset(path)
    assert dataset.corpus.authorship == ((0, 0, 2.0), (1, 0, 0.5))
    assert dataset.corpus.reputation == ((0, 1, 1.5),)
    out = tmp_path / "out.json"
    write_dataset(out, dataset.corpus)
    assert load_dataset(out).corpus == dataset.corpus


def test_serialize_document_shape(example1_path):
    dataset = load_dataset(example1_path)
    doc = serialize_dataset(dataset.corpus, dataset.venues)
    assert doc["schema_version"] == 1
    assert doc["papers"][0] == {"id": "p1", "venue": "V1"}
    assert doc["papers"][2] == {"id": "p3"}


# ---------------------------------------------------------------------------
# CSV directory form
# ---------------------------------------------------------------------------


def write_csv_dataset(root, authorship, citations=None, reputation=None, papers=None, authors=None):
    root.mkdir(exist_ok=True)
    (root / "authorship.csv").write_text(authorship)
    if citations is not None:
        (root / "citations.csv").write_text(citations)
    if reputation is not None:
        (root / "reputation.csv").write_text(reputation)
    if papers is not None:
        (root / "papers.csv").write_text(papers)
    if authors is not None:
        (root / "authors.csv").write_text(authors)
    return root


def test_csv_dataset_basic(tmp_path):
    root = write_csv_dataset(
        tmp_path / "ds",
        authorship="author,paper\na1,p1\na2,p1\na1,p2\n",
        citations="from,to\np2,p1\n",
    )
    dataset = load_dataset(root)
    assert dataset.corpus.authors == ("a1", "a2")
    assert dataset.corpus.papers == ("p1", "p2")
    assert dataset.corpus.citations == ((1, 0),)


def test_csv_dataset_with_weights_and_venues(tmp_path):
    root = write_csv_dataset(
        tmp_path / "ds",
        authorship="author,paper,weight\na1,p1,2.0\na2,p1,1.0\n",
        papers="id,venue\np1,ICML\n",
    )
    dataset = load_dataset(root)
    assert dataset.corpus.authorship == ((0, 0, 2.0), (1, 0, 1.0))
    assert dataset.venues == {"p1": "ICML"}


def test_csv_dataset_paperless_author_via_node_file(tmp_path):
    root = write_csv_dataset(
        tmp_path / "ds",
        authorship="author,paper\na1,p1\n",
        authors="id\nidle\na1\n",
    )
    corpus = load_dataset(root).corpus
    assert corpus.authors == ("idle", "a1")


def test_csv_unknown_citation_reports_row(tmp_path):
    root = write_csv_dataset(
        tmp_path / "ds",
        authorship="author,paper\na1,p1\n",
        citations="from,to\np1,p9\n",
    )
    with pytest.raises(UnknownReferenceError, match="citations.csv:2"):
        load_dataset(root)


def test_csv_missing_authorship_file(tmp_path):
    root = tmp_path / "ds"
    root.mkdir()
    with pytest.raises(DatasetError, match="authorship.csv"):
        load_dataset(root)


def test_csv_missing_column(tmp_path):
    root = write_csv_dataset(tmp_path / "ds", authorship="author\na1\n")
    with pytest.raises(DatasetError, match="missing column"):
        load_dataset(root)


def test_csv_bad_weight_reports_row(tmp_path):
    root = write_csv_dataset(
        tmp_path / "ds", authorship="author,paper,weight\na1,p1,heavy\n"
    )
    with pytest.raises(DatasetError, match="authorship.csv:2"):
        load_dataset(root)


def test_csv_and_json_forms_agree(tmp_path, example1_path):
    json_corpus = parse_dataset(example1_path)
    authorship_lines = ["author,paper"] + [
        f"{json_corpus.authors[a]},{json_corpus.papers[p]}" for a, p, _ in json_corpus.authorship
    ]
    citation_lines = ["from,to"] + [
        f"{json_corpus.papers[j]},{json_corpus.papers[k]}" for j, k in json_corpus.citations
    ]
    root = write_csv_dataset(
        tmp_path / "ds",
        authorship="\n".join(authorship_lines) + "\n",
        citations="\n".join(citation_lines) + "\n",
        authors="id\n" + "\n".join(json_corpus.authors) + "\n",
        papers="id\n" + "\n".join(json_corpus.papers) + "\n",
    )
    csv_corpus = parse_dataset(root)
    assert csv_corpus == json_corpus
