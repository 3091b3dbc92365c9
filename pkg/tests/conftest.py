"""Shared fixtures: the two worked example corpora and random-corpus helpers."""

from __future__ import annotations

import numpy as np
import pytest

from citex import Corpus, build_corpus

# First worked example: 4 authors, 5 papers.
EXAMPLE1_M = np.array(
    [
        [1, 0, 1, 0, 1],
        [0, 1, 0, 1, 0],
        [0, 1, 1, 0, 1],
        [1, 0, 1, 1, 1],
    ],
    dtype=float,
)
EXAMPLE1_C = np.array(
    [
        [0, 1, 1, 0, 1],
        [0, 0, 1, 1, 0],
        [0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0],
    ],
    dtype=float,
)
EXAMPLE1_X = np.array([0.259, 0.132, 0.289, 0.320])
EXAMPLE1_Y = np.array([0.082, 0.141, 0.264, 0.123, 0.390])

# Second worked example: 5 authors, 4 papers.
EXAMPLE2_M = np.array(
    [
        [1, 0, 0, 0],
        [1, 0, 1, 0],
        [0, 1, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
    ],
    dtype=float,
)
EXAMPLE2_C = np.array(
    [
        [0, 1, 1, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 0],
        [1, 0, 1, 0],
    ],
    dtype=float,
)
EXAMPLE2_X = np.array([0.106, 0.590, 0.152, 0.152, 0.000])
EXAMPLE2_Y = np.array([0.212, 0.304, 0.484, 0.000])


def corpus_from_dense(M: np.ndarray, C: np.ndarray, weights: np.ndarray | None = None) -> Corpus:
    """Build a corpus whose publication/citation matrices equal M and C."""
    m, n = M.shape
    authors = [f"a{i + 1}" for i in range(m)]
    papers = [f"p{j + 1}" for j in range(n)]
    authorship = []
    for i in range(m):
        for j in range(n):
            if M[i, j]:
                w = 1.0 if weights is None else float(weights[i, j])
                authorship.append((authors[i], papers[j], w))
    citations = [
        (papers[j], papers[k]) for j in range(n) for k in range(n) if C[j, k]
    ]
    return build_corpus(authors, papers, authorship, citations)


@pytest.fixture
def example1() -> Corpus:
    return corpus_from_dense(EXAMPLE1_M, EXAMPLE1_C)


@pytest.fixture
def example2() -> Corpus:
    return corpus_from_dense(EXAMPLE2_M, EXAMPLE2_C)


def random_corpus(rng: np.random.Generator, max_authors: int = 8, max_papers: int = 8) -> Corpus:
    """Random valid corpus: every paper has >= 1 author, citations form a DAG."""
    m = int(rng.integers(1, max_authors + 1))
    n = int(rng.integers(1, max_papers + 1))
    M = (rng.random((m, n)) < 0.4).astype(float)
    for j in range(n):
        if not M[:, j].any():
            M[rng.integers(0, m), j] = 1.0
    # orient every candidate edge along a random total order => acyclic
    order = rng.permutation(n)
    C = np.zeros((n, n))
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < 0.3:
                C[order[a], order[b]] = 1.0
    return corpus_from_dense(M, C)


def random_dag_edges(rng: np.random.Generator, n: int, density: float = 0.3) -> list[tuple[int, int]]:
    order = rng.permutation(n)
    return [
        (int(order[a]), int(order[b]))
        for a in range(n)
        for b in range(a + 1, n)
        if rng.random() < density
    ]
