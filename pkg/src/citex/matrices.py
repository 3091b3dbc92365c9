"""Sparse numerical operators built from a corpus.

``publication_matrix`` (0-1 authorship incidence), ``contribution_matrix``
(the same pattern with raw contribution weights), ``citation_matrix``,
``reputation_matrix``, and ``weight_matrix`` (column-normalized split of each
paper's credit among its authors). Everything is stored sparse; the iteration
layer applies operators to vectors one factor at a time and never forms a
dense operator product.

Matrices are immutable after construction; ``spmv``/``spmv_transposed`` are
pure and safe to call concurrently on shared matrices.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np
from scipy import sparse

from .errors import DimensionMismatchError, ZeroColumnSumError
from .graph import Corpus

__all__ = [
    "SparseMatrix",
    "publication_matrix",
    "contribution_matrix",
    "citation_matrix",
    "reputation_matrix",
    "weight_matrix",
    "spmv",
    "spmv_transposed",
]


class SparseMatrix:
    """Immutable non-negative matrix in compressed-sparse-row form.

    Stored values must be finite and >= 0, with at most one entry per
    (row, col) cell. Explicit zeros are kept, so the sparsity pattern of a
    derived matrix can mirror its source exactly.
    """

    __slots__ = ("_csr",)

    def __init__(self, rows: int, cols: int, entries: Iterable[tuple[int, int, float]] = ()):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        triples = list(entries)
        if triples:
            r = np.asarray([t[0] for t in triples], dtype=np.int64)
            c = np.asarray([t[1] for t in triples], dtype=np.int64)
            v = np.asarray([t[2] for t in triples], dtype=np.float64)
            if r.min() < 0 or r.max() >= rows or c.min() < 0 or c.max() >= cols:
                raise ValueError("matrix entry outside the declared shape")
            if not np.all(np.isfinite(v)) or np.any(v < 0):
                raise ValueError("matrix values must be finite and non-negative")
            cells = r * cols + c
            if np.unique(cells).size != cells.size:
                raise ValueError("duplicate (row, col) cells in matrix entries")
        else:
            r = np.empty(0, dtype=np.int64)
            c = np.empty(0, dtype=np.int64)
            v = np.empty(0, dtype=np.float64)
        csr = sparse.csr_array((v, (r, c)), shape=(rows, cols), dtype=np.float64)
        object.__setattr__(self, "_csr", csr)

    def __setattr__(self, name, value):
        raise AttributeError("SparseMatrix is immutable")

    @classmethod
    def _wrap(cls, csr: sparse.csr_array) -> "SparseMatrix":
        # internal fast path: caller guarantees the invariants
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_csr", csr)
        return obj

    @property
    def rows(self) -> int:
        return self._csr.shape[0]

    @property
    def cols(self) -> int:
        return self._csr.shape[1]

    @property
    def nnz(self) -> int:
        return int(self._csr.nnz)

    def entries(self) -> Iterator[tuple[int, int, float]]:
        """Yield (row, col, value) in row-major order, explicit zeros included."""
        coo = self._csr.tocoo()
        order = np.lexsort((coo.col, coo.row))
        for idx in order:
            yield int(coo.row[idx]), int(coo.col[idx]), float(coo.data[idx])

    def column_sums(self) -> np.ndarray:
        return np.asarray(self._csr.sum(axis=0), dtype=np.float64).ravel()

    def toarray(self) -> np.ndarray:
        return self._csr.toarray()

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


def publication_matrix(corpus: Corpus) -> SparseMatrix:
    """0-1 authorship incidence: entry (i, j) = 1 iff author i wrote paper j.

    Contribution weights are deliberately ignored; see
    :func:`contribution_matrix` for the weighted variant.
    """
    entries = [(a, p, 1.0) for a, p, _w in corpus.authorship]
    return SparseMatrix(corpus.num_authors, corpus.num_papers, entries)


def contribution_matrix(corpus: Corpus) -> SparseMatrix:
    """Authorship incidence carrying each author's raw contribution weight."""
    entries = [(a, p, w) for a, p, w in corpus.authorship]
    return SparseMatrix(corpus.num_authors, corpus.num_papers, entries)


def citation_matrix(corpus: Corpus) -> SparseMatrix:
    """0-1 matrix with entry (j, k) = 1 iff paper j cites paper k; zero diagonal."""
    entries = [(citing, cited, 1.0) for citing, cited in corpus.citations]
    return SparseMatrix(corpus.num_papers, corpus.num_papers, entries)


def reputation_matrix(corpus: Corpus) -> SparseMatrix:
    """Author-to-author rating matrix with entry (i, j) = rating of j by i."""
    entries = [(rater, rated, r) for rater, rated, r in corpus.reputation]
    return SparseMatrix(corpus.num_authors, corpus.num_authors, entries)


def weight_matrix(incidence: SparseMatrix) -> SparseMatrix:
    """Divide every column of an authorship incidence matrix by its sum.

    Each output column sums to 1 (within floating tolerance), splitting a
    paper's credit among its authors in proportion to their entries. The
    sparsity pattern is identical to the input.

    Raises :class:`ZeroColumnSumError` if any column sums to zero.
    """
    sums = incidence.column_sums()
    dead = np.flatnonzero(sums <= 0.0)
    if dead.size:
        cols = ", ".join(str(int(j)) for j in dead)
        raise ZeroColumnSumError(f"paper columns with zero total authorship weight: {cols}")
    coo = incidence._csr.tocoo()
    scaled = sparse.csr_array(
        (coo.data / sums[coo.col], (coo.row, coo.col)),
        shape=(incidence.rows, incidence.cols),
        dtype=np.float64,
    )
    return SparseMatrix._wrap(scaled)


def _as_vector(vector, length: int, what: str) -> np.ndarray:
    v = np.asarray(vector, dtype=np.float64)
    if v.ndim != 1 or v.shape[0] != length:
        raise DimensionMismatchError(f"{what}: expected a vector of length {length}, got shape {v.shape}")
    return v


def spmv(matrix: SparseMatrix, vector) -> np.ndarray:
    """Sparse matrix-vector product ``matrix @ vector``."""
    v = _as_vector(vector, matrix.cols, "spmv")
    return matrix._csr @ v


def spmv_transposed(matrix: SparseMatrix, vector) -> np.ndarray:
    """Sparse matrix-vector product ``matrix.T @ vector`` (no transpose copy)."""
    v = _as_vector(vector, matrix.rows, "spmv_transposed")
    return matrix._csr.T @ v
