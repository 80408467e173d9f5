"""
Sparse tf-idf vectors
"""
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import sparse

from src.features.ngrams import char_ngrams
from src.features.vocabulary import Vocabulary, VectorizerError
from src.text.normalize import normalize_text


@dataclass(frozen=True, eq=False)
class SparseVector:
    """
    (index, weight) pairs over a fixed dimension

    Indices are strictly increasing; arrays are read-only.
    """
    indices: np.ndarray
    weights: np.ndarray
    dim: int

    def __post_init__(self):
        indices = np.asarray(self.indices, dtype=np.int64)
        weights = np.asarray(self.weights, dtype=np.float64)
        if indices.ndim != 1 or indices.shape != weights.shape:
            raise VectorizerError("indices and weights must be 1-d arrays of equal length")
        if indices.size:
            if np.any(np.diff(indices) <= 0):
                raise VectorizerError("Sparse vector indices must be strictly increasing")
            if indices[0] < 0 or indices[-1] >= self.dim:
                raise VectorizerError(f"Sparse vector index out of range for dimension {self.dim}")
        indices.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def zeros(cls, dim: int) -> "SparseVector":
        return cls(np.zeros(0, dtype=np.int64), np.zeros(0), dim)

    @classmethod
    def from_dense(cls, values: Sequence[float]) -> "SparseVector":
        dense = np.asarray(values, dtype=np.float64)
        nonzero = np.flatnonzero(dense)
        return cls(nonzero, dense[nonzero], dense.size)

    def __len__(self) -> int:
        return int(self.indices.size)

    def norm(self) -> float:
        return float(np.linalg.norm(self.weights))

    def dot(self, dense: np.ndarray) -> float:
        if dense.shape[0] != self.dim:
            raise VectorizerError(f"Dimension mismatch: vector has {self.dim}, weights have {dense.shape[0]}")
        return float(np.dot(dense[self.indices], self.weights))

    def to_dense(self) -> np.ndarray:
        dense = np.zeros(self.dim)
        dense[self.indices] = self.weights
        return dense


def l2_normalize(vector: SparseVector) -> SparseVector:
    norm = vector.norm()
    if norm == 0.0:
        return SparseVector.zeros(vector.dim)
    return SparseVector(vector.indices, vector.weights / norm, vector.dim)


def vectorize(text: str, vocab: Vocabulary) -> SparseVector:
    """
    tf-idf vector of a text: normalize, n-grams, raw count x idf, L2

    Out-of-vocabulary grams are ignored; the result has norm 1, or is the
    zero vector when no gram is in the vocabulary.
    """
    counts = Counter(
        vocab.index[g] for g in char_ngrams(normalize_text(text), vocab.n_range) if g in vocab.index
    )
    if not counts:
        return SparseVector.zeros(len(vocab))

    indices = np.array(sorted(counts), dtype=np.int64)
    tf = np.array([counts[i] for i in indices], dtype=np.float64)
    return l2_normalize(SparseVector(indices, tf * vocab.idf[indices], len(vocab)))


def concat_blocks(blocks: Sequence[SparseVector]) -> SparseVector:
    """
    Concatenate per-field vectors into one block-structured vector

    Each block is L2-normalized on its own, then the result is renormalized.
    """
    indices, weights, offset = [], [], 0
    for block in blocks:
        block = l2_normalize(block)
        indices.append(block.indices + offset)
        weights.append(block.weights)
        offset += block.dim

    if not blocks:
        return SparseVector.zeros(0)
    return l2_normalize(SparseVector(np.concatenate(indices), np.concatenate(weights), offset))


def stack_vectors(vectors: Sequence[SparseVector], dim: int) -> sparse.csr_matrix:
    """Rows of a CSR matrix, one per vector"""
    for v in vectors:
        if v.dim != dim:
            raise VectorizerError(f"Dimension mismatch: vector has {v.dim}, expected {dim}")
    indptr = np.zeros(len(vectors) + 1, dtype=np.int64)
    if vectors:
        indptr[1:] = np.cumsum([len(v) for v in vectors])
        indices = np.concatenate([v.indices for v in vectors])
        data = np.concatenate([v.weights for v in vectors])
    else:
        indices = np.zeros(0, dtype=np.int64)
        data = np.zeros(0)
    return sparse.csr_matrix((data, indices, indptr), shape=(len(vectors), dim))
