"""Cosine-expectation depth scores, source median, and the Q statistic.

The depth of a point x with respect to a reference embedding set R is

    depth(x, R) = 2 - mean_{r in R} cosdist(x, r)

which lies in [0, 2]: higher means x sits closer, on average, to the
reference corpus. Because cosine distance is linear in the normalized
reference vector, the mean distance equals the distance to the mean of
the normalized reference vectors, so a whole depth table costs one
matrix-vector product instead of a pairwise matrix.

The Q statistic compares two depth tables computed against the same
reference set: the empirical probability that a reference-side depth is
less than or equal to a query-side depth. Identically distributed
corpora give Q near 1/2; Q near 0 means the query corpus sits far from
the reference.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import Corpus


@dataclass(frozen=True)
class DepthTable:
    """Per-sample depth scores of a query set, aligned with query order."""

    scores: np.ndarray
    reference_size: int
    ids: tuple[str, ...] | None = None

    def __len__(self) -> int:
        return int(self.scores.shape[0])


@dataclass(frozen=True)
class MedianInfo:
    """The deepest source sample: its position, id, and depth."""

    index: int
    id: str | None
    depth: float


@dataclass(frozen=True)
class QStatistic:
    """Pairwise depth-dominance probability between two corpora."""

    value: float
    pair_count: int


def _as_matrix(vectors: np.ndarray | list, name: str) -> np.ndarray:
    mat = np.asarray(vectors, dtype=np.float64)
    if mat.ndim == 1:
        mat = mat.reshape(1, -1)
    if mat.ndim != 2 or mat.shape[0] == 0 or mat.shape[1] == 0:
        raise ValueError(f"{name} must be a non-empty 2-d array of vectors")
    if not np.all(np.isfinite(mat)):
        raise ValueError(f"{name} contains non-finite coordinates")
    return mat


def _normalize_rows(mat: np.ndarray, name: str) -> np.ndarray:
    norms = np.linalg.norm(mat, axis=1)
    if np.any(norms == 0.0):
        raise ValueError(f"{name} contains a zero-norm vector")
    return mat / norms[:, None]


def cosine_distance(u: np.ndarray | list, v: np.ndarray | list) -> float:
    """Cosine distance 1 - cos(u, v), clamped to [0, 2].

    >>> cosine_distance([1.0, 0.0], [0.0, 1.0])
    1.0
    >>> cosine_distance([1.0, 0.0], [-1.0, 0.0])
    2.0
    """
    u = np.asarray(u, dtype=np.float64).reshape(-1)
    v = np.asarray(v, dtype=np.float64).reshape(-1)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape[0]} vs {v.shape[0]}")
    if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))):
        raise ValueError("vectors must be finite")
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        raise ValueError("cosine distance is undefined for zero-norm vectors")
    dist = 1.0 - float(np.dot(u, v)) / (nu * nv)
    return min(max(dist, 0.0), 2.0)


def depth_scores(
    queries: np.ndarray | list,
    reference: np.ndarray | list,
    ids: tuple[str, ...] | None = None,
) -> DepthTable:
    """Depth of each query vector with respect to the reference set.

    The reference average is uniform over all reference rows, so a query
    that is itself a member of the reference contributes its own zero
    self-distance. All accumulation happens in 64-bit floats and the
    final scores are clamped to [0, 2] to absorb rounding at the
    boundaries.
    """
    query_mat = _as_matrix(queries, "queries")
    ref_mat = _as_matrix(reference, "reference")
    if query_mat.shape[1] != ref_mat.shape[1]:
        raise ValueError(
            f"dimension mismatch: queries have {query_mat.shape[1]}, reference has {ref_mat.shape[1]}"
        )

    if ids is not None and len(ids) != query_mat.shape[0]:
        raise ValueError("ids must align with the query rows")

    query_unit = _normalize_rows(query_mat, "queries")
    ref_unit = _normalize_rows(ref_mat, "reference")

    # mean_r (1 - q.r) = 1 - q.mean(r), hence depth = 1 + q.mean(r)
    ref_mean = ref_unit.mean(axis=0)
    scores = 1.0 + query_unit @ ref_mean
    np.clip(scores, 0.0, 2.0, out=scores)
    return DepthTable(scores=scores, reference_size=ref_mat.shape[0], ids=ids)


def source_median(source_depths: DepthTable) -> MedianInfo:
    """The source sample of maximal self-depth; ties go to the smallest index."""
    if len(source_depths) == 0:
        raise ValueError("source depth table is empty")
    index = int(np.argmax(source_depths.scores))
    sample_id = source_depths.ids[index] if source_depths.ids is not None else None
    return MedianInfo(index=index, id=sample_id, depth=float(source_depths.scores[index]))


def q_statistic(source_depths: DepthTable, target_depths: DepthTable) -> QStatistic:
    """Exact pair count of source depths <= target depths.

    Both tables must have been computed against the same reference set
    (the source embeddings). The count is taken over all ordered pairs,
    so Q(S, S) on a table with n distinct scores is exactly (n+1)/(2n).
    """
    if len(source_depths) == 0 or len(target_depths) == 0:
        raise ValueError("depth tables must be non-empty")
    if source_depths.reference_size != target_depths.reference_size:
        raise ValueError("depth tables were computed against different reference sets")

    sorted_target = np.sort(target_depths.scores)
    # For each source depth d, count target scores >= d.
    positions = np.searchsorted(sorted_target, source_depths.scores, side="left")
    count = int((len(target_depths) - positions).sum())
    pair_count = len(source_depths) * len(target_depths)
    return QStatistic(value=count / pair_count, pair_count=pair_count)


def corpus_depth_tables(corpus: Corpus) -> tuple[DepthTable, DepthTable]:
    """Source self-depths and target depths, both w.r.t. the source set."""
    source_vectors = corpus.source_vectors()
    source_table = depth_scores(
        source_vectors, source_vectors, ids=tuple(s.id for s in corpus.source)
    )
    target_table = depth_scores(
        corpus.target_vectors(), source_vectors, ids=tuple(s.id for s in corpus.target)
    )
    return source_table, target_table
