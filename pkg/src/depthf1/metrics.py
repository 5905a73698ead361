"""Dissimilarity weights, percentile subsets, and the depth-weighted F1.

Each target sample receives weight proportional to how far its depth
falls below the source median's depth; samples at least as deep as the
median carry no dissimilarity mass. The lambda subset drops the given
percentage of most source-similar (highest-depth) target samples, and
weights are recomputed over whatever subset is being evaluated.

The depth-weighted F1 replaces unit counts with weight mass: a correct
sample adds its weight to the true positives, a misclassified one adds
its weight to the false positives of its predicted class and the false
negatives of its gold class. Micro-aggregation over classes then gives

    DF1 = 2*DTP / (2*DTP + DFP + DFN)

which, for single-label evaluation with weights summing to one, equals
the weighted accuracy.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Sequence

import numpy as np

from . import __version__
from .corpus import Corpus
from .depth import DepthTable, MedianInfo, QStatistic, corpus_depth_tables, q_statistic, source_median
from .exceptions import DegenerateWeightsError

DEFAULT_LAMBDAS = (0, 25, 50, 75, 90)


@dataclass(frozen=True)
class LambdaSubset:
    """Target indices kept after removing the lam% most source-similar.

    ``kept_indices`` is in original corpus order. The removal rule sorts
    by (depth, input index) ascending and keeps the first N - m entries
    with m = floor(lam * N / 100), so later-indexed equal-depth samples
    are removed first and kept sets are nested across increasing lam.
    """

    lam: int
    kept_indices: tuple[int, ...]
    removed_count: int


@dataclass(frozen=True)
class WeightTable:
    """Normalized dissimilarity weights, aligned with a kept-index list.

    ``clamped_count`` is the number of samples whose raw numerator was
    negative (deeper than the source median) and was clamped to zero; a
    numerator that is exactly zero is not counted as clamped.
    """

    weights: np.ndarray
    clamped_count: int


@dataclass(frozen=True)
class ConfusionTally:
    """Micro-pooled weighted true/false positive and negative mass."""

    dtp: float
    dfp: float
    dfn: float


@dataclass(frozen=True)
class SweepRow:
    lam: int
    kept_count: int
    micro_f1: float
    df1: float | None
    degenerate: bool


@dataclass(frozen=True)
class ReportMetadata:
    corpus_path: str | None
    timestamp: str
    tool_version: str


@dataclass(frozen=True)
class EvaluationReport:
    """Corpus-level Q and median plus one evaluation row per lambda."""

    q: QStatistic
    median: MedianInfo
    rows: tuple[SweepRow, ...]
    metadata: ReportMetadata


def lambda_subset(target_depths: DepthTable, lam: int) -> LambdaSubset:
    """Keep the N - floor(lam*N/100) lowest-depth (most dissimilar) samples.

    lam = 0 keeps the whole target set; lam = 90 over 1000 samples keeps
    the 100 most source-dissimilar ones.
    """
    n = len(target_depths)
    if n == 0:
        raise ValueError("target depth table is empty")
    removed = (lam * n) // 100
    # Stable argsort on depth == (depth, input index) ascending.
    order = np.argsort(target_depths.scores, kind="stable")
    kept = np.sort(order[: n - removed])
    return LambdaSubset(lam=lam, kept_indices=tuple(int(i) for i in kept), removed_count=removed)


def depth_weights(
    median_depth: float, target_depths: DepthTable, subset: LambdaSubset
) -> WeightTable:
    """Normalized clamped depth gaps over the kept subset.

    raw_i = max(0, median_depth - depth_i), weights = raw / sum(raw).
    Raises DegenerateWeightsError when every kept sample is at least as
    deep as the source median, i.e. the whole subset clamps to zero.
    """
    if not subset.kept_indices:
        raise ValueError("subset is empty")
    kept = np.asarray(subset.kept_indices, dtype=np.intp)
    raw = median_depth - target_depths.scores[kept]
    clamped_count = int(np.count_nonzero(raw < 0.0))
    raw = np.maximum(raw, 0.0)
    total = float(raw.sum())
    if total == 0.0:
        raise DegenerateWeightsError(
            "every kept sample is at least as deep as the source median"
        )
    return WeightTable(weights=raw / total, clamped_count=clamped_count)


def confusion_tally(
    labels: Sequence[str], predictions: Sequence[str], weights: WeightTable
) -> ConfusionTally:
    """Micro-pooled weighted confusion mass over the aligned sample lists."""
    if len(labels) != len(predictions) or len(labels) != len(weights.weights):
        raise ValueError("labels, predictions, and weights must be aligned")
    dtp = 0.0
    wrong = 0.0
    for label, prediction, w in zip(labels, predictions, weights.weights):
        if prediction is None:
            raise ValueError("missing prediction")
        if prediction == label:
            dtp += float(w)
        else:
            # One unit of weight lands in the predicted class's false
            # positives and the gold class's false negatives; micro
            # pooling sums both across classes.
            wrong += float(w)
    return ConfusionTally(dtp=dtp, dfp=wrong, dfn=wrong)


def depth_f1(
    labels: Sequence[str], predictions: Sequence[str], weights: WeightTable
) -> float:
    """Depth-weighted micro F1 of the aligned labels and predictions."""
    tally = confusion_tally(labels, predictions, weights)
    denominator = 2.0 * tally.dtp + tally.dfp + tally.dfn
    if denominator == 0.0:
        raise ValueError("weight table carries no mass")
    return 2.0 * tally.dtp / denominator


def micro_f1(labels: Sequence[str], predictions: Sequence[str]) -> float:
    """Micro-averaged F1 over classes; equals accuracy for single labels."""
    if len(labels) != len(predictions):
        raise ValueError("labels and predictions must be aligned")
    if not labels:
        raise ValueError("cannot score an empty list")
    tp = sum(1 for y, p in zip(labels, predictions) if y == p)
    fp = fn = len(labels) - tp
    return 2.0 * tp / (2.0 * tp + fp + fn)


def evaluate_sweep(
    corpus: Corpus, lambda_grid: Sequence[int] = DEFAULT_LAMBDAS
) -> EvaluationReport:
    """Full evaluation: depths, median, Q, and one row per lambda.

    Weights are recomputed (re-clamped, renormalized) per lambda subset,
    and both DF1 and micro-F1 are restricted to the kept samples. A
    degenerate subset (all kept samples at least median-deep) yields a
    flagged row with df1 = None; other rows are unaffected.
    """
    grid = sorted(set(int(lam) for lam in lambda_grid))
    if not grid:
        raise ValueError("lambda grid is empty")
    for lam in grid:
        if not 0 <= lam < 100:
            raise ValueError(f"lambda must be in [0, 100), got {lam}")

    source_table, target_table = corpus_depth_tables(corpus)
    median = source_median(source_table)
    q = q_statistic(source_table, target_table)
    labels = corpus.target_labels()
    predictions = corpus.target_predictions()

    rows: list[SweepRow] = []
    for lam in grid:
        subset = lambda_subset(target_table, lam)
        kept_labels = [labels[i] for i in subset.kept_indices]
        kept_predictions = [predictions[i] for i in subset.kept_indices]
        micro = micro_f1(kept_labels, kept_predictions)
        try:
            weights = depth_weights(median.depth, target_table, subset)
        except DegenerateWeightsError:
            rows.append(
                SweepRow(
                    lam=lam,
                    kept_count=len(subset.kept_indices),
                    micro_f1=micro,
                    df1=None,
                    degenerate=True,
                )
            )
            continue
        rows.append(
            SweepRow(
                lam=lam,
                kept_count=len(subset.kept_indices),
                micro_f1=micro,
                df1=depth_f1(kept_labels, kept_predictions, weights),
                degenerate=False,
            )
        )

    metadata = ReportMetadata(
        corpus_path=corpus.path,
        timestamp=datetime.now(timezone.utc).isoformat(),
        tool_version=__version__,
    )
    return EvaluationReport(q=q, median=median, rows=tuple(rows), metadata=metadata)
