"""Synthetic two-domain corpora and the stochastic demonstration models.

Model A labels every target sample correctly with one fixed probability,
so its expected depth-weighted score is flat in lambda. Model B's success
probability decays linearly in the sample's dissimilarity rank, so it
looks just as good as A under plain micro-F1 while its depth-weighted
score drops as evaluation shifts toward source-dissimilar samples. The
pair illustrates semantic overfitting: equal F1, diverging DF1.

All generation is deterministic under the config seed; the corpus and
the two models draw from independent seeded streams.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .corpus import Corpus, EmbeddedSample, apply_predictions
from .depth import corpus_depth_tables, source_median
from .metrics import (
    DEFAULT_LAMBDAS,
    EvaluationReport,
    WeightTable,
    depth_weights,
    evaluate_sweep,
    lambda_subset,
)

MODEL_A = "A"
MODEL_B = "B"

_STREAM_CORPUS = 0
_STREAM_MODEL_A = 1
_STREAM_MODEL_B = 2


@dataclass(frozen=True)
class DemoConfig:
    """Parameters of the synthetic corpus and the two demonstration models.

    ``gamma_a`` is model A's constant success probability; model B starts
    at ``gamma_b`` and loses ``beta`` per unit of dissimilarity rank,
    floored at ``p_min``. ``separation`` is the distance between the
    source and target Gaussian centroids in units of the (unit) noise
    scale; 0 makes the domains identically distributed.
    """

    gamma_a: float = 0.83
    gamma_b: float = 0.95
    beta: float = 0.24
    p_min: float = 0.0
    n_source: int = 1000
    n_target: int = 1000
    n_classes: int = 5
    dimension: int = 8
    separation: float = 0.5
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 < self.gamma_a <= 1.0:
            raise ValueError("gamma_a must be in (0, 1]")
        if not 0.0 < self.gamma_b <= 1.0:
            raise ValueError("gamma_b must be in (0, 1]")
        if self.beta < 0.0:
            raise ValueError("beta must be >= 0")
        if not 0.0 <= self.p_min <= self.gamma_b:
            raise ValueError("p_min must be in [0, gamma_b]")
        if self.n_source <= 0 or self.n_target <= 0:
            raise ValueError("n_source and n_target must be positive")
        if self.n_classes < 2:
            raise ValueError("n_classes must be at least 2")
        if self.dimension <= 0:
            raise ValueError("dimension must be positive")
        if self.separation < 0.0:
            raise ValueError("separation must be >= 0")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


@dataclass(frozen=True)
class DemoRun:
    """Paired evaluation reports for the two demonstration models."""

    report_a: EvaluationReport
    report_b: EvaluationReport


@dataclass(frozen=True)
class CurvePoint:
    lam: int
    df1_mean: float
    df1_std: float
    micro_f1_mean: float
    micro_f1_std: float


@dataclass(frozen=True)
class DemoCurves:
    """Per-lambda seed statistics for both models over repeated runs."""

    seeds: int
    model_a: tuple[CurvePoint, ...]
    model_b: tuple[CurvePoint, ...]


def _labels(rng: np.random.Generator, count: int, n_classes: int) -> list[str]:
    return [str(int(k)) for k in rng.integers(0, n_classes, size=count)]


def synth_corpus(cfg: DemoConfig) -> Corpus:
    """Two unit-normalized Gaussian clouds with centroids ``separation`` apart.

    Labels are assigned uniformly over the class set; the result carries
    no predictions. Identical configs produce identical corpora.
    """
    rng = np.random.default_rng([cfg.seed, _STREAM_CORPUS])
    offset = np.zeros(cfg.dimension)
    offset[0] = cfg.separation / 2.0

    source = rng.standard_normal((cfg.n_source, cfg.dimension)) - offset
    target = rng.standard_normal((cfg.n_target, cfg.dimension)) + offset
    vectors = np.vstack([source, target])
    norms = np.linalg.norm(vectors, axis=1)
    # A standard normal draw is never the zero vector in practice, but a
    # zero row would poison cosine distance, so nudge it deterministically.
    vectors[norms == 0.0, 0] = 1.0
    vectors /= np.linalg.norm(vectors, axis=1)[:, None]
    vectors.setflags(write=False)

    labels = _labels(rng, cfg.n_source + cfg.n_target, cfg.n_classes)
    samples = [
        EmbeddedSample(id=f"s{i:05d}", role="source", label=labels[i], vector=vectors[i])
        for i in range(cfg.n_source)
    ]
    samples += [
        EmbeddedSample(
            id=f"t{i:05d}",
            role="target",
            label=labels[cfg.n_source + i],
            vector=vectors[cfg.n_source + i],
        )
        for i in range(cfg.n_target)
    ]
    return Corpus(
        dimension=cfg.dimension,
        samples=tuple(samples),
        label_set=frozenset(labels),
        path=None,
    )


def _dissimilarity_ranks(weights_full: WeightTable) -> np.ndarray:
    """Fractional rank of each weight, ascending; ties keep input order.

    0 marks the most source-similar sample (smallest weight), 1 the most
    dissimilar. A single-sample target gets rank 0.
    """
    n = len(weights_full.weights)
    if n == 1:
        return np.zeros(1)
    order = np.argsort(weights_full.weights, kind="stable")
    ranks = np.empty(n, dtype=np.float64)
    ranks[order] = np.arange(n, dtype=np.float64)
    return ranks / (n - 1)


def demo_predict(
    kind: str, corpus: Corpus, weights_full: WeightTable, cfg: DemoConfig
) -> list[str]:
    """Draw one prediction per target sample for model A or B.

    Model A is correct with probability gamma_a everywhere; model B is
    correct with probability max(p_min, gamma_b - beta * rank), where
    rank is the sample's fractional dissimilarity rank over the full
    target set. Misses get a uniformly random wrong label.
    """
    kind = kind.upper()
    if kind not in (MODEL_A, MODEL_B):
        raise ValueError(f"kind must be 'A' or 'B', got {kind!r}")
    targets = corpus.target
    if len(weights_full.weights) != len(targets):
        raise ValueError("weights_full must align with the target samples")

    if kind == MODEL_A:
        success = np.full(len(targets), cfg.gamma_a)
        rng = np.random.default_rng([cfg.seed, _STREAM_MODEL_A])
    else:
        ranks = _dissimilarity_ranks(weights_full)
        success = np.maximum(cfg.p_min, cfg.gamma_b - cfg.beta * ranks)
        rng = np.random.default_rng([cfg.seed, _STREAM_MODEL_B])

    classes = sorted(corpus.label_set)
    correct = rng.random(len(targets)) < success
    wrong_draw = rng.integers(0, max(len(classes) - 1, 1), size=len(targets))

    predictions: list[str] = []
    for i, sample in enumerate(targets):
        if correct[i] or len(classes) < 2:
            predictions.append(sample.label)
            continue
        alternatives = [c for c in classes if c != sample.label]
        predictions.append(alternatives[int(wrong_draw[i]) % len(alternatives)])
    return predictions


def run_demo(
    cfg: DemoConfig, lambda_grid: Sequence[int] = DEFAULT_LAMBDAS
) -> DemoRun:
    """Build the synthetic corpus, run both models, evaluate both sweeps."""
    corpus = synth_corpus(cfg)
    source_table, target_table = corpus_depth_tables(corpus)
    median = source_median(source_table)
    weights_full = depth_weights(median.depth, target_table, lambda_subset(target_table, 0))

    target_ids = [s.id for s in corpus.target]
    reports = {}
    for kind in (MODEL_A, MODEL_B):
        predictions = demo_predict(kind, corpus, weights_full, cfg)
        labeled = apply_predictions(corpus, dict(zip(target_ids, predictions)))
        reports[kind] = evaluate_sweep(labeled, lambda_grid)
    return DemoRun(report_a=reports[MODEL_A], report_b=reports[MODEL_B])


def demo_curve_stats(
    cfg: DemoConfig,
    lambda_grid: Sequence[int] = DEFAULT_LAMBDAS,
    n_seeds: int = 30,
) -> DemoCurves:
    """Per-lambda mean and population std of DF1 and micro-F1 over seeds.

    Runs the demonstration with seeds cfg.seed, cfg.seed + 1, ... and
    aggregates each model's curve. Degenerate rows never occur for the
    synthetic geometry (the subset keeps the most dissimilar samples),
    but would surface as a DegenerateWeightsError rather than skew stats.
    """
    if n_seeds <= 0:
        raise ValueError("n_seeds must be positive")

    grid = sorted(set(int(lam) for lam in lambda_grid))
    df1: dict[str, list[list[float]]] = {MODEL_A: [], MODEL_B: []}
    micro: dict[str, list[list[float]]] = {MODEL_A: [], MODEL_B: []}
    for i in range(n_seeds):
        run = run_demo(replace(cfg, seed=cfg.seed + i), grid)
        for kind, report in ((MODEL_A, run.report_a), (MODEL_B, run.report_b)):
            for row in report.rows:
                if row.df1 is None:
                    raise ValueError(f"degenerate weights at lambda={row.lam} (seed {cfg.seed + i})")
            df1[kind].append([row.df1 for row in report.rows])
            micro[kind].append([row.micro_f1 for row in report.rows])

    curves = {}
    for kind in (MODEL_A, MODEL_B):
        df1_mat = np.asarray(df1[kind])
        micro_mat = np.asarray(micro[kind])
        curves[kind] = tuple(
            CurvePoint(
                lam=lam,
                df1_mean=float(df1_mat[:, j].mean()),
                df1_std=float(df1_mat[:, j].std()),
                micro_f1_mean=float(micro_mat[:, j].mean()),
                micro_f1_std=float(micro_mat[:, j].std()),
            )
            for j, lam in enumerate(grid)
        )
    return DemoCurves(seeds=n_seeds, model_a=curves[MODEL_A], model_b=curves[MODEL_B])
