#!/usr/bin/env python3
"""From depths to weights to the depth-weighted F1, step by step.

We build a small synthetic corpus, attach predictions from a file (the
same JSONL wire format the CLI consumes), and walk the evaluation sweep:
lambda subsets, per-subset weights, micro-F1 next to DF1. Samples far
below the source median's depth soak up the evaluation mass, so DF1
listens to the hard, source-dissimilar part of the target domain.
"""

import json
import tempfile
from pathlib import Path

import numpy as np

from depthf1 import (
    DemoConfig,
    attach_predictions,
    corpus_depth_tables,
    depth_weights,
    evaluate_sweep,
    lambda_subset,
    save_corpus,
    source_median,
    synth_corpus,
)

cfg = DemoConfig(n_source=300, n_target=12, seed=8)
corpus = synth_corpus(cfg)

# Round-trip through the on-disk formats, exactly as the CLI would.
workdir = Path(tempfile.mkdtemp())
corpus_path = workdir / "corpus.jsonl"
save_corpus(corpus, corpus_path)

rng = np.random.default_rng(0)
predictions_path = workdir / "predictions.jsonl"
with predictions_path.open("w") as handle:
    for sample in corpus.target:
        predicted = sample.label if rng.random() < 0.7 else str(rng.integers(cfg.n_classes))
        handle.write(json.dumps({"id": sample.id, "prediction": predicted}) + "\n")

corpus = attach_predictions(corpus, predictions_path)

source_table, target_table = corpus_depth_tables(corpus)
median = source_median(source_table)
print(f"source median: {median.id} (depth {median.depth:.4f})\n")

subset = lambda_subset(target_table, 50)
weights = depth_weights(median.depth, target_table, subset)
print("lambda=50 keeps the shallower half of the target set:")
print(f"{'id':>8s} {'depth':>8s} {'weight':>8s} {'gold':>5s} {'pred':>5s}")
for kept_pos, index in enumerate(subset.kept_indices):
    sample = corpus.target[index]
    print(
        f"{sample.id:>8s} {target_table.scores[index]:>8.4f} "
        f"{weights.weights[kept_pos]:>8.4f} {sample.label:>5s} {sample.prediction:>5s}"
    )

print("\nFull sweep (weights renormalized per subset):")
report = evaluate_sweep(corpus, (0, 25, 50, 75, 90))
print(f"{'lambda':>6s} {'kept':>5s} {'micro_f1':>9s} {'df1':>9s}")
for row in report.rows:
    df1 = "  (degenerate)" if row.df1 is None else f"{row.df1:9.4f}"
    print(f"{row.lam:>6d} {row.kept_count:>5d} {row.micro_f1:>9.4f} {df1}")
