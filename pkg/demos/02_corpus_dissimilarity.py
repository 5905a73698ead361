#!/usr/bin/env python3
"""The Q statistic: how separated are two embedded corpora?

Q is the probability that a random source sample's depth is <= a random
target sample's depth, both measured against the source set. Two corpora
drawn from the same distribution give Q near 1/2; a far-away target
collapses Q toward 0. Here we sweep the centroid separation of the
synthetic generator and watch Q fall.
"""

from depthf1 import DemoConfig, corpus_depth_tables, q_statistic, synth_corpus

print(f"{'separation':>10s} {'Q':>8s} {'pairs':>8s}")
for separation in (0.0, 0.25, 0.5, 1.0, 2.0, 5.0):
    cfg = DemoConfig(n_source=800, n_target=800, separation=separation, seed=42)
    corpus = synth_corpus(cfg)
    source_table, target_table = corpus_depth_tables(corpus)
    q = q_statistic(source_table, target_table)
    print(f"{separation:>10.2f} {q.value:>8.4f} {q.pair_count:>8d}")

print(
    "\nAt separation 0 the domains are identically distributed and Q sits"
    "\nnear one half; past a few noise scales almost every target sample is"
    "\nshallower than every source sample and Q approaches zero."
)
