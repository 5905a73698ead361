#!/usr/bin/env python3
"""Depth scores and the source median on a corpus small enough to eyeball.

Depth of a vector w.r.t. a reference set is 2 minus its mean cosine
distance to the reference: 2.0 means "sits exactly on every reference
direction", lower means further out. The source median is simply the
source sample whose self-depth is maximal, i.e. the most representative
source text.
"""

import numpy as np

from depthf1 import depth_scores, source_median

e1 = np.array([1.0, 0.0])
e2 = np.array([0.0, 1.0])
mid = (e1 + e2) / np.sqrt(2.0)  # unit vector halfway between them

source = np.vstack([e1, e2, mid])
ids = ("east", "north", "northeast")

print("Source vectors:")
for sample_id, vec in zip(ids, source):
    print(f"  {sample_id:10s} {vec}")

table = depth_scores(source, source, ids=ids)
print("\nSelf-depths (each vector w.r.t. the whole source set):")
for sample_id, score in zip(ids, table.scores):
    print(f"  {sample_id:10s} {score:.5f}")

median = source_median(table)
print(f"\nSource median: {median.id!r} at index {median.index}, depth {median.depth:.5f}")
print("The midpoint wins because it is, on average, closest to everything.")

# Depth of new query points against the same reference set.
queries = np.vstack([e1, -e1, np.array([1.0, 1.0])])
query_ids = ("east again", "west", "diagonal (unnormalized)")
query_table = depth_scores(queries, source, ids=query_ids)
print("\nQuery depths w.r.t. the source set (scale does not matter):")
for sample_id, score in zip(query_ids, query_table.scores):
    print(f"  {sample_id:25s} {score:.5f}")
