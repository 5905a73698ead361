"""Naive scalar reference implementations used to cross-check the library.

Everything here is deliberately independent of the package internals:
plain Python floats, explicit double loops, no numpy. Slow but obviously
faithful to the definitions.
"""

from __future__ import annotations

import math


def oracle_cosine_distance(u, v):
    dot = sum(a * b for a, b in zip(u, v))
    nu = math.sqrt(sum(a * a for a in u))
    nv = math.sqrt(sum(b * b for b in v))
    dist = 1.0 - dot / (nu * nv)
    return min(max(dist, 0.0), 2.0)


def oracle_depth_scores(queries, reference):
    scores = []
    for q in queries:
        total = 0.0
        for r in reference:
            total += oracle_cosine_distance(q, r)
        scores.append(2.0 - total / len(reference))
    return scores


def oracle_source_median(depths):
    best = 0
    for i in range(1, len(depths)):
        if depths[i] > depths[best]:
            best = i
    return best, depths[best]


def oracle_q(source_depths, target_depths):
    count = 0
    for ds in source_depths:
        for dt in target_depths:
            if ds <= dt:
                count += 1
    return count / (len(source_depths) * len(target_depths))


def oracle_lambda_kept(depths, lam):
    n = len(depths)
    removed = (lam * n) // 100
    order = sorted(range(n), key=lambda i: (depths[i], i))
    return sorted(order[: n - removed])


def oracle_weights(median_depth, depths, kept_indices):
    raw = [max(0.0, median_depth - depths[i]) for i in kept_indices]
    total = sum(raw)
    if total == 0.0:
        return None
    return [r / total for r in raw]


def oracle_micro_f1(labels, predictions):
    """Micro F1 from per-class pooled counts, built class by class."""
    classes = set(labels) | set(predictions)
    tp = {c: 0 for c in classes}
    fp = {c: 0 for c in classes}
    fn = {c: 0 for c in classes}
    for y, p in zip(labels, predictions):
        if y == p:
            tp[y] += 1
        else:
            fp[p] += 1
            fn[y] += 1
    tp_total = sum(tp.values())
    fp_total = sum(fp.values())
    fn_total = sum(fn.values())
    return 2.0 * tp_total / (2.0 * tp_total + fp_total + fn_total)


def oracle_depth_f1(labels, predictions, weights):
    """Depth-weighted micro F1 from per-class pooled weighted counts."""
    classes = set(labels) | set(predictions)
    dtp = {c: 0.0 for c in classes}
    dfp = {c: 0.0 for c in classes}
    dfn = {c: 0.0 for c in classes}
    for y, p, w in zip(labels, predictions, weights):
        if y == p:
            dtp[y] += w
        else:
            dfp[p] += w
            dfn[y] += w
    dtp_total = sum(dtp.values())
    dfp_total = sum(dfp.values())
    dfn_total = sum(dfn.values())
    return 2.0 * dtp_total / (2.0 * dtp_total + dfp_total + dfn_total)


def oracle_weighted_accuracy(labels, predictions, weights):
    return sum(w for y, p, w in zip(labels, predictions, weights) if y == p)
