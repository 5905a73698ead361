from __future__ import annotations

import json
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))


def write_jsonl(path: Path, records: list[dict]) -> Path:
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        for record in records:
            handle.write(json.dumps(record) + "\n")
    return path


def corpus_records(
    source_vectors, target_vectors, source_labels=None, target_labels=None, predictions=None
) -> list[dict]:
    records = []
    for i, vec in enumerate(source_vectors):
        records.append(
            {
                "id": f"s{i}",
                "role": "source",
                "label": source_labels[i] if source_labels else "a",
                "vector": [float(x) for x in vec],
            }
        )
    for i, vec in enumerate(target_vectors):
        record = {
            "id": f"t{i}",
            "role": "target",
            "label": target_labels[i] if target_labels else "a",
            "vector": [float(x) for x in vec],
        }
        if predictions:
            record["prediction"] = predictions[i]
        records.append(record)
    return records


@pytest.fixture
def tiny_corpus_path(tmp_path) -> Path:
    """Two orthogonal source vectors plus their normalized midpoint as target."""
    inv = 1.0 / np.sqrt(2.0)
    records = corpus_records(
        [[1.0, 0.0], [0.0, 1.0]],
        [[inv, inv]],
        source_labels=["a", "b"],
        target_labels=["a"],
        predictions=["a"],
    )
    return write_jsonl(tmp_path / "tiny.jsonl", records)


def random_corpus_arrays(rng: np.random.Generator, n_source=None, n_target=None, dim=None):
    """Random nonzero vectors and labels for oracle cross-checks."""
    n_source = n_source or int(rng.integers(1, 21))
    n_target = n_target or int(rng.integers(1, 21))
    dim = dim or int(rng.integers(2, 9))
    source = rng.normal(size=(n_source, dim))
    target = rng.normal(size=(n_target, dim))
    labels = [str(int(x)) for x in rng.integers(0, 3, size=n_target)]
    predictions = [str(int(x)) for x in rng.integers(0, 3, size=n_target)]
    return source, target, labels, predictions
