"""Embedded-corpus data model, JSONL loading, validation, predictions.

A corpus file is UTF-8 JSONL, one object per line with keys

    id          unique string
    role        "source" | "target"
    label       gold class identifier (string, compared by exact equality)
    prediction  optional predicted class identifier (string)
    vector      array of finite numbers, same length on every line

Vectors are read as 64-bit floats regardless of the precision they were
written with, so downstream arithmetic is deterministic. Zero-norm vectors
are rejected at load because cosine distance is undefined for them.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from .exceptions import CorpusFormatError, MissingPredictionError, UnknownIdError

SOURCE = "source"
TARGET = "target"

# validate_corpus issue codes
EMPTY_SOURCE = "EMPTY_SOURCE"
EMPTY_TARGET = "EMPTY_TARGET"
DUPLICATE_ID = "DUPLICATE_ID"
DIMENSION_MISMATCH = "DIMENSION_MISMATCH"
ZERO_NORM_VECTOR = "ZERO_NORM_VECTOR"
NONFINITE_COORDINATE = "NONFINITE_COORDINATE"
SOURCE_PREDICTION = "SOURCE_PREDICTION"
UNKNOWN_PREDICTED_LABEL = "UNKNOWN_PREDICTED_LABEL"


@dataclass(frozen=True, eq=False)
class EmbeddedSample:
    """One embedded text: identity, domain role, gold label, vector."""

    id: str
    role: str
    label: str
    vector: np.ndarray
    prediction: str | None = None


@dataclass(frozen=True)
class ValidationIssue:
    sample_id: str | None
    code: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_corpus; ok is true iff there are no issues."""

    ok: bool
    issues: tuple[ValidationIssue, ...]


@dataclass(frozen=True, eq=False)
class Corpus:
    """An immutable two-domain embedded corpus in file order.

    ``samples`` preserves input line order; ``source`` and ``target`` are
    role-filtered views in that same order. ``label_set`` collects the
    gold labels only; predictions are checked against it, never added.
    """

    dimension: int
    samples: tuple[EmbeddedSample, ...]
    label_set: frozenset[str]
    path: str | None = None

    @cached_property
    def source(self) -> tuple[EmbeddedSample, ...]:
        return tuple(s for s in self.samples if s.role == SOURCE)

    @cached_property
    def target(self) -> tuple[EmbeddedSample, ...]:
        return tuple(s for s in self.samples if s.role == TARGET)

    def source_vectors(self) -> np.ndarray:
        return _stack(self.source, self.dimension)

    def target_vectors(self) -> np.ndarray:
        return _stack(self.target, self.dimension)

    def target_labels(self) -> list[str]:
        return [s.label for s in self.target]

    def target_predictions(self) -> list[str]:
        """Predictions for every target sample, raising on the first gap."""
        out: list[str] = []
        for s in self.target:
            if s.prediction is None:
                raise MissingPredictionError(s.id)
            out.append(s.prediction)
        return out


def _stack(samples: Iterable[EmbeddedSample], dimension: int) -> np.ndarray:
    rows = [s.vector for s in samples]
    if not rows:
        return np.empty((0, dimension), dtype=np.float64)
    return np.vstack(rows)


def _parse_sample(obj: object, line: int) -> EmbeddedSample:
    if not isinstance(obj, dict):
        raise CorpusFormatError("record is not a JSON object", line)
    for key in ("id", "role", "label", "vector"):
        if key not in obj:
            raise CorpusFormatError(f"missing key {key!r}", line)

    sample_id = obj["id"]
    role = obj["role"]
    label = obj["label"]
    prediction = obj.get("prediction")
    raw_vector = obj["vector"]

    if not isinstance(sample_id, str) or not sample_id:
        raise CorpusFormatError("id must be a non-empty string", line)
    if role not in (SOURCE, TARGET):
        raise CorpusFormatError(f"role must be 'source' or 'target', got {role!r}", line)
    if not isinstance(label, str):
        raise CorpusFormatError("label must be a string", line)
    if prediction is not None and not isinstance(prediction, str):
        raise CorpusFormatError("prediction must be a string when present", line)
    if not isinstance(raw_vector, list) or not raw_vector:
        raise CorpusFormatError("vector must be a non-empty array of numbers", line)
    for coord in raw_vector:
        if isinstance(coord, bool) or not isinstance(coord, (int, float)):
            raise CorpusFormatError("vector coordinates must be numbers", line)
        if not math.isfinite(coord):
            raise CorpusFormatError("vector has a non-finite coordinate", line)

    vector = np.asarray(raw_vector, dtype=np.float64)
    if not np.any(vector):
        raise CorpusFormatError("vector has zero norm", line)
    vector.setflags(write=False)

    # Source predictions are ignored by definition; drop them at the door.
    if role == SOURCE:
        prediction = None
    return EmbeddedSample(id=sample_id, role=role, label=label, vector=vector, prediction=prediction)


def load_corpus(path: str | Path, format: str = "jsonl") -> Corpus:
    """Load a corpus file, preserving line order.

    The corpus dimension is inferred from the first record; every later
    record must match it. Raises CorpusFormatError (with the offending
    line number) for parse errors, dimension mismatches, duplicate ids,
    zero-norm vectors, and non-finite coordinates.
    """
    if format != "jsonl":
        raise ValueError(f"unsupported corpus format {format!r}")
    path = Path(path)

    samples: list[EmbeddedSample] = []
    seen_ids: set[str] = set()
    dimension: int | None = None

    with path.open("r", encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(f"invalid JSON ({exc.msg})", line_no) from exc
            sample = _parse_sample(obj, line_no)
            if dimension is None:
                dimension = sample.vector.shape[0]
            elif sample.vector.shape[0] != dimension:
                raise CorpusFormatError(
                    f"vector has dimension {sample.vector.shape[0]}, expected {dimension}",
                    line_no,
                )
            if sample.id in seen_ids:
                raise CorpusFormatError(f"duplicate id {sample.id!r}", line_no)
            seen_ids.add(sample.id)
            samples.append(sample)

    if dimension is None:
        raise CorpusFormatError("no records")

    label_set = frozenset(s.label for s in samples)
    return Corpus(dimension=dimension, samples=tuple(samples), label_set=label_set, path=str(path))


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    """Write a corpus back to JSONL in sample order (LF line endings).

    Float coordinates are serialized with ``repr`` precision, so a
    save/load round trip reproduces the vectors bit for bit.
    """
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        for s in corpus.samples:
            record: dict[str, object] = {
                "id": s.id,
                "role": s.role,
                "label": s.label,
                "vector": [float(x) for x in s.vector],
            }
            if s.prediction is not None:
                record["prediction"] = s.prediction
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")


def validate_corpus(corpus: Corpus) -> ValidationReport:
    """Check every corpus invariant and report all violations.

    Never raises and never mutates: violations come back as issue
    entries. An unknown predicted label is reported but is not fatal to
    evaluation, since such predictions simply never match a gold label.
    """
    issues: list[ValidationIssue] = []

    if not corpus.source:
        issues.append(ValidationIssue(None, EMPTY_SOURCE, "corpus has no source samples"))
    if not corpus.target:
        issues.append(ValidationIssue(None, EMPTY_TARGET, "corpus has no target samples"))

    seen: set[str] = set()
    for s in corpus.samples:
        if s.id in seen:
            issues.append(ValidationIssue(s.id, DUPLICATE_ID, f"id {s.id!r} appears more than once"))
        seen.add(s.id)

        if s.vector.shape != (corpus.dimension,):
            issues.append(
                ValidationIssue(
                    s.id,
                    DIMENSION_MISMATCH,
                    f"vector has dimension {s.vector.shape[0]}, corpus dimension is {corpus.dimension}",
                )
            )
        if not np.all(np.isfinite(s.vector)):
            issues.append(ValidationIssue(s.id, NONFINITE_COORDINATE, "vector has a non-finite coordinate"))
        elif not np.any(s.vector):
            issues.append(ValidationIssue(s.id, ZERO_NORM_VECTOR, "vector has zero norm"))

        if s.role == SOURCE and s.prediction is not None:
            issues.append(ValidationIssue(s.id, SOURCE_PREDICTION, "source sample carries a prediction"))
        if s.prediction is not None and s.prediction not in corpus.label_set:
            issues.append(
                ValidationIssue(
                    s.id,
                    UNKNOWN_PREDICTED_LABEL,
                    f"predicted label {s.prediction!r} never occurs as a gold label",
                )
            )

    return ValidationReport(ok=not issues, issues=tuple(issues))


def apply_predictions(corpus: Corpus, by_id: Mapping[str, str]) -> Corpus:
    """Return a corpus with predictions from an id -> label mapping.

    Every target sample must be covered and every mapped id must exist
    in the corpus; ids of source samples are accepted and ignored.
    """
    known = {s.id for s in corpus.samples}
    for sample_id in by_id:
        if sample_id not in known:
            raise UnknownIdError(sample_id)

    updated: list[EmbeddedSample] = []
    for s in corpus.samples:
        if s.role != TARGET:
            updated.append(s)
            continue
        if s.id not in by_id:
            raise MissingPredictionError(s.id)
        updated.append(replace(s, prediction=by_id[s.id]))
    return Corpus(
        dimension=corpus.dimension,
        samples=tuple(updated),
        label_set=corpus.label_set,
        path=corpus.path,
    )


def attach_predictions(corpus: Corpus, path: str | Path) -> Corpus:
    """Attach predictions from a JSONL file of {"id", "prediction"} rows."""
    path = Path(path)
    by_id: dict[str, str] = {}
    with path.open("r", encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(f"invalid JSON ({exc.msg})", line_no) from exc
            if not isinstance(obj, dict) or "id" not in obj or "prediction" not in obj:
                raise CorpusFormatError("prediction record needs keys 'id' and 'prediction'", line_no)
            sample_id, prediction = obj["id"], obj["prediction"]
            if not isinstance(sample_id, str) or not isinstance(prediction, str):
                raise CorpusFormatError("'id' and 'prediction' must be strings", line_no)
            if sample_id in by_id:
                raise CorpusFormatError(f"duplicate prediction for id {sample_id!r}", line_no)
            by_id[sample_id] = prediction
    return apply_predictions(corpus, by_id)
