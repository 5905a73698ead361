"""Dataset encoding and subsampling into the embedded-corpus JSONL format.

Input: JSONL with keys id, label, role ("source" | "target"), and either
``text`` (single_text task) or ``premise``/``hypothesis`` (nli_pair
task). Output: one JSON object per line with keys id, role, label,
vector, the wire format the evaluation toolkit loads and validates.

NLI pairs are jointly encoded as one string, premise and hypothesis
separated by a single newline character. Vectors are emitted at 32-bit
precision as decimal JSON numbers; the consumer widens them to 64-bit.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .encoders import DEFAULT_MODEL, load_encoder

ROLES = ("source", "target")
TASKS = ("single_text", "nli_pair")
LABEL_MAPS = ("none", "ceil-half")

_ENCODE_BATCH = 256


class DatasetFormatError(ValueError):
    """A raw dataset record violates the input schema."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class RawRecord:
    """One labeled input text (or premise/hypothesis pair)."""

    id: str
    text: str
    label: str
    role: str


@dataclass(frozen=True)
class EncodeSummary:
    records: int
    dimension: int
    model: str
    output: str


@dataclass(frozen=True)
class SubsampleSummary:
    kept: int
    total: int
    output: str


def composed_text(obj: dict, task: str, line: int | None = None) -> str:
    """The exact string handed to the encoder for one record."""
    if task == "single_text":
        text = obj.get("text")
        if not isinstance(text, str) or not text:
            raise DatasetFormatError("record needs a non-empty 'text'", line)
        return text
    if task == "nli_pair":
        premise = obj.get("premise")
        hypothesis = obj.get("hypothesis")
        if not isinstance(premise, str) or not premise:
            raise DatasetFormatError("record needs a non-empty 'premise'", line)
        if not isinstance(hypothesis, str) or not hypothesis:
            raise DatasetFormatError("record needs a non-empty 'hypothesis'", line)
        return premise + "\n" + hypothesis
    raise ValueError(f"unknown task {task!r}")


def map_label(label: str, label_map: str) -> str:
    """Optionally fold an integer label scale in half, rounding up.

    ``ceil-half`` sends 1..10 to 1..5 (1,2 -> 1; 9,10 -> 5), the usual
    reduction of ten-point review scores to five-point ones.
    """
    if label_map == "none":
        return label
    if label_map == "ceil-half":
        try:
            value = int(label)
        except ValueError as exc:
            raise ValueError(f"ceil-half needs integer labels, got {label!r}") from exc
        return str(math.ceil(value / 2))
    raise ValueError(f"unknown label map {label_map!r}")


def read_raw_records(path: str | Path, task: str) -> list[tuple[RawRecord, str]]:
    """Parse the input JSONL into records plus their encoder strings."""
    path = Path(path)
    records: list[tuple[RawRecord, str]] = []
    seen: set[str] = set()
    with path.open("r", encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DatasetFormatError(f"invalid JSON ({exc.msg})", line_no) from exc
            if not isinstance(obj, dict):
                raise DatasetFormatError("record is not a JSON object", line_no)

            record_id = obj.get("id")
            label = obj.get("label")
            role = obj.get("role")
            if not isinstance(record_id, str) or not record_id:
                raise DatasetFormatError("record needs a non-empty 'id'", line_no)
            if record_id in seen:
                raise DatasetFormatError(f"duplicate id {record_id!r}", line_no)
            seen.add(record_id)
            if not isinstance(label, str) or not label:
                raise DatasetFormatError("record needs a non-empty 'label'", line_no)
            if role not in ROLES:
                raise DatasetFormatError("record needs role 'source' or 'target'", line_no)

            text = composed_text(obj, task, line_no)
            records.append((RawRecord(id=record_id, text=text, label=label, role=role), text))
    if not records:
        raise DatasetFormatError("no records")
    return records


def encode_dataset(
    input_path: str | Path,
    task: str,
    model_id: str = DEFAULT_MODEL,
    output_path: str | Path = "corpus.jsonl",
    label_map: str = "none",
) -> EncodeSummary:
    """Encode a raw dataset into evaluation-ready corpus JSONL.

    Record order is preserved; the vector dimension is whatever the
    encoder produces. Raises DatasetFormatError for schema problems and
    EncoderLoadError when the model cannot be constructed.
    """
    if task not in TASKS:
        raise ValueError(f"task must be one of {TASKS}, got {task!r}")
    records = read_raw_records(input_path, task)
    encoder = load_encoder(model_id)

    output_path = Path(output_path)
    written = 0
    with output_path.open("w", encoding="utf-8", newline="\n") as handle:
        for start in range(0, len(records), _ENCODE_BATCH):
            batch = records[start : start + _ENCODE_BATCH]
            vectors = encoder.encode([text for _, text in batch])
            for (record, _), vector in zip(batch, vectors):
                line = {
                    "id": record.id,
                    "role": record.role,
                    "label": map_label(record.label, label_map),
                    "vector": [float(np.float32(x)) for x in vector],
                }
                handle.write(json.dumps(line, ensure_ascii=False) + "\n")
                written += 1
    return EncodeSummary(
        records=written,
        dimension=int(encoder.dimension),
        model=model_id,
        output=str(output_path),
    )


def subsample(
    input_path: str | Path, n: int, seed: int, output_path: str | Path
) -> SubsampleSummary:
    """Uniform subsample without replacement, preserving line order.

    Works on any JSONL file (raw datasets or encoded corpora alike);
    surviving lines are emitted verbatim. Deterministic under the seed.
    """
    lines = [line for line in Path(input_path).read_text(encoding="utf-8").splitlines() if line.strip()]
    if n > len(lines):
        raise ValueError(f"cannot sample {n} of {len(lines)} records")
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = np.random.default_rng(seed)
    kept = np.sort(rng.choice(len(lines), size=n, replace=False))
    output_path = Path(output_path)
    with output_path.open("w", encoding="utf-8", newline="\n") as handle:
        for index in kept:
            handle.write(lines[int(index)] + "\n")
    return SubsampleSummary(kept=n, total=len(lines), output=str(output_path))
