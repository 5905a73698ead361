"""Adapter that encodes raw labeled text datasets into the embedded-corpus
JSONL format consumed by the depthf1 evaluation toolkit."""

__version__ = "0.1.0"

from .encode import (
    DatasetFormatError,
    EncodeSummary,
    RawRecord,
    SubsampleSummary,
    composed_text,
    encode_dataset,
    map_label,
    read_raw_records,
    subsample,
)
from .encoders import DEFAULT_MODEL, EncoderLoadError, HashingEncoder, load_encoder

__all__ = [
    "__version__",
    "DatasetFormatError",
    "EncodeSummary",
    "RawRecord",
    "SubsampleSummary",
    "composed_text",
    "encode_dataset",
    "map_label",
    "read_raw_records",
    "subsample",
    "DEFAULT_MODEL",
    "EncoderLoadError",
    "HashingEncoder",
    "load_encoder",
]
