"""Exception types raised by the depthf1 toolkit."""

from __future__ import annotations


class DepthF1Error(Exception):
    """Base class for all toolkit errors."""


class CorpusFormatError(DepthF1Error):
    """A corpus or prediction file violates the JSONL schema.

    ``line`` is the 1-based line number of the offending record, or None
    for whole-file problems (e.g. an empty file).
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MissingPredictionError(DepthF1Error):
    """A target sample has no prediction where one is required."""

    def __init__(self, sample_id: str):
        super().__init__(f"no prediction for target sample {sample_id!r}")
        self.sample_id = sample_id


class UnknownIdError(DepthF1Error):
    """A prediction file names an id that is not in the corpus."""

    def __init__(self, sample_id: str):
        super().__init__(f"prediction for unknown sample id {sample_id!r}")
        self.sample_id = sample_id


class DegenerateWeightsError(DepthF1Error):
    """Every sample in the evaluation subset is at least as deep as the
    source median, so all weight numerators clamp to zero and the weight
    table cannot be normalized."""
