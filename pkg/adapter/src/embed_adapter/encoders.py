"""Text encoders behind a single interface.

Real sentence-embedding models load through sentence-transformers by
model id. Model ids of the form ``hash:<dim>`` select a dependency-free
deterministic feature-hashing encoder, useful for offline tests and dry
runs of the pipeline; it is not a semantic embedding.
"""

from __future__ import annotations

import hashlib
import re

import numpy as np

DEFAULT_MODEL = "sentence-transformers/all-MiniLM-L6-v2"

_WORD_RE = re.compile(r"[a-z0-9]+")


class EncoderLoadError(RuntimeError):
    """The requested encoder model could not be constructed."""


class HashingEncoder:
    """Deterministic bag-of-tokens feature hashing, L2-normalized.

    Any non-empty text maps to a nonzero vector: word tokens are used
    when present, character trigrams otherwise, and a final fallback
    bucket guards against sign cancellation.
    """

    def __init__(self, dimension: int):
        if dimension <= 0:
            raise ValueError("dimension must be positive")
        self.dimension = dimension

    @staticmethod
    def _tokens(text: str) -> list[str]:
        words = _WORD_RE.findall(text.lower())
        if words:
            return words
        if len(text) >= 3:
            return [text[i : i + 3] for i in range(len(text) - 2)]
        return [text]

    def _bucket(self, token: str) -> tuple[int, float]:
        digest = hashlib.sha256(token.encode("utf-8")).digest()
        index = int.from_bytes(digest[:8], "big") % self.dimension
        sign = -1.0 if digest[8] & 1 else 1.0
        return index, sign

    def encode(self, texts: list[str]) -> np.ndarray:
        out = np.zeros((len(texts), self.dimension), dtype=np.float64)
        for row, text in enumerate(texts):
            for token in self._tokens(text):
                index, sign = self._bucket(token)
                out[row, index] += sign
            if not out[row].any():
                out[row, self._bucket(text + "\x00")[0]] = 1.0
        out /= np.linalg.norm(out, axis=1)[:, None]
        return out.astype(np.float32)


class SentenceTransformerEncoder:
    """Thin wrapper over a sentence-transformers model."""

    def __init__(self, model_id: str):
        try:
            from sentence_transformers import SentenceTransformer
        except ImportError as exc:
            raise EncoderLoadError(
                "sentence-transformers is not installed; install it or use a hash:<dim> model id"
            ) from exc
        try:
            self._model = SentenceTransformer(model_id)
        except Exception as exc:
            raise EncoderLoadError(f"could not load encoder {model_id!r}: {exc}") from exc
        self.dimension = int(self._model.get_sentence_embedding_dimension())

    def encode(self, texts: list[str]) -> np.ndarray:
        vectors = self._model.encode(texts, convert_to_numpy=True, show_progress_bar=False)
        return np.asarray(vectors, dtype=np.float32)


def load_encoder(model_id: str):
    if model_id.startswith("hash:"):
        try:
            dimension = int(model_id.split(":", 1)[1])
        except ValueError as exc:
            raise EncoderLoadError(f"bad hash encoder id {model_id!r}; use hash:<dim>") from exc
        return HashingEncoder(dimension)
    return SentenceTransformerEncoder(model_id)
