"""Question/exemplar embeddings.

The built-in embedder hashes character trigrams into 256 dimensions and
L2-normalizes, which is enough to rank exemplar questions by cosine
similarity deterministically and offline. A remote client with the same
interface can swap in a hosted embedding model; only similarity ordering
matters downstream, not the absolute values.
"""

from __future__ import annotations

import hashlib
import math
import os

import httpx


class BackendUnavailable(RuntimeError):
    """A remote model endpoint could not be reached or answered garbage."""


EMBEDDING_DIM = 256


class TrigramHashEmbedder:
    """Deterministic offline embedder: hashed character trigrams, unit L2 norm."""

    offline = True

    def embed(self, text: str) -> tuple[float, ...]:
        if not text:
            raise ValueError("cannot embed empty text")
        lowered = text.lower()
        if len(lowered) < 3:
            lowered = lowered.ljust(3)
        counts = [0.0] * EMBEDDING_DIM
        for i in range(len(lowered) - 2):
            trigram = lowered[i : i + 3].encode("utf-8")
            index = int.from_bytes(hashlib.sha256(trigram).digest()[:4], "big") % EMBEDDING_DIM
            counts[index] += 1.0
        norm = math.sqrt(sum(c * c for c in counts))
        return tuple(c / norm for c in counts)


class RemoteEmbeddingClient:
    """Client for an embeddings endpoint speaking the common JSON shape
    (POST {model, input} -> {data: [{embedding: [...]}]})."""

    offline = False

    def __init__(self, endpoint: str, model: str, api_key_env: str = "",
                 timeout: float = 30.0, transport: httpx.BaseTransport | None = None):
        self.endpoint = endpoint
        self.model = model
        self.api_key_env = api_key_env
        self._client = httpx.Client(timeout=timeout, transport=transport)

    def embed(self, text: str) -> tuple[float, ...]:
        if not text:
            raise ValueError("cannot embed empty text")
        headers = {}
        if self.api_key_env:
            key = os.environ.get(self.api_key_env, "")
            if not key:
                raise BackendUnavailable(f"environment variable {self.api_key_env} is not set")
            headers["Authorization"] = f"Bearer {key}"
        try:
            response = self._client.post(
                self.endpoint, json={"model": self.model, "input": text}, headers=headers
            )
            response.raise_for_status()
            payload = response.json()
            vector = payload["data"][0]["embedding"]
        except (httpx.HTTPError, KeyError, IndexError, ValueError) as exc:
            raise BackendUnavailable(f"embedding backend failed: {exc}") from exc
        norm = math.sqrt(sum(v * v for v in vector))
        if norm == 0:
            raise BackendUnavailable("embedding backend returned a zero vector")
        return tuple(v / norm for v in vector)


def cosine(u: tuple[float, ...], v: tuple[float, ...]) -> float:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    dot = sum(a * b for a, b in zip(u, v))
    nu = math.sqrt(sum(a * a for a in u))
    nv = math.sqrt(sum(b * b for b in v))
    if nu == 0 or nv == 0:
        return 0.0
    return dot / (nu * nv)
