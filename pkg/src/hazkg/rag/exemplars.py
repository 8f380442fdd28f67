"""Few-shot exemplar store and similarity selection.

The store file is line-delimited JSON records with fields id, question,
cypher, result_digest. Every exemplar's query must parse and validate
against the schema it will be used with; a store that ships a broken
exemplar fails at load, not at chat time.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from hazkg.cypher import parse, validate
from hazkg.graph.schema import GraphSchema
from hazkg.rag.embedding import cosine


class EmptyStore(ValueError):
    """Selection requested from a store with no exemplars."""


class ExemplarError(ValueError):
    """Store file is malformed or an exemplar fails schema validation."""


@dataclass(frozen=True)
class Exemplar:
    id: str
    question: str
    cypher: str
    result_digest: str
    embedding: tuple[float, ...]


class ExemplarStore:
    def __init__(self, exemplars: list[Exemplar], embedder=None):
        self.exemplars = list(exemplars)
        self.embedder = embedder

    def __len__(self) -> int:
        return len(self.exemplars)

    @classmethod
    def load(cls, path: str | os.PathLike, embedder, schema: GraphSchema | None = None) -> "ExemplarStore":
        exemplars: list[Exemplar] = []
        seen_ids: set[str] = set()
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                    exemplar = Exemplar(
                        id=record["id"],
                        question=record["question"],
                        cypher=record["cypher"],
                        result_digest=record.get("result_digest", ""),
                        embedding=embedder.embed(record["question"]),
                    )
                except (json.JSONDecodeError, KeyError, TypeError) as exc:
                    raise ExemplarError(f"{path}:{lineno}: bad exemplar record: {exc}") from exc
                if exemplar.id in seen_ids:
                    raise ExemplarError(f"{path}:{lineno}: duplicate exemplar id {exemplar.id!r}")
                seen_ids.add(exemplar.id)
                if schema is not None:
                    try:
                        diagnostics = validate(parse(exemplar.cypher), schema)
                    except ValueError as exc:
                        raise ExemplarError(
                            f"{path}:{lineno}: exemplar {exemplar.id!r} query does not parse: {exc}"
                        ) from exc
                    if diagnostics:
                        raise ExemplarError(
                            f"{path}:{lineno}: exemplar {exemplar.id!r} fails schema validation: "
                            + "; ".join(str(d) for d in diagnostics)
                        )
                exemplars.append(exemplar)
        return cls(exemplars, embedder)


def rank_exemplars(
    question: str,
    store: ExemplarStore,
    k: int = 4,
    embedder=None,
    question_embedding: tuple[float, ...] | None = None,
) -> list[tuple[Exemplar, float]]:
    """Top-k (exemplar, similarity) pairs by cosine similarity to the
    embedded question, sorted by non-increasing similarity with ties broken
    by ascending id; all of the store when it holds fewer than k.

    Passing question_embedding skips the embed call, so a caller that
    already embedded the question (the chat pipeline) does not pay for a
    second round trip in remote embedding mode.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if len(store) == 0:
        raise EmptyStore("no exemplars loaded")
    if question_embedding is None:
        embedder = embedder if embedder is not None else store.embedder
        if embedder is None:
            raise ValueError("store has no embedder attached")
        question_embedding = embedder.embed(question)
    scored = [(ex, cosine(question_embedding, ex.embedding)) for ex in store.exemplars]
    scored.sort(key=lambda pair: (-pair[1], pair[0].id))
    return scored[:k]


def select_few_shots(question: str, store: ExemplarStore, k: int = 4) -> list[Exemplar]:
    """The exemplars to inject into the prompt, similarity-ordered."""
    return [exemplar for exemplar, _ in rank_exemplars(question, store, k)]
