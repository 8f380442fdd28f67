"""The chat turn: embed, select, prompt, generate, validate-or-refuse,
execute, summarize.

The safety rule sits in the middle: a candidate query string from the
model reaches the executor only after it parsed, validated against the
live schema, and stayed inside the read-only subset. Anything else turns
into a refusal whose answer text is exactly "I don't know." Each step
appends to the response trace so tests (and operators) can audit that no
unvalidated query ever ran.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field

from hazkg.cypher import (
    CypherSyntaxError,
    QueryAst,
    ResultTable,
    UnsupportedFeature,
    execute,
    parse,
    render_cell,
    validate,
)
from hazkg.cypher.executor import DEFAULT_ROW_CAP, DEFAULT_TIME_BUDGET
from hazkg.graph.schema import GraphSchema, schema_of
from hazkg.graph.store import PropertyGraph
from hazkg.rag.exemplars import ExemplarStore, rank_exemplars
from hazkg.rag.prompt import PromptContext, build_prompt

REFUSAL_TEXT = "I don't know."


class EmptyQuestion(ValueError):
    """The user question was empty or whitespace."""


class NoQueryInReply(ValueError):
    """The model reply contained no recognizable query block."""


@dataclass(frozen=True)
class ValidatedQuery:
    text: str
    ast: QueryAst


@dataclass(frozen=True)
class Refusal:
    reasons: tuple[str, ...]
    answer: str = REFUSAL_TEXT


@dataclass
class ChatResponse:
    answer: str
    cypher: str | None
    rows: ResultTable | None
    refused: bool
    trace: list[dict] = field(default_factory=list)

    def to_json(self) -> str:
        """Canonical rendering; byte-identical across runs in offline mode."""
        rows = None
        if self.rows is not None:
            rows = {"columns": self.rows.columns, "rows": self.rows.render_rows()}
        return json.dumps(
            {
                "answer": self.answer,
                "cypher": self.cypher,
                "refused": self.refused,
                "rows": rows,
                "trace": self.trace,
            },
            sort_keys=True,
            ensure_ascii=False,
            separators=(",", ":"),
        )


_FENCE = re.compile(r"```[a-zA-Z]*\n(.*?)```", re.DOTALL)


def extract_query(reply: str) -> str | None:
    """First fenced block, else the first line block starting with MATCH."""
    fence = _FENCE.search(reply)
    if fence:
        block = fence.group(1).strip()
        return block or None
    lines = reply.splitlines()
    for start, line in enumerate(lines):
        if line.strip().lower().startswith("match"):
            block = []
            for candidate in lines[start:]:
                if not candidate.strip():
                    break
                block.append(candidate)
            return "\n".join(block).strip()
    return None


def generate_query(context: PromptContext, llm) -> str:
    """One model call; returns the raw candidate query text from the reply."""
    reply = llm.complete(context.render())
    candidate = extract_query(reply)
    if candidate is None:
        raise NoQueryInReply("model reply contains no query block")
    return candidate


def validate_or_refuse(candidate: str, schema: GraphSchema) -> ValidatedQuery | Refusal:
    """Gate between generation and execution; refusal is a value, not an error."""
    try:
        ast = parse(candidate)
    except (CypherSyntaxError, UnsupportedFeature) as exc:
        return Refusal(reasons=(f"{type(exc).__name__}: {exc}",))
    diagnostics = validate(ast, schema)
    if diagnostics:
        return Refusal(reasons=tuple(str(d) for d in diagnostics))
    return ValidatedQuery(text=candidate, ast=ast)


def _inline_prop(ast: QueryAst, label: str, prop: str) -> str | None:
    for path in ast.patterns:
        for node in path.nodes:
            if node.label == label:
                for key, value in node.props:
                    if key == prop:
                        return value
    return None


def summarize_offline(question: str, ast: QueryAst, table: ResultTable) -> str:
    """Deterministic answer text for offline mode.

    When the query has the substance-organ-disease shape the sentence
    mirrors the chat's flagship phrasing; otherwise it lists row values.
    """
    substance = _inline_prop(ast, "Substance", "name")
    organ = _inline_prop(ast, "Organ", "Organ")
    values = [render_cell(cell) for row in table.rows for cell in row[:1]]
    if substance and organ and values:
        quoted = ", ".join(f'"{v}"' for v in values)
        return (
            f"{substance} can potentially impact the {organ} by causing "
            f"the following diseases: {quoted}."
        )
    if not values:
        return "The query returned no results."
    shown = values[:25]
    suffix = "" if len(values) <= 25 else f" (and {len(values) - 25} more)"
    return f"The query returned {len(values)} result(s): " + "; ".join(shown) + suffix + "."


class LlmSummarizer:
    """Second model call that phrases the result table as an answer."""

    def __init__(self, llm):
        self.llm = llm

    def summarize(self, question: str, query: ValidatedQuery, table: ResultTable) -> str:
        rows_text = "\n".join("\t".join(r) for r in table.render_rows())
        prompt = (
            "Use the outcome of the query to answer the user's question. If the question "
            "has several answers, list each of them and create a summary to explain the "
            "context of the list of the answers.\n\n"
            f"Question: {question}\n"
            f"Cypher: {query.text}\n"
            f"Rows ({len(table.rows)}):\n{rows_text}\n"
        )
        return self.llm.complete(prompt)


class TemplateSummarizer:
    def summarize(self, question: str, query: ValidatedQuery, table: ResultTable) -> str:
        return summarize_offline(question, query.ast, table)


def answer_turn(
    question: str,
    graph: PropertyGraph,
    store: ExemplarStore,
    llm,
    k: int = 4,
    row_cap: int = DEFAULT_ROW_CAP,
    time_budget: float = DEFAULT_TIME_BUDGET,
    summarizer=None,
    embedder=None,
) -> ChatResponse:
    """Run one full chat turn. Raises EmptyQuestion on blank input and lets
    BackendUnavailable escape as a failed turn (never a refusal)."""
    if not question or not question.strip():
        raise EmptyQuestion("question must be non-empty")
    if embedder is None:
        embedder = getattr(store, "embedder", None)
    if embedder is None:
        from hazkg.rag.embedding import TrigramHashEmbedder

        embedder = TrigramHashEmbedder()
    if summarizer is None:
        summarizer = TemplateSummarizer() if getattr(llm, "offline", False) else LlmSummarizer(llm)

    trace: list[dict] = []
    question = question.strip()

    question_embedding = embedder.embed(question)
    trace.append({"step": "embed_question", "dimensions": len(question_embedding)})

    ranked = rank_exemplars(question, store, k=k, question_embedding=question_embedding)
    trace.append(
        {
            "step": "select_few_shots",
            "selected": [ex.id for ex, _ in ranked],
            "similarities": [round(sim, 9) for _, sim in ranked],
        }
    )

    schema = schema_of(graph)
    context = build_prompt(question, schema, [ex for ex, _ in ranked])
    rendered = context.render()
    trace.append(
        {
            "step": "build_prompt",
            "sha256": hashlib.sha256(rendered.encode("utf-8")).hexdigest(),
            "characters": len(rendered),
        }
    )

    try:
        candidate = generate_query(context, llm)
    except NoQueryInReply:
        trace.append({"step": "generate_query", "candidate": None})
        trace.append({"step": "refuse", "reasons": ["no query in model reply"]})
        return ChatResponse(answer=REFUSAL_TEXT, cypher=None, rows=None, refused=True, trace=trace)
    trace.append({"step": "generate_query", "candidate": candidate})

    verdict = validate_or_refuse(candidate, schema)
    if isinstance(verdict, Refusal):
        trace.append({"step": "validate_query", "ok": False, "diagnostics": list(verdict.reasons)})
        trace.append({"step": "refuse", "reasons": list(verdict.reasons)})
        return ChatResponse(answer=verdict.answer, cypher=None, rows=None, refused=True, trace=trace)
    trace.append({"step": "validate_query", "ok": True, "diagnostics": []})

    table = execute(verdict.ast, graph, row_cap=row_cap, time_budget=time_budget)
    trace.append({"step": "execute_query", "rows": len(table.rows)})

    answer = summarizer.summarize(question, verdict, table)
    trace.append({"step": "summarize", "characters": len(answer)})

    return ChatResponse(answer=answer, cypher=verdict.text, rows=table, refused=False, trace=trace)
