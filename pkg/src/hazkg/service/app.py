"""HTTP surface: chat, raw query, schema, substance lookup, health.

All bodies are JSON with the field names documented in docs/api.md;
errors share one envelope: {"code": ..., "message": ...}. The graph is
loaded and validated before the app is constructed, so a server that
accepts traffic always has a complete snapshot behind it.
"""

from __future__ import annotations

import json
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from hazkg.cypher import CypherSyntaxError, ExecutionLimit, UnsupportedFeature, execute, parse, validate
from hazkg.cypher.executor import ResultTable
from hazkg.graph.schema import GraphSchema, schema_of
from hazkg.graph.store import Direction, PropertyGraph
from hazkg.model import SubstanceKey
from hazkg.rag import (
    BackendUnavailable,
    EmptyQuestion,
    ExemplarStore,
    answer_turn,
)


@dataclass
class ServiceState:
    graph: PropertyGraph
    store: ExemplarStore
    llm: object
    embedder: object
    snapshot_checksum: str
    row_cap: int = 10_000
    time_budget: float = 2.0
    few_shot_k: int = 4
    trace_log: str | None = None
    schema: GraphSchema = field(init=False)

    def __post_init__(self) -> None:
        self.schema = schema_of(self.graph)


class ChatRequest(BaseModel):
    question: str


class QueryRequest(BaseModel):
    cypher: str


def _error(status: int, code: str, message: str, **extra) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message, **extra})


def _table_payload(table: ResultTable) -> dict:
    return {"columns": table.columns, "rows": table.render_rows()}


def create_app(state: ServiceState, cors_allow: list[str] | None = None) -> FastAPI:
    app = FastAPI(title="hazkg", docs_url=None, redoc_url=None)
    if cors_allow:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=cors_allow,
            allow_methods=["GET", "POST"],
            allow_headers=["content-type"],
        )

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return _error(400, "malformed_body", "request body does not match the endpoint schema")

    @app.exception_handler(BackendUnavailable)
    async def backend_down(request: Request, exc: BackendUnavailable):
        return _error(502, "backend_unavailable", str(exc))

    @app.exception_handler(ExecutionLimit)
    async def execution_limit(request: Request, exc: ExecutionLimit):
        return _error(422, "execution_limit", str(exc))

    @app.get("/healthz")
    def healthz():
        return {"status": "ok", "snapshot_checksum": state.snapshot_checksum}

    @app.get("/api/schema")
    def api_schema():
        return {
            "nodes": {label: list(props) for label, props in state.schema.node_props.items()},
            "edges": [
                {"type": etype, "from": src, "to": dst}
                for etype, (src, dst) in state.schema.edge_types.items()
            ],
        }

    @app.get("/api/substances/{key}")
    def api_substance(key: str):
        try:
            SubstanceKey.parse(key)
        except ValueError:
            return _error(400, "bad_key", f"not a substance key: {key!r}")
        node = state.graph.by_key("Substance", key)
        if node is None:
            return _error(404, "unknown_substance", f"no substance with key {key}")
        neighbors: dict[str, list[dict]] = {}
        for etype in state.schema.edge_types:
            pairs = state.graph.neighbors(node.id, etype, Direction.OUT)
            if pairs:
                neighbors[etype] = [
                    {"edge": edge.properties, "node": {"label": n.label, "properties": n.properties}}
                    for edge, n in pairs
                ]
        return {
            "substance": {"label": node.label, "properties": node.properties},
            "neighbors": neighbors,
        }

    @app.post("/api/query")
    def api_query(body: QueryRequest):
        try:
            ast = parse(body.cypher)
        except (CypherSyntaxError, UnsupportedFeature) as exc:
            return _error(422, "query_invalid", str(exc), diagnostics=[f"{type(exc).__name__}: {exc}"])
        diagnostics = validate(ast, state.schema)
        if diagnostics:
            return _error(
                422, "query_invalid", "query fails schema validation",
                diagnostics=[str(d) for d in diagnostics],
            )
        table = execute(ast, state.graph, row_cap=state.row_cap, time_budget=state.time_budget)
        return _table_payload(table)

    @app.post("/api/chat")
    def api_chat(body: ChatRequest):
        try:
            response = answer_turn(
                body.question,
                state.graph,
                state.store,
                state.llm,
                k=state.few_shot_k,
                row_cap=state.row_cap,
                time_budget=state.time_budget,
                embedder=state.embedder,
            )
        except EmptyQuestion as exc:
            return _error(400, "empty_question", str(exc))
        trace_id = uuid.uuid4().hex
        if state.trace_log:
            with open(state.trace_log, "a", encoding="utf-8") as fh:
                fh.write(
                    json.dumps(
                        {"trace_id": trace_id, "question": body.question, "steps": response.trace},
                        sort_keys=True,
                    )
                    + "\n"
                )
        return {
            "answer": response.answer,
            "cypher": response.cypher,
            "rows": _table_payload(response.rows) if response.rows is not None else None,
            "refused": response.refused,
            "trace_id": trace_id,
        }

    return app
