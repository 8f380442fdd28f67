"""Command-line entry points.

    hazkg ingest <corpus-dir> --out <snapshot> [--report <file>]
    hazkg serve --config <file>
    hazkg query --snapshot <file> [--format text|json]   (query on stdin)
    hazkg stats --snapshot <file>

Exit codes: 0 success, 1 usage, 2 I/O (missing or unreadable files),
3 data (validation failures, corrupt snapshots, query diagnostics).
"""

from __future__ import annotations

import argparse
import json
import sys

from hazkg.cypher import CypherSyntaxError, ExecutionLimit, UnsupportedFeature, execute, parse, validate
from hazkg.graph import CorruptSnapshot, IoFailure, apply_plan, load_snapshot, save_snapshot, schema_of
from hazkg.ingest import CorpusLayoutError, load_corpus, reconcile_and_build
from hazkg.rag import (
    BackendUnavailable,
    ExemplarError,
    ExemplarStore,
    RemoteChatClient,
    RemoteEmbeddingClient,
    ScriptedStubClient,
    TrigramHashEmbedder,
)
from hazkg.service.app import ServiceState, create_app
from hazkg.service.config import ConfigError, load_config, validate_for_serve

USAGE_EXIT = 1
IO_EXIT = 2
DATA_EXIT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(USAGE_EXIT)


def _build_parser() -> _Parser:
    parser = _Parser(prog="hazkg", description="hazardous-chemical knowledge graph service")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_ingest = sub.add_parser("ingest", help="parse a corpus, build the graph, save a snapshot")
    p_ingest.add_argument("corpus_dir")
    p_ingest.add_argument("--out", required=True, help="snapshot file to write")
    p_ingest.add_argument("--report", help="ingest report JSONL path (default: <out>.report.jsonl)")

    p_serve = sub.add_parser("serve", help="serve the HTTP API from a snapshot")
    p_serve.add_argument("--config", required=True)

    p_query = sub.add_parser("query", help="run one query from stdin against a snapshot")
    p_query.add_argument("--snapshot", required=True)
    p_query.add_argument("--format", choices=("text", "json"), default="text")

    p_stats = sub.add_parser("stats", help="print node and edge counts of a snapshot")
    p_stats.add_argument("--snapshot", required=True)
    return parser


def _cmd_ingest(args) -> int:
    reach, ctd, niosh, skipped = load_corpus(args.corpus_dir)
    plan, report = reconcile_and_build(reach, ctd, niosh, prior_skips=skipped)
    graph = apply_plan(plan)
    checksum = save_snapshot(graph, args.out)
    report_path = args.report or f"{args.out}.report.jsonl"
    with open(report_path, "w", encoding="utf-8") as fh:
        fh.write(report.to_jsonl())
    print(report.summary_text())
    print(f"snapshot: {args.out} (sha256={checksum})")
    print(f"report: {report_path}")
    return 0


def build_embedder(config):
    if config.embedding_mode == "remote":
        return RemoteEmbeddingClient(
            config.embedding_endpoint, config.embedding_model, config.embedding_key_env
        )
    return TrigramHashEmbedder()


def build_llm(config):
    if config.llm_mode == "remote":
        return RemoteChatClient(config.llm_endpoint, config.llm_model, config.llm_key_env)
    return ScriptedStubClient.from_file(config.stub_script)


def build_state(config) -> ServiceState:
    """Load everything the server needs; any failure here keeps the port closed."""
    validate_for_serve(config)
    graph, checksum = load_snapshot(config.snapshot)
    embedder = build_embedder(config)
    store = ExemplarStore.load(config.exemplars, embedder, schema_of(graph))
    return ServiceState(
        graph=graph,
        store=store,
        llm=build_llm(config),
        embedder=embedder,
        snapshot_checksum=checksum,
        row_cap=config.row_cap,
        time_budget=config.time_cap_seconds,
        few_shot_k=config.few_shot_k,
        trace_log=config.trace_log,
    )


def _cmd_serve(args) -> int:
    config = load_config(args.config)
    state = build_state(config)
    app = create_app(state, cors_allow=config.cors_allow)
    import uvicorn

    uvicorn.run(app, host=config.listen_host, port=config.listen_port, log_level="info")
    return 0


def _cmd_query(args) -> int:
    graph, _ = load_snapshot(args.snapshot)
    text = sys.stdin.read()
    try:
        ast = parse(text)
    except (CypherSyntaxError, UnsupportedFeature) as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return DATA_EXIT
    diagnostics = validate(ast, schema_of(graph))
    if diagnostics:
        for diagnostic in diagnostics:
            sys.stderr.write(f"{diagnostic}\n")
        return DATA_EXIT
    try:
        table = execute(ast, graph)
    except ExecutionLimit as exc:
        sys.stderr.write(f"ExecutionLimit: {exc}\n")
        return DATA_EXIT
    if args.format == "json":
        print(json.dumps({"columns": table.columns, "rows": table.render_rows()}, ensure_ascii=False))
    else:
        output = table.to_text()
        if output:
            print(output)
    return 0


def _cmd_stats(args) -> int:
    graph, checksum = load_snapshot(args.snapshot)
    stats = graph.stats()
    for label, count in stats["nodes"].items():
        print(f"{label}: {count}")
    for etype, count in stats["edges"].items():
        print(f"{etype}: {count}")
    print(f"snapshot_checksum: {checksum}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "ingest": _cmd_ingest,
        "serve": _cmd_serve,
        "query": _cmd_query,
        "stats": _cmd_stats,
    }
    try:
        return handlers[args.command](args)
    except (IoFailure, CorpusLayoutError, FileNotFoundError, PermissionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return IO_EXIT
    except (CorruptSnapshot, ConfigError, ExemplarError, BackendUnavailable, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return DATA_EXIT


if __name__ == "__main__":
    sys.exit(main())
