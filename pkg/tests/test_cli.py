"""CLI subcommands: ingest/query/stats round trips and exit codes."""

import io
import json

import pytest

from hazkg.service.cli import main
from hazkg.service.config import ConfigError, load_config, validate_for_serve
from tests.conftest import BALANCED_HEART_QUERY, CORPUS_DIR, FIXTURES


@pytest.fixture()
def snapshot(tmp_path):
    path = tmp_path / "graph.snap"
    rc = main(["ingest", str(CORPUS_DIR), "--out", str(path)])
    assert rc == 0
    return path


def test_ingest_writes_snapshot_and_report(snapshot, capsys):
    assert snapshot.exists()
    report_path = snapshot.parent / (snapshot.name + ".report.jsonl")
    assert report_path.exists()
    first = json.loads(report_path.read_text().splitlines()[0])
    assert first["kind"] == "summary"
    assert first["nodes"]["Substance"] == 1
    assert first["nodes"]["Disease"] == 13


def test_ingest_missing_corpus_is_io_exit(tmp_path, capsys):
    rc = main(["ingest", str(tmp_path / "nowhere"), "--out", str(tmp_path / "g.snap")])
    assert rc == 2


def test_query_text_prints_13_lines(snapshot, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(BALANCED_HEART_QUERY))
    rc = main(["query", "--snapshot", str(snapshot)])
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 13
    assert "heart block" in lines[2]  # canonical sorted order


def test_query_json_format(snapshot, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("MATCH (o:Organ) RETURN o.Organ"))
    rc = main(["query", "--snapshot", str(snapshot), "--format", "json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"columns": ["o.Organ"], "rows": [["heart"]]}


def test_query_diagnostics_exit_3(snapshot, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("MATCH (n:Person) RETURN n"))
    rc = main(["query", "--snapshot", str(snapshot)])
    assert rc == 3
    assert "UnknownLabel" in capsys.readouterr().err


def test_query_missing_snapshot_exit_2(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("MATCH (n) RETURN n"))
    rc = main(["query", "--snapshot", str(tmp_path / "absent.snap")])
    assert rc == 2


def test_query_corrupt_snapshot_exit_3(snapshot, capsys, monkeypatch):
    data = snapshot.read_bytes()
    snapshot.write_bytes(data[:-7])
    monkeypatch.setattr("sys.stdin", io.StringIO("MATCH (n) RETURN n"))
    rc = main(["query", "--snapshot", str(snapshot)])
    assert rc == 3


def test_stats_prints_counts(snapshot, capsys):
    rc = main(["stats", "--snapshot", str(snapshot)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "Substance: 1" in out
    assert "Disease: 13" in out
    assert "Organ: 1" in out
    assert "related_to_disease: 13" in out


def test_usage_error_exit_1(capsys):
    with pytest.raises(SystemExit) as err:
        main(["ingest"])  # missing required --out and corpus positional
    assert err.value.code == 1


def test_serve_missing_snapshot_exit_2(tmp_path, capsys):
    config = tmp_path / "svc.conf"
    config.write_text(
        "snapshot = absent.snap\n"
        f"exemplars = {FIXTURES / 'exemplars.jsonl'}\n"
        "llm_mode = stub\n"
        f"stub_script = {FIXTURES / 'stub_replies.jsonl'}\n"
    )
    rc = main(["serve", "--config", str(config)])
    assert rc == 2


def test_serve_corrupt_snapshot_never_starts(snapshot, tmp_path, capsys):
    # startup is atomic: a snapshot that fails validation keeps the port closed
    data = snapshot.read_bytes()
    snapshot.write_bytes(data[: len(data) - 11])
    config = tmp_path / "svc.conf"
    config.write_text(
        f"snapshot = {snapshot}\n"
        f"exemplars = {FIXTURES / 'exemplars.jsonl'}\n"
        "llm_mode = stub\n"
        f"stub_script = {FIXTURES / 'stub_replies.jsonl'}\n"
    )
    rc = main(["serve", "--config", str(config)])
    assert rc == 3
    assert "checksum" in capsys.readouterr().err


def test_config_parses_fixture_file():
    config = load_config(FIXTURES / "config.stub.conf")
    assert config.listen_port == 8080
    assert config.llm_mode == "stub"
    assert config.few_shot_k == 4
    assert config.cors_allow == ["http://localhost:5173", "http://127.0.0.1:5173"]
    assert config.stub_script.endswith("stub_replies.jsonl")


def test_config_rejects_unknown_key(tmp_path):
    bad = tmp_path / "bad.conf"
    bad.write_text("no_such_key = 1\n")
    with pytest.raises(ConfigError):
        load_config(bad)


def test_config_enforces_exactly_one_llm_mode(tmp_path):
    conf = tmp_path / "both.conf"
    snap = tmp_path / "g.snap"
    snap.write_text("")
    conf.write_text(
        f"snapshot = {snap}\n"
        f"exemplars = {FIXTURES / 'exemplars.jsonl'}\n"
        "llm_mode = stub\n"
        f"stub_script = {FIXTURES / 'stub_replies.jsonl'}\n"
        "llm_endpoint = http://example.test\n"
    )
    with pytest.raises(ConfigError, match="exactly one"):
        validate_for_serve(load_config(conf))


def test_config_remote_mode_requires_endpoint(tmp_path):
    conf = tmp_path / "remote.conf"
    snap = tmp_path / "g.snap"
    snap.write_text("")
    conf.write_text(
        f"snapshot = {snap}\n"
        f"exemplars = {FIXTURES / 'exemplars.jsonl'}\n"
        "llm_mode = remote\n"
    )
    with pytest.raises(ConfigError):
        validate_for_serve(load_config(conf))
