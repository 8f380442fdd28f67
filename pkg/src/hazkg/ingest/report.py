"""Ingest bookkeeping: what was inserted, what was dropped, and why.

The report is serialized as a line-delimited structured log: one JSON
object per line, a summary record first, then one record per skipped row
and per conflict.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


@dataclass(frozen=True)
class SkipEntry:
    source: str
    line: int | None
    reason: str
    detail: str


@dataclass(frozen=True)
class ConflictEntry:
    kind: str
    key: str
    detail: str


@dataclass
class IngestReport:
    node_counts: dict[str, int] = field(default_factory=dict)
    edge_counts: dict[str, int] = field(default_factory=dict)
    skipped: list[SkipEntry] = field(default_factory=list)
    conflicts: list[ConflictEntry] = field(default_factory=list)

    def to_jsonl(self) -> str:
        lines = [
            json.dumps(
                {"kind": "summary", "nodes": self.node_counts, "edges": self.edge_counts},
                sort_keys=True,
            )
        ]
        for entry in self.skipped:
            lines.append(json.dumps({"kind": "skip", **asdict(entry)}, sort_keys=True))
        for entry in self.conflicts:
            record = {"kind": "conflict", "conflict": entry.kind, "key": entry.key, "detail": entry.detail}
            lines.append(json.dumps(record, sort_keys=True))
        return "".join(line + "\n" for line in lines)

    @classmethod
    def from_jsonl(cls, text: str) -> "IngestReport":
        report = cls()
        for line in text.splitlines():
            if not line.strip():
                continue
            record = json.loads(line)
            kind = record.pop("kind")
            if kind == "summary":
                report.node_counts = record["nodes"]
                report.edge_counts = record["edges"]
            elif kind == "skip":
                report.skipped.append(SkipEntry(**record))
            elif kind == "conflict":
                report.conflicts.append(
                    ConflictEntry(record["conflict"], record["key"], record["detail"])
                )
        return report

    def summary_text(self) -> str:
        nodes = ", ".join(f"{k}={v}" for k, v in self.node_counts.items())
        edges = ", ".join(f"{k}={v}" for k, v in self.edge_counts.items())
        return (
            f"nodes: {nodes}\nedges: {edges}\n"
            f"skipped rows: {len(self.skipped)}\nconflicts: {len(self.conflicts)}"
        )
