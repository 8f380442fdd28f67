"""Line-delimited graph snapshots with an integrity checksum.

Format (UTF-8, LF line endings), documented bit-exactly in
docs/snapshot_format.md:

    hazkg-snapshot/1 sha256=<hex> nodes=<n> edges=<m>
    N\t<id>\t<label>\t<json properties, sorted keys>
    E\t<src>\t<dst>\t<type>\t<json properties, sorted keys>

The checksum covers every byte after the header line. Node lines are
sorted by id, edge lines keep insertion order, so saving the same graph
twice produces identical bytes.
"""

from __future__ import annotations

import hashlib
import json
import os

from hazkg.graph.store import PropertyGraph

FORMAT_TAG = "hazkg-snapshot/1"


class IoFailure(OSError):
    """Snapshot file could not be read or written."""


class CorruptSnapshot(ValueError):
    """Snapshot bytes do not match the recorded checksum or format."""


def _render_body(graph: PropertyGraph) -> str:
    lines = []
    for node in graph.nodes():
        props = json.dumps(node.properties, sort_keys=True)
        lines.append(f"N\t{node.id}\t{node.label}\t{props}")
    for edge in graph.edges():
        props = json.dumps(edge.properties, sort_keys=True)
        lines.append(f"E\t{edge.src}\t{edge.dst}\t{edge.type}\t{props}")
    return "".join(line + "\n" for line in lines)


def content_checksum(graph: PropertyGraph) -> str:
    return hashlib.sha256(_render_body(graph).encode("utf-8")).hexdigest()


def save_snapshot(graph: PropertyGraph, path: str | os.PathLike) -> str:
    """Write the graph to path; returns the content checksum."""
    body = _render_body(graph)
    checksum = hashlib.sha256(body.encode("utf-8")).hexdigest()
    n_stats = graph.stats()
    header = (
        f"{FORMAT_TAG} sha256={checksum}"
        f" nodes={sum(n_stats['nodes'].values())}"
        f" edges={sum(n_stats['edges'].values())}\n"
    )
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(header)
            fh.write(body)
    except OSError as exc:
        raise IoFailure(f"cannot write snapshot {path}: {exc}") from exc
    return checksum


def load_snapshot(path: str | os.PathLike) -> tuple[PropertyGraph, str]:
    """Read a snapshot; returns (graph, checksum). Verifies format and checksum."""
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            header = fh.readline()
            body = fh.read()
    except OSError as exc:
        raise IoFailure(f"cannot read snapshot {path}: {exc}") from exc

    fields = header.rstrip("\n").split(" ")
    if not header.endswith("\n") or len(fields) != 4 or fields[0] != FORMAT_TAG:
        raise CorruptSnapshot(f"unrecognized snapshot header in {path}")
    try:
        declared = dict(f.split("=", 1) for f in fields[1:])
        want_checksum = declared["sha256"]
        want_nodes = int(declared["nodes"])
        want_edges = int(declared["edges"])
    except (KeyError, ValueError) as exc:
        raise CorruptSnapshot(f"bad snapshot header in {path}: {exc}") from exc

    got_checksum = hashlib.sha256(body.encode("utf-8")).hexdigest()
    if got_checksum != want_checksum:
        raise CorruptSnapshot(
            f"snapshot checksum mismatch in {path} (file truncated or edited)"
        )

    graph = PropertyGraph()
    n_nodes = n_edges = 0
    lines = body.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for lineno, line in enumerate(lines, start=2):
        parts = line.split("\t")
        try:
            if parts[0] == "N" and len(parts) == 4:
                graph.add_node(parts[2], json.loads(parts[3]), node_id=int(parts[1]))
                n_nodes += 1
            elif parts[0] == "E" and len(parts) == 5:
                graph.add_edge(int(parts[1]), int(parts[2]), parts[3], json.loads(parts[4]))
                n_edges += 1
            else:
                raise ValueError(f"unrecognized record {parts[0]!r}")
        except (ValueError, KeyError) as exc:
            raise CorruptSnapshot(f"{path}:{lineno}: {exc}") from exc
    if (n_nodes, n_edges) != (want_nodes, want_edges):
        raise CorruptSnapshot(
            f"snapshot header declares {want_nodes} nodes/{want_edges} edges, "
            f"found {n_nodes}/{n_edges}"
        )
    graph.check_invariants()
    return graph, got_checksum
