"""Embedded property-graph store.

Nodes and directed edges both carry string-keyed, string-valued property
maps. The store enforces the static schema: one node per (label, natural
key), edge endpoints must exist, and every edge's endpoint labels must
match the signature table. Build once, then share read-only: queries and
lookups never mutate.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from hazkg.graph.schema import EDGE_SIGNATURES, NATURAL_KEY_PROP, NATURAL_NAME_PROP, NODE_LABELS


class SchemaViolation(ValueError):
    """A node or edge contradicts the static schema."""


class UnknownNode(KeyError):
    """Operation referenced a node id that is not in the graph."""


@dataclass(frozen=True)
class Node:
    id: int
    label: str
    properties: dict[str, str]

    def render(self) -> str:
        inner = ", ".join(f"{k}: {v!r}" for k, v in sorted(self.properties.items()))
        return f"(:{self.label} {{{inner}}})"


@dataclass(frozen=True)
class Edge:
    id: int
    src: int
    dst: int
    type: str
    properties: dict[str, str]

    def render(self) -> str:
        if not self.properties:
            return f"[:{self.type}]"
        inner = ", ".join(f"{k}: {v!r}" for k, v in sorted(self.properties.items()))
        return f"[:{self.type} {{{inner}}}]"


class Direction(Enum):
    OUT = "out"
    IN = "in"
    ANY = "any"


@dataclass(frozen=True)
class PlanNode:
    label: str
    key: str
    properties: dict[str, str]


@dataclass(frozen=True)
class PlanEdge:
    type: str
    from_key: str
    to_key: str
    properties: dict[str, str]


@dataclass
class GraphBuildPlan:
    """Nodes and edges, addressed by (label, natural key), ready to insert."""

    nodes: list[PlanNode] = field(default_factory=list)
    edges: list[PlanEdge] = field(default_factory=list)

    def node_counts(self) -> dict[str, int]:
        counts = Counter(n.label for n in self.nodes)
        return {label: counts.get(label, 0) for label in NODE_LABELS}

    def edge_counts(self) -> dict[str, int]:
        counts = Counter(e.type for e in self.edges)
        return {etype: counts.get(etype, 0) for etype in EDGE_SIGNATURES}

    def view(self) -> tuple[frozenset, tuple]:
        """Order-independent content view, for isomorphism comparison."""
        nodes = frozenset(
            (n.label, n.key, tuple(sorted(n.properties.items()))) for n in self.nodes
        )
        edges = tuple(
            sorted(
                (e.type, e.from_key, e.to_key, tuple(sorted(e.properties.items())))
                for e in self.edges
            )
        )
        return nodes, edges


class PropertyGraph:
    """In-memory graph with hash indexes on natural key and lowercase name."""

    def __init__(self) -> None:
        self._nodes: dict[int, Node] = {}
        self._edges: list[Edge] = []
        self._next_id = 0
        self._by_key: dict[tuple[str, str], int] = {}
        self._by_name: dict[tuple[str, str], list[int]] = {}
        self._out: dict[int, dict[str, list[int]]] = {}
        self._in: dict[int, dict[str, list[int]]] = {}

    # -- construction ------------------------------------------------------

    def add_node(self, label: str, properties: dict[str, str], node_id: int | None = None) -> Node:
        """Insert a node, or merge onto the existing node with the same natural key.

        A merge keeps existing property values and adds missing keys; it
        never creates a second node for the same (label, key).
        """
        if label not in NODE_LABELS:
            raise SchemaViolation(f"unknown node label {label!r}")
        key_prop = NATURAL_KEY_PROP[label]
        key = properties.get(key_prop)
        if key is None:
            raise SchemaViolation(f"{label} node missing natural key property {key_prop!r}")
        existing_id = self._by_key.get((label, key))
        if existing_id is not None:
            existing = self._nodes[existing_id]
            merged = dict(properties)
            merged.update(existing.properties)
            node = Node(existing_id, label, merged)
            self._nodes[existing_id] = node
            name = merged.get(NATURAL_NAME_PROP[label])
            if name is not None:
                ids = self._by_name.setdefault((label, name.lower()), [])
                if existing_id not in ids:
                    ids.append(existing_id)
            return node
        if node_id is None:
            node_id = self._next_id
        if node_id in self._nodes:
            raise SchemaViolation(f"node id {node_id} already in use")
        self._next_id = max(self._next_id, node_id) + 1
        node = Node(node_id, label, dict(properties))
        self._nodes[node_id] = node
        self._by_key[(label, key)] = node_id
        name = properties.get(NATURAL_NAME_PROP[label])
        if name is not None:
            self._by_name.setdefault((label, name.lower()), []).append(node_id)
        self._out[node_id] = {}
        self._in[node_id] = {}
        return node

    def add_edge(self, src: int, dst: int, etype: str, properties: dict[str, str]) -> Edge:
        if etype not in EDGE_SIGNATURES:
            raise SchemaViolation(f"unknown edge type {etype!r}")
        if src not in self._nodes or dst not in self._nodes:
            raise SchemaViolation(f"edge {etype} references a missing node ({src} -> {dst})")
        want_src, want_dst = EDGE_SIGNATURES[etype]
        got_src, got_dst = self._nodes[src].label, self._nodes[dst].label
        if (got_src, got_dst) != (want_src, want_dst):
            raise SchemaViolation(
                f"edge {etype} must run ({want_src})->({want_dst}), got ({got_src})->({got_dst})"
            )
        edge = Edge(len(self._edges), src, dst, etype, dict(properties))
        self._edges.append(edge)
        self._out[src].setdefault(etype, []).append(edge.id)
        self._in[dst].setdefault(etype, []).append(edge.id)
        return edge

    # -- read access -------------------------------------------------------

    def nodes(self) -> list[Node]:
        return [self._nodes[i] for i in sorted(self._nodes)]

    def edges(self) -> list[Edge]:
        return list(self._edges)

    def node(self, node_id: int) -> Node:
        try:
            return self._nodes[node_id]
        except KeyError:
            raise UnknownNode(node_id) from None

    def edge(self, edge_id: int) -> Edge:
        return self._edges[edge_id]

    def nodes_with_label(self, label: str) -> list[Node]:
        return [n for n in self.nodes() if n.label == label]

    def by_key(self, label: str, key: str) -> Node | None:
        node_id = self._by_key.get((label, key))
        return self._nodes[node_id] if node_id is not None else None

    def lookup_by_name(self, label: str, name: str, case_insensitive: bool = True) -> list[Node]:
        """All nodes whose natural-name property equals (or case-folds to) name."""
        if label not in NODE_LABELS:
            raise SchemaViolation(f"unknown node label {label!r}")
        ids = self._by_name.get((label, name.lower()), [])
        nodes = [self._nodes[i] for i in ids]
        if case_insensitive:
            return nodes
        prop = NATURAL_NAME_PROP[label]
        return [n for n in nodes if n.properties.get(prop) == name]

    def neighbors(
        self, node_id: int, etype: str, direction: Direction = Direction.OUT
    ) -> list[tuple[Edge, Node]]:
        """Incident (edge, other endpoint) pairs of one type and direction."""
        if node_id not in self._nodes:
            raise UnknownNode(node_id)
        pairs: list[tuple[Edge, Node]] = []
        if direction in (Direction.OUT, Direction.ANY):
            for eid in self._out[node_id].get(etype, []):
                edge = self._edges[eid]
                pairs.append((edge, self._nodes[edge.dst]))
        if direction in (Direction.IN, Direction.ANY):
            for eid in self._in[node_id].get(etype, []):
                edge = self._edges[eid]
                pairs.append((edge, self._nodes[edge.src]))
        return pairs

    def out_edges(self, node_id: int, etype: str) -> list[Edge]:
        return [self._edges[e] for e in self._out.get(node_id, {}).get(etype, [])]

    def in_edges(self, node_id: int, etype: str) -> list[Edge]:
        return [self._edges[e] for e in self._in.get(node_id, {}).get(etype, [])]

    def edges_with_type(self, etype: str) -> list[Edge]:
        return [e for e in self._edges if e.type == etype]

    def stats(self) -> dict[str, dict[str, int]]:
        """Exact node counts per label and edge counts per type."""
        node_counts = Counter(n.label for n in self._nodes.values())
        edge_counts = Counter(e.type for e in self._edges)
        return {
            "nodes": {label: node_counts.get(label, 0) for label in NODE_LABELS},
            "edges": {etype: edge_counts.get(etype, 0) for etype in EDGE_SIGNATURES},
        }

    def check_invariants(self) -> None:
        """Assert no dangling edges and natural-key uniqueness; raises on breakage."""
        seen_keys: set[tuple[str, str]] = set()
        for node in self._nodes.values():
            key = (node.label, node.properties[NATURAL_KEY_PROP[node.label]])
            if key in seen_keys:
                raise SchemaViolation(f"duplicate natural key {key}")
            seen_keys.add(key)
        for edge in self._edges:
            if edge.src not in self._nodes or edge.dst not in self._nodes:
                raise SchemaViolation(f"dangling edge {edge.id}")
            want = EDGE_SIGNATURES[edge.type]
            got = (self._nodes[edge.src].label, self._nodes[edge.dst].label)
            if got != want:
                raise SchemaViolation(f"edge {edge.id} signature {got} != {want}")


def apply_plan(plan: GraphBuildPlan) -> PropertyGraph:
    """Materialize a build plan into a fresh graph, enforcing all invariants."""
    graph = PropertyGraph()
    for pnode in plan.nodes:
        props = dict(pnode.properties)
        props.setdefault(NATURAL_KEY_PROP[pnode.label], pnode.key)
        graph.add_node(pnode.label, props)
    for pedge in plan.edges:
        if pedge.type not in EDGE_SIGNATURES:
            raise SchemaViolation(f"plan edge has unknown type {pedge.type!r}")
        src_label, dst_label = EDGE_SIGNATURES[pedge.type]
        src = graph.by_key(src_label, pedge.from_key)
        dst = graph.by_key(dst_label, pedge.to_key)
        if src is None or dst is None:
            raise SchemaViolation(
                f"plan edge {pedge.type} references a missing node "
                f"({pedge.from_key!r} -> {pedge.to_key!r})"
            )
        graph.add_edge(src.id, dst.id, pedge.type, pedge.properties)
    graph.check_invariants()
    return graph


def natural_view(graph: PropertyGraph) -> tuple[dict, tuple]:
    """Content of a graph keyed by natural keys instead of internal ids.

    Two graphs are considered isomorphic exactly when their natural views
    are equal: same (label, key) -> properties map and same edge multiset
    under (type, from key, to key, properties).
    """
    def node_key(node: Node) -> str:
        return node.properties[NATURAL_KEY_PROP[node.label]]

    nodes = {
        (n.label, node_key(n)): tuple(sorted(n.properties.items()))
        for n in graph.nodes()
    }
    edges = tuple(
        sorted(
            (
                e.type,
                node_key(graph.node(e.src)),
                node_key(graph.node(e.dst)),
                tuple(sorted(e.properties.items())),
            )
            for e in graph.edges()
        )
    )
    return nodes, edges
