"""Query execution over the property graph.

Matching is homomorphic: a pattern solution is any assignment of graph
nodes/edges to pattern positions that satisfies labels, types, directions,
and inline property equality; nothing forbids two positions sharing an
element. Rows are one per solution, then filtered by WHERE, projected,
sorted into a canonical order, deduplicated if DISTINCT, and truncated by
LIMIT. Semantics are pinned by the brute-force enumeration oracle in the
test suite.

String semantics, implemented twice on purpose (here and in the test
oracle, no shared code): CONTAINS compares lowercased value against lowercased literal;
``=`` is exact; ``=~`` is a whole-string regular-expression match,
case-insensitive. A missing property makes any comparison false.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field

from hazkg.cypher.ast import (
    AndExpr,
    Comparison,
    NodePattern,
    NotExpr,
    OrExpr,
    PathPattern,
    QueryAst,
)
from hazkg.cypher.errors import ExecutionLimit
from hazkg.graph.schema import NATURAL_NAME_PROP
from hazkg.graph.store import Edge, Node, PropertyGraph

DEFAULT_ROW_CAP = 10_000
DEFAULT_TIME_BUDGET = 2.0


def render_cell(cell) -> str:
    if cell is None:
        return "null"
    if isinstance(cell, str):
        return cell
    return cell.render()


def _cell_sort_key(cell):
    if cell is None:
        return (0, "")
    if isinstance(cell, str):
        return (1, cell)
    if isinstance(cell, Node):
        return (2, cell.render())
    return (3, cell.render())


def cell_identity(cell):
    """Value identity used for DISTINCT and for oracle comparison."""
    if cell is None:
        return ("null",)
    if isinstance(cell, str):
        return ("str", cell)
    if isinstance(cell, Node):
        return ("node", cell.id)
    return ("edge", cell.id)


@dataclass
class ResultTable:
    """Projected rows in deterministic order (sorted by rendered tuple value)."""

    columns: list[str]
    rows: list[tuple] = field(default_factory=list)

    def render_rows(self) -> list[list[str]]:
        return [[render_cell(c) for c in row] for row in self.rows]

    def identity_rows(self) -> list[tuple]:
        return [tuple(cell_identity(c) for c in row) for row in self.rows]

    def to_text(self) -> str:
        rendered = self.render_rows()
        if not rendered:
            return ""
        widths = [max(len(r[i]) for r in rendered) for i in range(len(self.columns))]
        return "\n".join(
            "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
            for row in rendered
        )


class _Budget:
    def __init__(self, row_cap: int, time_budget: float):
        self.row_cap = row_cap
        self.deadline = time.monotonic() + time_budget
        self.rows = 0
        self.ticks = 0

    def count_row(self) -> None:
        self.rows += 1
        if self.rows > self.row_cap:
            raise ExecutionLimit(f"query produced more than {self.row_cap} rows")

    def tick(self) -> None:
        self.ticks += 1
        if self.ticks % 256 == 0 and time.monotonic() > self.deadline:
            raise ExecutionLimit("query exceeded its time budget")


def _node_ok(node: Node, pattern: NodePattern) -> bool:
    if pattern.label is not None and node.label != pattern.label:
        return False
    for key, value in pattern.props:
        if node.properties.get(key) != value:
            return False
    return True


def _candidates(graph: PropertyGraph, pattern: NodePattern, binding: dict) -> list[Node]:
    if pattern.variable and pattern.variable in binding:
        bound = binding[pattern.variable]
        if not isinstance(bound, Node):
            return []
        return [bound] if _node_ok(bound, pattern) else []
    if pattern.label is not None:
        name_prop = NATURAL_NAME_PROP.get(pattern.label)
        inline = dict(pattern.props)
        if name_prop and name_prop in inline:
            hits = graph.lookup_by_name(pattern.label, inline[name_prop], case_insensitive=True)
            return [n for n in hits if _node_ok(n, pattern)]
        return [n for n in graph.nodes_with_label(pattern.label) if _node_ok(n, pattern)]
    return [n for n in graph.nodes() if _node_ok(n, pattern)]


def _estimate(graph: PropertyGraph, pattern: NodePattern, binding: dict) -> int:
    if pattern.variable and pattern.variable in binding:
        return 1
    if pattern.props:
        return 2
    if pattern.label is not None:
        return 10
    return 100


def _match_path(graph: PropertyGraph, path: PathPattern, path_idx: int, binding: dict, budget: _Budget):
    """Yield extended bindings for one linear pattern.

    Alongside named variables the binding records anonymous positions under
    unique internal keys, so each structural solution yields exactly one row.
    The walk starts at the most selective node, runs to the right end, then
    fills in everything left of the anchor.
    """
    anchor = min(range(len(path.nodes)), key=lambda i: _estimate(graph, path.nodes[i], binding))

    def bind_node(b: dict, idx: int, node: Node) -> dict | None:
        pattern = path.nodes[idx]
        if not _node_ok(node, pattern):
            return None
        if pattern.variable and pattern.variable in b:
            return b if b[pattern.variable] is node else None
        out = dict(b)
        out[pattern.variable or ("\x00node", path_idx, idx)] = node
        return out

    def bind_rel(b: dict, idx: int, edge: Edge) -> dict | None:
        rel = path.rels[idx]
        if rel.variable and rel.variable in b:
            return b if b[rel.variable] is edge else None
        out = dict(b)
        out[rel.variable or ("\x00rel", path_idx, idx)] = edge
        return out

    def hop(b: dict, node: Node, rel_idx: int, going_right: bool):
        """Candidate (binding, next node) pairs across one relationship."""
        rel = path.rels[rel_idx]
        follow_out = (rel.direction == "out") == going_right
        edges = (
            graph.out_edges(node.id, rel.type) if follow_out else graph.in_edges(node.id, rel.type)
        )
        next_idx = rel_idx + 1 if going_right else rel_idx
        for edge in edges:
            with_rel = bind_rel(b, rel_idx, edge)
            if with_rel is None:
                continue
            other = graph.node(edge.dst if follow_out else edge.src)
            extended = bind_node(with_rel, next_idx, other)
            if extended is not None:
                yield extended, other

    def go_right(b: dict, idx: int, node: Node):
        budget.tick()
        if idx == len(path.nodes) - 1:
            anchor_key = path.nodes[anchor].variable or ("\x00node", path_idx, anchor)
            yield from go_left(b, anchor, b[anchor_key])
            return
        for extended, other in hop(b, node, idx, going_right=True):
            yield from go_right(extended, idx + 1, other)

    def go_left(b: dict, idx: int, node: Node):
        budget.tick()
        if idx == 0:
            yield b
            return
        for extended, other in hop(b, node, idx - 1, going_right=False):
            yield from go_left(extended, idx - 1, other)

    for node in _candidates(graph, path.nodes[anchor], binding):
        start = bind_node(binding, anchor, node)
        if start is not None:
            yield from go_right(start, anchor, node)


def _eval_where(expr, binding: dict) -> bool:
    if isinstance(expr, Comparison):
        entity = binding.get(expr.lhs.variable)
        if entity is None:
            return False
        value = entity.properties.get(expr.lhs.prop)
        if value is None:
            return False
        if expr.lhs.lowered:
            value = value.lower()
        if expr.op == "=":
            return value == expr.literal
        if expr.op == "CONTAINS":
            return expr.literal.lower() in value.lower()
        if expr.op == "=~":
            return re.fullmatch(expr.literal, value, re.IGNORECASE) is not None
        raise ValueError(f"unknown operator {expr.op!r}")
    if isinstance(expr, NotExpr):
        return not _eval_where(expr.child, binding)
    if isinstance(expr, AndExpr):
        return all(_eval_where(c, binding) for c in expr.children)
    if isinstance(expr, OrExpr):
        return any(_eval_where(c, binding) for c in expr.children)
    raise TypeError(f"not a WHERE expression: {expr!r}")


def execute(
    ast: QueryAst,
    graph: PropertyGraph,
    row_cap: int = DEFAULT_ROW_CAP,
    time_budget: float = DEFAULT_TIME_BUDGET,
) -> ResultTable:
    """Run a validated query; returns rows in canonical deterministic order.

    Raises ExecutionLimit when the row cap or time budget is exceeded.
    """
    budget = _Budget(row_cap, time_budget)
    columns = [i.variable if i.prop is None else f"{i.variable}.{i.prop}" for i in ast.items]

    def solutions(binding: dict, idx: int):
        if idx == len(ast.patterns):
            yield binding
            return
        for extended in _match_path(graph, ast.patterns[idx], idx, binding, budget):
            yield from solutions(extended, idx + 1)

    raw_rows: list[tuple] = []
    for binding in solutions({}, 0):
        if ast.where is not None and not _eval_where(ast.where, binding):
            continue
        row = []
        for item in ast.items:
            entity = binding[item.variable]
            if item.prop is None:
                row.append(entity)
            else:
                row.append(entity.properties.get(item.prop))
        raw_rows.append(tuple(row))
        budget.count_row()

    raw_rows.sort(key=lambda row: tuple(_cell_sort_key(c) for c in row))
    if ast.distinct:
        seen = set()
        deduped = []
        for row in raw_rows:
            key = tuple(cell_identity(c) for c in row)
            if key not in seen:
                seen.add(key)
                deduped.append(row)
        raw_rows = deduped
    if ast.limit is not None:
        raw_rows = raw_rows[: ast.limit]
    return ResultTable(columns=columns, rows=raw_rows)
