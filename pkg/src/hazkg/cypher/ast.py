"""Parsed query representation.

All nodes are frozen dataclasses so ASTs compare by value; the
pretty-printer round-trip property relies on that.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class NodePattern:
    variable: str | None = None
    label: str | None = None
    props: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class RelPattern:
    """One hop. direction 'out' points from the preceding node to the following
    one; 'in' points back at the preceding node."""

    type: str
    direction: str
    variable: str | None = None


@dataclass(frozen=True)
class PathPattern:
    nodes: tuple[NodePattern, ...]
    rels: tuple[RelPattern, ...] = ()


@dataclass(frozen=True)
class PropertyRef:
    variable: str
    prop: str
    lowered: bool = False


@dataclass(frozen=True)
class Comparison:
    lhs: PropertyRef
    op: str  # "=", "CONTAINS", "=~"
    literal: str


@dataclass(frozen=True)
class NotExpr:
    child: object


@dataclass(frozen=True)
class AndExpr:
    children: tuple


@dataclass(frozen=True)
class OrExpr:
    children: tuple


@dataclass(frozen=True)
class ReturnItem:
    variable: str
    prop: str | None = None


@dataclass(frozen=True)
class QueryAst:
    patterns: tuple[PathPattern, ...]
    items: tuple[ReturnItem, ...]
    where: object | None = None
    distinct: bool = False
    limit: int | None = None

    def bound_variables(self) -> dict[str, str]:
        """Map of variable -> role ('node' or 'rel') bound by the MATCH clauses."""
        bound: dict[str, str] = {}
        for path in self.patterns:
            for node in path.nodes:
                if node.variable:
                    bound.setdefault(node.variable, "node")
            for rel in path.rels:
                if rel.variable:
                    bound.setdefault(rel.variable, "rel")
        return bound
