"""Schema validation of parsed queries.

Diagnostics are values, not exceptions: an empty list means the query may
execute. The chat pipeline turns any diagnostic into a refusal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from hazkg.cypher.ast import AndExpr, Comparison, NotExpr, OrExpr, QueryAst
from hazkg.graph.schema import GraphSchema


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


def _comparisons(expr):
    if isinstance(expr, Comparison):
        yield expr
    elif isinstance(expr, NotExpr):
        yield from _comparisons(expr.child)
    elif isinstance(expr, (AndExpr, OrExpr)):
        for child in expr.children:
            yield from _comparisons(child)


def validate(ast: QueryAst, schema: GraphSchema) -> list[Diagnostic]:
    """Check labels, edge types, property keys, and edge directions against schema."""
    diags: list[Diagnostic] = []
    all_props = schema.known_property_keys()

    # variable -> set of labels it is constrained to (for property-key checks)
    var_labels: dict[str, set[str]] = {}
    rel_vars: set[str] = set()

    for path in ast.patterns:
        for node in path.nodes:
            if node.label is not None and node.label not in schema.node_props:
                diags.append(Diagnostic("UnknownLabel", f"no node label {node.label!r} in schema"))
            if node.variable and node.label:
                var_labels.setdefault(node.variable, set()).add(node.label)
        for i, rel in enumerate(path.rels):
            if rel.variable:
                rel_vars.add(rel.variable)
            if rel.type not in schema.edge_types:
                diags.append(
                    Diagnostic("UnknownEdgeType", f"no relationship type {rel.type!r} in schema")
                )
                continue
            want_src, want_dst = schema.edge_types[rel.type]
            left, right = path.nodes[i], path.nodes[i + 1]
            src, dst = (left, right) if rel.direction == "out" else (right, left)
            if src.label in schema.node_props and src.label is not None and src.label != want_src:
                diags.append(
                    Diagnostic(
                        "DirectionMismatch",
                        f"{rel.type} runs ({want_src})->({want_dst}); "
                        f"pattern has {src.label} on the source side",
                    )
                )
            if dst.label in schema.node_props and dst.label is not None and dst.label != want_dst:
                diags.append(
                    Diagnostic(
                        "DirectionMismatch",
                        f"{rel.type} runs ({want_src})->({want_dst}); "
                        f"pattern has {dst.label} on the target side",
                    )
                )

    def known_keys_for(variable: str) -> frozenset[str] | None:
        if variable in rel_vars:
            return None  # edge property keys are not tracked by the schema
        labels = var_labels.get(variable)
        if not labels:
            return all_props
        keys: set[str] = set()
        for label in labels:
            keys.update(schema.node_props.get(label, ()))
        return frozenset(keys)

    def check_prop(variable: str, prop: str) -> None:
        known = known_keys_for(variable)
        if known is not None and prop not in known:
            diags.append(
                Diagnostic("UnknownProperty", f"no property {prop!r} on {variable!r} in schema")
            )

    for path in ast.patterns:
        for node in path.nodes:
            for key, _ in node.props:
                if node.label is not None:
                    known = schema.node_props.get(node.label)
                    if known is not None and key not in known:
                        diags.append(
                            Diagnostic(
                                "UnknownProperty",
                                f"no property {key!r} on label {node.label} in schema",
                            )
                        )
                elif key not in all_props:
                    diags.append(
                        Diagnostic("UnknownProperty", f"no property {key!r} in schema")
                    )

    if ast.where is not None:
        for comp in _comparisons(ast.where):
            check_prop(comp.lhs.variable, comp.lhs.prop)
            if comp.op == "=~":
                try:
                    re.compile(comp.literal)
                except re.error as exc:
                    diags.append(
                        Diagnostic("InvalidRegex", f"bad regular expression {comp.literal!r}: {exc}")
                    )

    for item in ast.items:
        if item.prop is not None:
            check_prop(item.variable, item.prop)

    return diags
