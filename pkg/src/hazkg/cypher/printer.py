"""Canonical text rendering of a QueryAst.

print_query(parse(text)) reparses to an equal AST; tests hold the engine
to that fixpoint.
"""

from __future__ import annotations

from hazkg.cypher.ast import (
    AndExpr,
    Comparison,
    NodePattern,
    NotExpr,
    OrExpr,
    PathPattern,
    PropertyRef,
    QueryAst,
    RelPattern,
)


def quote(value: str) -> str:
    return "'" + value.replace("\\", "\\\\").replace("'", "\\'") + "'"


def _node(node: NodePattern) -> str:
    out = node.variable or ""
    if node.label:
        out += f":{node.label}"
    if node.props:
        inner = ", ".join(f"{k}: {quote(v)}" for k, v in node.props)
        out += (" " if out else "") + "{" + inner + "}"
    return f"({out})"


def _rel(rel: RelPattern) -> str:
    body = f"[{rel.variable or ''}:{rel.type}]"
    return f"<-{body}-" if rel.direction == "in" else f"-{body}->"


def _path(path: PathPattern) -> str:
    out = [_node(path.nodes[0])]
    for rel, node in zip(path.rels, path.nodes[1:]):
        out.append(_rel(rel))
        out.append(_node(node))
    return "".join(out)


def _ref(ref: PropertyRef) -> str:
    base = f"{ref.variable}.{ref.prop}"
    return f"toLower({base})" if ref.lowered else base


def _expr(expr, parent_prec: int = 0) -> str:
    # precedence: OR=1, AND=2, NOT=3, comparison=4
    if isinstance(expr, Comparison):
        return f"{_ref(expr.lhs)} {expr.op} {quote(expr.literal)}"
    if isinstance(expr, NotExpr):
        text = f"NOT {_expr(expr.child, 3)}"
        prec = 3
    elif isinstance(expr, AndExpr):
        text = " AND ".join(_expr(c, 2) for c in expr.children)
        prec = 2
    elif isinstance(expr, OrExpr):
        text = " OR ".join(_expr(c, 1) for c in expr.children)
        prec = 1
    else:
        raise TypeError(f"not a WHERE expression: {expr!r}")
    return f"({text})" if prec < parent_prec else text


def print_query(ast: QueryAst) -> str:
    parts = ["MATCH " + ", ".join(_path(p) for p in ast.patterns)]
    if ast.where is not None:
        parts.append("WHERE " + _expr(ast.where))
    items = ", ".join(i.variable if i.prop is None else f"{i.variable}.{i.prop}" for i in ast.items)
    ret = "RETURN " + ("DISTINCT " if ast.distinct else "") + items
    if ast.limit is not None:
        ret += f" LIMIT {ast.limit}"
    parts.append(ret)
    return " ".join(parts)
