"""Brute-force pattern-matching oracle.

Enumerates every node/edge assignment tuple for each pattern by full scans
and itertools.product, re-checks all constraints in place, and evaluates
the WHERE tree with its own string logic. Shares nothing with the engine's
executor beyond the AST shape and the graph's read API, so the two routes
can disagree when one of them is wrong.
"""

import itertools
import re

from hazkg.cypher.ast import AndExpr, Comparison, NotExpr, OrExpr


def _node_matches(node, pattern) -> bool:
    if pattern.label is not None and node.label != pattern.label:
        return False
    return all(node.properties.get(k) == v for k, v in pattern.props)


def _enumerate_path(graph, path):
    """All (nodes_tuple, edges_tuple) assignments satisfying the chain."""
    if not path.rels:
        for node in graph.nodes():
            if _node_matches(node, path.nodes[0]):
                yield (node,), ()
        return

    per_hop = [
        [e for e in graph.edges() if e.type == rel.type] for rel in path.rels
    ]
    for combo in itertools.product(*per_hop):
        chain = []
        ok = True
        for i, (rel, edge) in enumerate(zip(path.rels, combo)):
            if rel.direction == "out":
                left, right = edge.src, edge.dst
            else:
                left, right = edge.dst, edge.src
            if i == 0:
                chain.append(left)
            elif chain[-1] != left:
                ok = False
                break
            chain.append(right)
        if not ok:
            continue
        nodes = tuple(graph.node(nid) for nid in chain)
        if all(_node_matches(n, p) for n, p in zip(nodes, path.nodes)):
            yield nodes, combo


def _bindings(graph, ast):
    """All full assignments across patterns, consistent on shared variables."""
    paths = list(ast.patterns)

    def recurse(idx, env):
        if idx == len(paths):
            yield env
            return
        path = paths[idx]
        for nodes, edges in _enumerate_path(graph, path):
            new_env = dict(env)
            consistent = True
            for pattern, node in zip(path.nodes, nodes):
                if pattern.variable:
                    prior = new_env.get(pattern.variable)
                    if prior is not None and prior is not node:
                        consistent = False
                        break
                    new_env[pattern.variable] = node
            if consistent:
                for rel, edge in zip(path.rels, edges):
                    if rel.variable:
                        prior = new_env.get(rel.variable)
                        if prior is not None and prior is not edge:
                            consistent = False
                            break
                        new_env[rel.variable] = edge
            if consistent:
                yield from recurse(idx + 1, new_env)

    yield from recurse(0, {})


def _where_true(expr, env) -> bool:
    if isinstance(expr, Comparison):
        entity = env.get(expr.lhs.variable)
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
        raise AssertionError(expr.op)
    if isinstance(expr, NotExpr):
        return not _where_true(expr.child, env)
    if isinstance(expr, AndExpr):
        return all(_where_true(c, env) for c in expr.children)
    if isinstance(expr, OrExpr):
        return any(_where_true(c, env) for c in expr.children)
    raise AssertionError(type(expr))


def _project(ast, env):
    row = []
    for item in ast.items:
        entity = env[item.variable]
        if item.prop is None:
            kind = "node" if hasattr(entity, "label") else "edge"
            row.append((kind, entity.id))
        else:
            value = entity.properties.get(item.prop)
            row.append(("null",) if value is None else ("str", value))
    return tuple(row)


def oracle_rows(ast, graph):
    """Row multiset (list of identity tuples) the query must produce,
    before DISTINCT/LIMIT."""
    rows = []
    for env in _bindings(graph, ast):
        if ast.where is None or _where_true(ast.where, env):
            rows.append(_project(ast, env))
    return rows


def oracle_result(ast, graph):
    """Rows after DISTINCT, still unordered (LIMIT is not modeled)."""
    rows = oracle_rows(ast, graph)
    if ast.distinct:
        return sorted(set(rows))
    return sorted(rows)
