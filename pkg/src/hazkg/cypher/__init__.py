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
    ReturnItem,
)
from hazkg.cypher.errors import CypherSyntaxError, ExecutionLimit, UnsupportedFeature
from hazkg.cypher.executor import ResultTable, execute, render_cell
from hazkg.cypher.parser import parse
from hazkg.cypher.printer import print_query
from hazkg.cypher.validator import Diagnostic, validate

__all__ = [
    "AndExpr",
    "Comparison",
    "CypherSyntaxError",
    "Diagnostic",
    "ExecutionLimit",
    "NodePattern",
    "NotExpr",
    "OrExpr",
    "PathPattern",
    "PropertyRef",
    "QueryAst",
    "RelPattern",
    "ResultTable",
    "ReturnItem",
    "UnsupportedFeature",
    "execute",
    "parse",
    "print_query",
    "render_cell",
    "validate",
]
