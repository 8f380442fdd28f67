"""Recursive-descent parser for the read-only Cypher subset.

Accepted shape (full grammar in docs/cypher_grammar.ebnf):

    MATCH <linear patterns> [WHERE <boolean tree>] RETURN [DISTINCT] items [LIMIT n]

Anything that is recognizable Cypher outside this subset (CREATE, ORDER BY,
variable-length paths, untyped or undirected relationships, functions other
than toLower, ...) raises UnsupportedFeature so callers can refuse rather
than guess. Everything else malformed raises CypherSyntaxError with a
position.
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
    ReturnItem,
)
from hazkg.cypher.errors import CypherSyntaxError, UnsupportedFeature
from hazkg.cypher.lexer import RESERVED_UNSUPPORTED, Token, tokenize


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    # -- token plumbing ------------------------------------------------------

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def at_keyword(self, word: str) -> bool:
        return self.peek().keyword() == word

    def eat_keyword(self, word: str) -> Token:
        tok = self.peek()
        if tok.keyword() != word:
            self.fail(f"expected {word.upper()}", tok)
        return self.next()

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            self.fail(f"expected {what}", tok)
        return self.next()

    def fail(self, message: str, tok: Token | None = None) -> None:
        tok = tok or self.peek()
        shown = tok.text or "end of input"
        raise CypherSyntaxError(f"{message}, found {shown!r}", tok.line, tok.column)

    def unsupported(self, feature: str, tok: Token | None = None) -> None:
        tok = tok or self.peek()
        raise UnsupportedFeature(feature, tok.line, tok.column)

    def reject_reserved(self) -> None:
        kw = self.peek().keyword()
        if kw in RESERVED_UNSUPPORTED:
            self.unsupported(f"{kw.upper()} clause")

    def ident(self, what: str) -> str:
        tok = self.peek()
        if tok.kind != "IDENT" or tok.keyword() is not None:
            self.fail(f"expected {what}", tok)
        return self.next().text

    # -- grammar ---------------------------------------------------------------

    def parse_query(self) -> QueryAst:
        self.reject_reserved()
        if not self.at_keyword("match"):
            self.fail("query must start with MATCH")
        patterns: list[PathPattern] = []
        while self.at_keyword("match"):
            self.next()
            patterns.append(self.parse_path())
            while self.peek().kind == "COMMA":
                self.next()
                patterns.append(self.parse_path())
        where = None
        self.reject_reserved()
        if self.at_keyword("where"):
            self.next()
            where = self.parse_or()
        self.reject_reserved()
        items, distinct, limit = self.parse_return()
        if self.peek().kind == "SEMI":
            self.next()
        self.reject_reserved()
        if self.peek().kind != "EOF":
            self.fail("unexpected input after query end")
        ast = QueryAst(
            patterns=tuple(patterns),
            items=tuple(items),
            where=where,
            distinct=distinct,
            limit=limit,
        )
        self.check_bindings(ast)
        return ast

    def parse_path(self) -> PathPattern:
        nodes = [self.parse_node()]
        rels: list[RelPattern] = []
        while self.peek().kind in ("DASH", "LT"):
            rels.append(self.parse_rel())
            nodes.append(self.parse_node())
        return PathPattern(nodes=tuple(nodes), rels=tuple(rels))

    def parse_node(self) -> NodePattern:
        self.expect("LPAREN", "'('")
        variable = None
        label = None
        props: tuple[tuple[str, str], ...] = ()
        if self.peek().kind == "IDENT":
            self.reject_reserved()
            variable = self.ident("variable name")
        if self.peek().kind == "COLON":
            self.next()
            label = self.ident("node label")
            if self.peek().kind == "COLON":
                self.unsupported("multiple node labels")
        if self.peek().kind == "LBRACE":
            props = self.parse_props()
        self.expect("RPAREN", "')'")
        return NodePattern(variable=variable, label=label, props=props)

    def parse_props(self) -> tuple[tuple[str, str], ...]:
        self.expect("LBRACE", "'{'")
        pairs: list[tuple[str, str]] = []
        while True:
            key = self.ident("property name")
            self.expect("COLON", "':'")
            tok = self.peek()
            if tok.kind == "INT":
                self.unsupported("numeric property literal")
            value = self.expect("STRING", "string literal")
            pairs.append((key, str(value.value)))
            if self.peek().kind == "COMMA":
                self.next()
                continue
            break
        self.expect("RBRACE", "'}'")
        return tuple(pairs)

    def parse_rel(self) -> RelPattern:
        incoming = False
        if self.peek().kind == "LT":
            self.next()
            incoming = True
        self.expect("DASH", "'-'")
        if self.peek().kind == "DASH":
            self.unsupported("untyped relationship")
        if self.peek().kind != "LBRACKET":
            self.fail("expected '[' in relationship pattern")
        self.next()
        variable = None
        if self.peek().kind == "IDENT":
            variable = self.ident("relationship variable")
        if self.peek().kind != "COLON":
            self.unsupported("untyped relationship")
        self.next()
        rtype = self.ident("relationship type")
        if self.peek().kind == "PIPE":
            self.unsupported("alternative relationship types")
        if self.peek().kind == "STAR":
            self.unsupported("variable-length relationship")
        if self.peek().kind == "LBRACE":
            self.unsupported("relationship property map")
        self.expect("RBRACKET", "']'")
        self.expect("DASH", "'-'")
        outgoing = False
        if self.peek().kind == "GT":
            self.next()
            outgoing = True
        if incoming and outgoing:
            self.fail("relationship cannot point both ways")
        if not incoming and not outgoing:
            self.unsupported("undirected relationship")
        return RelPattern(type=rtype, direction="in" if incoming else "out", variable=variable)

    # WHERE expressions: OR < AND < NOT < primary

    def parse_or(self):
        children = [self.parse_and()]
        while self.at_keyword("or"):
            self.next()
            children.append(self.parse_and())
        return children[0] if len(children) == 1 else OrExpr(tuple(children))

    def parse_and(self):
        children = [self.parse_not()]
        while self.at_keyword("and"):
            self.next()
            children.append(self.parse_not())
        return children[0] if len(children) == 1 else AndExpr(tuple(children))

    def parse_not(self):
        if self.at_keyword("not"):
            self.next()
            return NotExpr(self.parse_not())
        return self.parse_primary()

    def parse_primary(self):
        if self.peek().kind == "LPAREN":
            self.next()
            expr = self.parse_or()
            self.expect("RPAREN", "')'")
            return expr
        return self.parse_comparison()

    def parse_comparison(self) -> Comparison:
        ref = self.parse_operand()
        tok = self.peek()
        if tok.kind == "EQ":
            op = "="
        elif tok.kind == "REGEQ":
            op = "=~"
        elif tok.keyword() == "contains":
            op = "CONTAINS"
        elif tok.kind in ("LT", "GT", "CMP"):
            self.unsupported(f"ordering comparison {tok.text!r}")
        elif tok.keyword() in ("starts", "ends", "in", "is"):
            self.unsupported(f"{tok.keyword().upper()} predicate")
        else:
            self.fail("expected a comparison operator (=, =~ or CONTAINS)", tok)
        self.next()
        lit = self.peek()
        if lit.kind == "INT":
            self.unsupported("numeric comparison literal")
        value = self.expect("STRING", "string literal")
        return Comparison(lhs=ref, op=op, literal=str(value.value))

    def parse_operand(self) -> PropertyRef:
        tok = self.peek()
        if tok.kind != "IDENT":
            self.fail("expected a property reference")
        if tok.text.lower() == "tolower":
            self.next()
            self.expect("LPAREN", "'('")
            ref = self.parse_property_ref()
            self.expect("RPAREN", "')'")
            return PropertyRef(ref.variable, ref.prop, lowered=True)
        if tok.keyword() is not None:
            self.reject_reserved()
            self.fail("expected a property reference")
        name = self.ident("variable name")
        if self.peek().kind == "LPAREN":
            self.unsupported(f"function call {name}()")
        return self._finish_property_ref(name)

    def parse_property_ref(self) -> PropertyRef:
        name = self.ident("variable name")
        return self._finish_property_ref(name)

    def _finish_property_ref(self, variable: str) -> PropertyRef:
        self.expect("DOT", "'.' (property access)")
        prop = self.ident("property name")
        return PropertyRef(variable, prop)

    def parse_return(self) -> tuple[list[ReturnItem], bool, int | None]:
        self.eat_keyword("return")
        distinct = False
        if self.at_keyword("distinct"):
            self.next()
            distinct = True
        items = [self.parse_return_item()]
        while self.peek().kind == "COMMA":
            self.next()
            items.append(self.parse_return_item())
        limit = None
        self.reject_reserved()
        if self.at_keyword("limit"):
            self.next()
            tok = self.expect("INT", "row count")
            limit = int(tok.value)
        return items, distinct, limit

    def parse_return_item(self) -> ReturnItem:
        if self.peek().kind == "STAR":
            self.unsupported("RETURN *")
        self.reject_reserved()
        name = self.ident("variable name")
        if self.peek().kind == "LPAREN":
            self.unsupported(f"function call {name}() in RETURN")
        if self.peek().kind == "DOT":
            self.next()
            prop = self.ident("property name")
            return ReturnItem(variable=name, prop=prop)
        return ReturnItem(variable=name)

    def check_bindings(self, ast: QueryAst) -> None:
        """AST invariant: every variable in WHERE/RETURN is bound in MATCH."""
        bound = ast.bound_variables()

        def check_expr(expr) -> None:
            if isinstance(expr, Comparison):
                if expr.lhs.variable not in bound:
                    raise CypherSyntaxError(f"unbound variable {expr.lhs.variable!r} in WHERE")
            elif isinstance(expr, NotExpr):
                check_expr(expr.child)
            elif isinstance(expr, (AndExpr, OrExpr)):
                for child in expr.children:
                    check_expr(child)

        if ast.where is not None:
            check_expr(ast.where)
        for item in ast.items:
            if item.variable not in bound:
                raise CypherSyntaxError(f"unbound variable {item.variable!r} in RETURN")


def parse(text: str) -> QueryAst:
    """Parse query text into a QueryAst; see module docstring for errors."""
    if not text.strip():
        raise CypherSyntaxError("empty query")
    return _Parser(tokenize(text)).parse_query()
