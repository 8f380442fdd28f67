"""Parser coverage: the flagship two-hop query, subset boundaries, fixpoint."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from hazkg.cypher import (
    Comparison,
    CypherSyntaxError,
    NodePattern,
    PathPattern,
    PropertyRef,
    QueryAst,
    RelPattern,
    ReturnItem,
    UnsupportedFeature,
    parse,
    print_query,
)
from tests.gengraph import random_graph
from tests.genquery import random_query

TABLE_QUERY = (
    "MATCH (o:Organ {Organ: 'heart'})<-[:target_organ]-"
    "(sub:Substance {name: 'Acrylaldehyde'})-[:related_to_disease]->(d:Disease) "
    "where toLower(d.DiseaseName) contains 'heart' RETURN d.DiseaseName"
)


def test_two_hop_organ_substance_disease_query():
    ast = parse(TABLE_QUERY)
    assert ast == QueryAst(
        patterns=(
            PathPattern(
                nodes=(
                    NodePattern("o", "Organ", (("Organ", "heart"),)),
                    NodePattern("sub", "Substance", (("name", "Acrylaldehyde"),)),
                    NodePattern("d", "Disease"),
                ),
                rels=(
                    RelPattern("target_organ", "in"),
                    RelPattern("related_to_disease", "out"),
                ),
            ),
        ),
        items=(ReturnItem("d", "DiseaseName"),),
        where=Comparison(PropertyRef("d", "DiseaseName", lowered=True), "CONTAINS", "heart"),
    )


def test_unlabeled_node():
    ast = parse("MATCH (n) RETURN n")
    assert ast.patterns[0].nodes == (NodePattern("n"),)
    assert ast.items == (ReturnItem("n"),)


def test_multiple_match_clauses_and_commas():
    a = parse("MATCH (a:Substance), (b:Organ) MATCH (c:Disease) RETURN a")
    assert len(a.patterns) == 3


def test_distinct_and_limit():
    ast = parse("MATCH (n:Disease) RETURN DISTINCT n.DiseaseName LIMIT 5")
    assert ast.distinct and ast.limit == 5


def test_keywords_case_insensitive_identifiers_not():
    ast = parse("match (N:Organ) Where N.Organ = 'x' return N.Organ")
    assert ast.patterns[0].nodes[0].variable == "N"


def test_trailing_semicolon_ok():
    parse("MATCH (n) RETURN n;")


def test_string_escapes():
    ast = parse(r"MATCH (n {name: 'it\'s'}) RETURN n")
    assert ast.patterns[0].nodes[0].props == (("name", "it's"),)
    ast2 = parse('MATCH (n {name: "dual"}) RETURN n')
    assert ast2.patterns[0].nodes[0].props == (("name", "dual"),)


def test_boolean_precedence():
    ast = parse(
        "MATCH (n:Disease) WHERE n.DiseaseName = 'a' OR n.DiseaseName = 'b' "
        "AND NOT n.DiseaseId = 'c' RETURN n"
    )
    # OR binds loosest: top node is the OR
    from hazkg.cypher import AndExpr, NotExpr, OrExpr

    assert isinstance(ast.where, OrExpr)
    assert isinstance(ast.where.children[1], AndExpr)
    assert isinstance(ast.where.children[1].children[1], NotExpr)


@pytest.mark.parametrize(
    "text",
    [
        "CREATE (n)",
        "MATCH (n) DELETE n",
        "MERGE (n:Substance) RETURN n",
        "MATCH (n) SET n.name = 'x' RETURN n",
        "MATCH (n) RETURN n ORDER BY n.name",
        "MATCH (n) WITH n RETURN n",
        "OPTIONAL MATCH (n) RETURN n",
        "MATCH (n) RETURN count(n)",
        "MATCH (a)-[:t*1]->(b) RETURN a",
        "MATCH (a)-[:x|y]->(b) RETURN a",
        "MATCH (a)--(b) RETURN a",
        "MATCH (a)-[:t]-(b) RETURN a",
        "MATCH (a)-->(b) RETURN a",
        "MATCH (a:X:Y) RETURN a",
        "MATCH (n) WHERE n.v > 'a' RETURN n",
        "MATCH (n) WHERE n.v STARTS WITH 'a' RETURN n",
        "MATCH (n) WHERE n.v IS NULL RETURN n",
        "MATCH (n {age: 3}) RETURN n",
        "MATCH (n) RETURN *",
        "MATCH (n) RETURN n SKIP 2",
        "MATCH (n) RETURN n UNION MATCH (m) RETURN m",
    ],
)
def test_unsupported_features(text):
    with pytest.raises(UnsupportedFeature):
        parse(text)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "   ",
        "RETURN n",
        "MATCH (n RETURN n",
        "MATCH (n) RETURN",
        "MATCH (n) WHERE RETURN n",
        "MATCH (n) RETURN m",  # unbound
        "MATCH (n) WHERE m.x = 'a' RETURN n",  # unbound
        "MATCH (n) RETURN n, ",
        "MATCH (n)->(m) RETURN n",
        "MATCH (n) WHERE n.x = 'unclosed RETURN n",
        "MATCH (n) RETURN n extra",
        "MATCH (a)<-[:t]->(b) RETURN a",
        "MATCH (n) WHERE toLower(n) = 'x' RETURN n",
        "MATCH (n) WHERE n.x = 'a' RETURN n LIMIT 'x'",
    ],
)
def test_syntax_errors(text):
    with pytest.raises(CypherSyntaxError):
        parse(text)


def test_syntax_error_carries_position():
    with pytest.raises(CypherSyntaxError) as err:
        parse("MATCH (n)\n  RETURN @")
    assert err.value.line == 2
    assert err.value.column >= 9


def test_stray_closing_paren_rejected():
    # unbalanced variant of the flagship query: must fail, not be repaired
    with pytest.raises(CypherSyntaxError):
        parse(
            "MATCH (o:Organ {Organ: 'heart'})<-[:target_organ]-(sub:Substance "
            "{name: 'Acrylaldehyde'})-[:related_to_disease]->(d:Disease) "
            "where toLower(d.DiseaseName) contains 'heart') RETURN d.DiseaseName"
        )


def test_print_parse_fixpoint_on_flagship():
    ast = parse(TABLE_QUERY)
    assert parse(print_query(ast)) == ast


@settings(max_examples=150, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_random_queries_parse_to_intended_ast(seed):
    rng = random.Random(seed)
    graph = random_graph(rng, max_nodes=25)
    text, intended = random_query(rng, graph)
    ast = parse(text)
    assert ast == intended
    # pretty-print fixpoint
    assert parse(print_query(ast)) == ast
