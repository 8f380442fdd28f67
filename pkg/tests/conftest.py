import csv
from pathlib import Path

import pytest

from hazkg.graph import apply_plan, schema_of
from hazkg.ingest import load_corpus, reconcile_and_build
from hazkg.rag import ExemplarStore, ScriptedStubClient, TrigramHashEmbedder

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
CORPUS_DIR = FIXTURES / "corpus"

ACRYLALDEHYDE_QUESTION = (
    "What are the potential health impacts, particularly on the heart, of exposure to Acrylaldehyde?"
)

BALANCED_HEART_QUERY = (
    "MATCH (o:Organ {Organ: 'heart'})<-[:target_organ]-(sub:Substance "
    "{name: 'Acrylaldehyde'})-[:related_to_disease]->(d:Disease) "
    "where toLower(d.DiseaseName) contains 'heart' RETURN d.DiseaseName"
)


def expected_heart_disease_names() -> list[str]:
    """The disease names the flagship question must return, read straight
    from the link fixture (rows that join on the acrylaldehyde CAS)."""
    names = []
    with open(CORPUS_DIR / "ctd" / "links.csv", newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            if row["CAS"] == "107-02-8" and row["DiseaseName"] and row["DiseaseID"]:
                names.append(row["DiseaseName"])
    return names


@pytest.fixture(scope="session")
def corpus_build():
    reach, ctd, niosh, skipped = load_corpus(CORPUS_DIR)
    return reconcile_and_build(reach, ctd, niosh, prior_skips=skipped)


@pytest.fixture(scope="session")
def corpus_graph(corpus_build):
    plan, _ = corpus_build
    return apply_plan(plan)


@pytest.fixture(scope="session")
def corpus_schema(corpus_graph):
    return schema_of(corpus_graph)


@pytest.fixture(scope="session")
def embedder():
    return TrigramHashEmbedder()


@pytest.fixture()
def exemplar_store(embedder, corpus_schema):
    return ExemplarStore.load(FIXTURES / "exemplars.jsonl", embedder, corpus_schema)


@pytest.fixture()
def stub_llm():
    return ScriptedStubClient.from_file(FIXTURES / "stub_replies.jsonl")
