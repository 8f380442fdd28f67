"""Prompt assembly.

The template text is the product's one canonical prompt: persona and
step-by-step instruction, the rendered graph schema, the matching and
refusal rules, the selected few-shot exemplars, then the user question.
Tests pin the rendering byte-for-byte against a golden file.
"""

from __future__ import annotations

from dataclasses import dataclass

from hazkg.graph.schema import GraphSchema
from hazkg.rag.exemplars import Exemplar

PERSONA = (
    "You are an expert on creating Cypher queries. You also have a deep knowledge in "
    "Healthcare and Toxicology. Think step-by-step to answer the question. First, given "
    "an input question, create a syntactically correct Cypher query to run."
)

RULES = (
    "If the question matches one of the sample questions in the KG then just use the "
    "same query used to answer it.\n"
    "If the user asks to retrieve a property of an entity of the graph, given its name, "
    "then use a WHERE statement and a cypher regular expression matching without case "
    "sensitivity, and filter the results by the name of the entity.\n"
    "Ensure the generated query captures relevant information from the graph database "
    "without reducing the retrieved data due to variations or synonyms in user wording.\n"
    "Use the outcome of the query to answer the user's question. If the question has "
    "several answers, list each of them and create a summary to explain the context of "
    "the list of the answers. If you do not know the answer, just say I don't know."
)

EXAMPLES_HEADER = (
    "Below there are some examples of questions and their corresponding Cypher queries "
    "and results."
)


@dataclass(frozen=True)
class PromptContext:
    persona: str
    schema_text: str
    rules: str
    exemplars: tuple[Exemplar, ...]
    question: str

    def render(self) -> str:
        blocks = [
            self.persona,
            "Here is the graph schema:",
            self.schema_text,
            self.rules,
            EXAMPLES_HEADER,
        ]
        for exemplar in self.exemplars:
            blocks.append(
                f"Question: {exemplar.question}\n"
                f"Cypher: {exemplar.cypher}\n"
                f"Result: {exemplar.result_digest}"
            )
        blocks.append(f"User input: {self.question}")
        return "\n\n".join(blocks) + "\n"


def build_prompt(question: str, schema: GraphSchema, exemplars: list[Exemplar]) -> PromptContext:
    return PromptContext(
        persona=PERSONA,
        schema_text=schema.render_text(),
        rules=RULES,
        exemplars=tuple(exemplars),
        question=question,
    )
