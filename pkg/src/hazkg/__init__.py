"""hazkg: a hazardous-chemical knowledge base you can ask questions.

The package ingests recorded registry files (HTML factsheets, CSV/XML
disease links, HTML organ pages) into an embedded property graph, answers
a read-only Cypher subset over it, and wires both into a chat pipeline
that turns natural-language questions into validated graph queries.
"""

__version__ = "0.1.0"

from hazkg.model import (
    CasNumber,
    DiseaseId,
    EcNumber,
    SubstanceKey,
    SubstanceRecord,
    canonical_key,
    validate_cas,
    validate_ec,
)

__all__ = [
    "CasNumber",
    "DiseaseId",
    "EcNumber",
    "SubstanceKey",
    "SubstanceRecord",
    "canonical_key",
    "validate_cas",
    "validate_ec",
    "__version__",
]
