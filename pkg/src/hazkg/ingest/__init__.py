from hazkg.ingest.corpus import CorpusLayoutError, load_corpus
from hazkg.ingest.ctd import ChemicalDiseaseLink, parse_ctd_links
from hazkg.ingest.errors import (
    EmptyAfterNormalization,
    IngestError,
    MalformedRow,
    MissingCas,
    NotHazardous,
    TemplateMismatch,
)
from hazkg.ingest.niosh import OrganTargetRecord, normalize_organ, parse_niosh_page
from hazkg.ingest.reach import parse_reach_factsheet
from hazkg.ingest.reconcile import reconcile_and_build
from hazkg.ingest.report import ConflictEntry, IngestReport, SkipEntry

__all__ = [
    "ChemicalDiseaseLink",
    "ConflictEntry",
    "CorpusLayoutError",
    "EmptyAfterNormalization",
    "IngestError",
    "IngestReport",
    "MalformedRow",
    "MissingCas",
    "NotHazardous",
    "OrganTargetRecord",
    "SkipEntry",
    "TemplateMismatch",
    "load_corpus",
    "normalize_organ",
    "parse_ctd_links",
    "parse_niosh_page",
    "parse_reach_factsheet",
    "reconcile_and_build",
]
