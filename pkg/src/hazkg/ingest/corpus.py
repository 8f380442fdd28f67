"""Load a recorded corpus directory.

Layout: <corpus>/reach/*.html, <corpus>/ctd/links.csv (or links.xml),
<corpus>/niosh/*.html, all UTF-8. Per-file extraction failures are
logged and skipped so one bad page never sinks the build.
"""

from __future__ import annotations

import os
from pathlib import Path

from hazkg.ingest.ctd import ChemicalDiseaseLink, parse_ctd_links
from hazkg.ingest.errors import IngestError
from hazkg.ingest.niosh import OrganTargetRecord, parse_niosh_page
from hazkg.ingest.reach import parse_reach_factsheet
from hazkg.ingest.report import SkipEntry
from hazkg.model import IdentifierError, SubstanceRecord


class CorpusLayoutError(FileNotFoundError):
    """Corpus directory is missing a required piece of the layout."""


def load_corpus(
    corpus_dir: str | os.PathLike,
) -> tuple[list[SubstanceRecord], list[ChemicalDiseaseLink], list[OrganTargetRecord], list[SkipEntry]]:
    root = Path(corpus_dir)
    if not root.is_dir():
        raise CorpusLayoutError(f"corpus directory {root} does not exist")
    skipped: list[SkipEntry] = []

    reach_records: list[SubstanceRecord] = []
    reach_dir = root / "reach"
    if not reach_dir.is_dir():
        raise CorpusLayoutError(f"{root} has no reach/ directory")
    for page in sorted(reach_dir.glob("*.html")):
        try:
            reach_records.append(parse_reach_factsheet(page.read_text(encoding="utf-8")))
        except (IngestError, IdentifierError) as exc:
            skipped.append(SkipEntry(f"reach/{page.name}", None, type(exc).__name__, str(exc)))

    links: list[ChemicalDiseaseLink] = []
    ctd_dir = root / "ctd"
    link_file = None
    for candidate in ("links.csv", "links.xml"):
        if (ctd_dir / candidate).is_file():
            link_file = ctd_dir / candidate
            break
    if link_file is None:
        raise CorpusLayoutError(f"{ctd_dir} has neither links.csv nor links.xml")
    links = parse_ctd_links(
        link_file.read_text(encoding="utf-8"), skipped=skipped, source=f"ctd/{link_file.name}"
    )

    organ_records: list[OrganTargetRecord] = []
    niosh_dir = root / "niosh"
    if not niosh_dir.is_dir():
        raise CorpusLayoutError(f"{root} has no niosh/ directory")
    for page in sorted(niosh_dir.glob("*.html")):
        try:
            organ_records.append(parse_niosh_page(page.read_text(encoding="utf-8")))
        except (IngestError, IdentifierError) as exc:
            skipped.append(SkipEntry(f"niosh/{page.name}", None, type(exc).__name__, str(exc)))

    return reach_records, links, organ_records, skipped
