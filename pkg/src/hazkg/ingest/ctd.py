"""Chemical-disease link extraction from CSV or XML exports.

Both formats carry the same four fields per row: ChemicalID, CAS,
DiseaseID, DiseaseName. The DiseaseID field may hold several codes
separated by '|' (e.g. "MESH:D006333|OMIM:617478"); MESH is preferred
when both vocabularies appear. Bad rows are skipped and reported through
the optional sink, never fatal.
"""

from __future__ import annotations

import csv
import io
import xml.etree.ElementTree as ET
from dataclasses import dataclass

from hazkg.ingest.errors import MalformedRow, TemplateMismatch
from hazkg.ingest.report import SkipEntry
from hazkg.model import CasNumber, DiseaseId, IdentifierError, validate_cas

REQUIRED_COLUMNS = ("ChemicalID", "CAS", "DiseaseID", "DiseaseName")


@dataclass(frozen=True)
class ChemicalDiseaseLink:
    chemical_id: str
    cas: CasNumber | None
    disease: DiseaseId
    disease_name: str

    def __post_init__(self) -> None:
        if not self.disease_name:
            raise ValueError("disease_name must be non-empty")
        if not self.chemical_id and self.cas is None:
            raise ValueError("need at least one of chemical_id/cas")


def _parse_disease_id(field: str) -> DiseaseId:
    mesh = omim = None
    for code in field.split("|"):
        code = code.strip()
        if code.upper().startswith("MESH:"):
            mesh = code[5:]
        elif code.upper().startswith("OMIM:"):
            omim = code[5:]
        elif code:
            raise MalformedRow(f"unrecognized disease code {code!r}")
    return DiseaseId.from_codes(mesh, omim)


def _link_from_fields(chemical_id: str, cas_text: str, disease_id: str, disease_name: str) -> ChemicalDiseaseLink:
    cas = None
    if cas_text.strip():
        try:
            cas = validate_cas(cas_text)
        except IdentifierError as exc:
            raise MalformedRow(f"bad CAS {cas_text!r}: {exc}") from exc
    if not disease_name.strip():
        raise MalformedRow("empty DiseaseName")
    if not disease_id.strip():
        raise MalformedRow("empty DiseaseID")
    try:
        disease = _parse_disease_id(disease_id)
    except ValueError as exc:
        raise MalformedRow(str(exc)) from exc
    link = ChemicalDiseaseLink(
        chemical_id=chemical_id.strip(),
        cas=cas,
        disease=disease,
        disease_name=disease_name.strip(),
    )
    return link


def parse_ctd_links(
    document: str,
    skipped: list[SkipEntry] | None = None,
    source: str = "ctd",
) -> list[ChemicalDiseaseLink]:
    """Parse CSV or XML link text into ChemicalDiseaseLink rows.

    The format is sniffed: text starting with '<' is XML, otherwise CSV
    with a header row. Malformed rows go to the skipped sink.
    """
    if document.lstrip().startswith("<"):
        return _parse_xml(document, skipped, source)
    return _parse_csv(document, skipped, source)


def _parse_csv(document: str, skipped: list[SkipEntry] | None, source: str) -> list[ChemicalDiseaseLink]:
    reader = csv.DictReader(io.StringIO(document))
    if reader.fieldnames is None:
        return []
    missing = [c for c in REQUIRED_COLUMNS if c not in reader.fieldnames]
    if missing:
        raise TemplateMismatch(f"CSV header missing columns: {', '.join(missing)}")
    links: list[ChemicalDiseaseLink] = []
    for row in reader:
        try:
            links.append(
                _link_from_fields(
                    row.get("ChemicalID") or "",
                    row.get("CAS") or "",
                    row.get("DiseaseID") or "",
                    row.get("DiseaseName") or "",
                )
            )
        except MalformedRow as exc:
            if skipped is not None:
                skipped.append(SkipEntry(source, reader.line_num, "malformed_row", str(exc)))
    return links


def _parse_xml(document: str, skipped: list[SkipEntry] | None, source: str) -> list[ChemicalDiseaseLink]:
    try:
        root = ET.fromstring(document)
    except ET.ParseError as exc:
        raise TemplateMismatch(f"bad XML: {exc}") from exc
    links: list[ChemicalDiseaseLink] = []
    for index, row in enumerate(root.iter("row"), start=1):
        fields = {child.tag: (child.text or "") for child in row}
        try:
            links.append(
                _link_from_fields(
                    fields.get("ChemicalID", ""),
                    fields.get("CAS", ""),
                    fields.get("DiseaseID", ""),
                    fields.get("DiseaseName", ""),
                )
            )
        except MalformedRow as exc:
            if skipped is not None:
                skipped.append(SkipEntry(source, index, "malformed_row", str(exc)))
    return links
