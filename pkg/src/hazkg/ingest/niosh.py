"""Target-organ extraction from recorded pocket-guide pages.

Pages identify the substance by CAS number and list impacted organs as a
comma-separated field, sometimes with a parenthetical precision behind a
name ("Heart (cardiovascular system)"). normalize_organ strips those,
lowercases, and collapses whitespace so "Eyes" and "eyes " collapse to
one organ node later.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from hazkg.ingest.errors import EmptyAfterNormalization, MissingCas, TemplateMismatch
from hazkg.ingest.htmltree import parse_html
from hazkg.model import CasNumber, IdentifierError, validate_cas

_PARENTHETICAL = re.compile(r"\([^()]*\)")


def _strip_parentheticals(text: str) -> str:
    while True:
        stripped = _PARENTHETICAL.sub(" ", text)
        if stripped == text:
            return text
        text = stripped


@dataclass(frozen=True)
class OrganTargetRecord:
    cas: CasNumber
    organs: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.organs)) != len(self.organs):
            raise ValueError("organ list has duplicates")
        if any("(" in o or ")" in o for o in self.organs):
            raise ValueError("organ names must be parenthetical-free")


def normalize_organ(label: str) -> str:
    """Lowercase, drop parenthetical segments, collapse whitespace.

    Raises EmptyAfterNormalization when nothing is left, e.g. for "( )".
    """
    normalized = " ".join(_strip_parentheticals(label).lower().split())
    if not normalized:
        raise EmptyAfterNormalization(f"organ label {label!r} normalized to nothing")
    return normalized


def parse_niosh_page(document: str) -> OrganTargetRecord:
    """Extract the CAS number and normalized organ list from one page.

    Raises MissingCas when the CAS field is absent or invalid, and
    TemplateMismatch when the page lacks the expected field table.
    """
    root = parse_html(document)
    fields: dict[str, str] = {}
    for row in root.find_all("tr"):
        header = row.find("th")
        cell = row.find("td")
        if header is not None and cell is not None:
            fields[header.clean_text()] = cell.clean_text()
    if not fields:
        raise TemplateMismatch("no field table found")
    cas_text = fields.get("CAS No.", "").strip()
    if not cas_text:
        raise MissingCas("page has no CAS No. field")
    try:
        cas = validate_cas(cas_text)
    except IdentifierError as exc:
        raise MissingCas(f"invalid CAS {cas_text!r}: {exc}") from exc

    organs: list[str] = []
    # parentheticals go first so a comma inside one cannot split an organ name
    cleaned = _strip_parentheticals(fields.get("Target Organs", ""))
    if "(" in cleaned or ")" in cleaned:
        raise TemplateMismatch("unbalanced parenthesis in Target Organs field")
    for token in cleaned.split(","):
        if not token.strip():
            continue
        organ = normalize_organ(token)
        if organ not in organs:
            organs.append(organ)
    return OrganTargetRecord(cas=cas, organs=tuple(organs))
