"""Extraction from recorded registration factsheet pages.

The supported template (see docs/ingest_formats.md) is one substance per
page: an h1 with class "substance-name", an identifier table, a hazard
classification section, and an optional product category list. Live pages
vary too much to scrape blindly, so anything off-template raises
TemplateMismatch instead of guessing.
"""

from __future__ import annotations

from hazkg.ingest.errors import NotHazardous, TemplateMismatch
from hazkg.ingest.htmltree import Element, parse_html
from hazkg.model import Source, SubstanceRecord, validate_cas, validate_ec


def _identifier_rows(root: Element) -> dict[str, str]:
    table = root.find("table", class_="identifiers")
    if table is None:
        raise TemplateMismatch("no identifier table")
    values: dict[str, str] = {}
    for row in table.find_all("tr"):
        header = row.find("th")
        cell = row.find("td")
        if header is not None and cell is not None:
            values[header.clean_text()] = cell.clean_text()
    return values


def parse_reach_factsheet(document: str) -> SubstanceRecord:
    """Extract one substance record from factsheet HTML.

    Raises TemplateMismatch when the page deviates from the template,
    NotHazardous when the hazard classification section is missing or
    empty, and identifier errors when the EC/CAS values fail validation.
    """
    root = parse_html(document)
    heading = root.find("h1", class_="substance-name")
    if heading is None or not heading.clean_text():
        raise TemplateMismatch("no substance name heading")
    name = heading.clean_text()

    identifiers = _identifier_rows(root)
    if "EC Number" not in identifiers:
        raise TemplateMismatch("identifier table has no EC Number row")
    ec = validate_ec(identifiers["EC Number"])
    cas = None
    if identifiers.get("CAS Number", "").strip() not in ("", "-"):
        cas = validate_cas(identifiers["CAS Number"])

    hazard_section = root.find("div", id="hazard-classification")
    if hazard_section is None:
        raise NotHazardous(f"{name}: no hazard classification section")
    hazard_classes: list[tuple[str, str]] = []
    for row in hazard_section.find_all("tr"):
        cells = row.find_all("td")
        if len(cells) >= 2:
            hazard_classes.append((cells[0].clean_text(), cells[1].clean_text()))
    if not hazard_classes:
        raise NotHazardous(f"{name}: hazard classification section is empty")

    categories: list[str] = []
    category_section = root.find("div", id="product-categories")
    if category_section is not None:
        for item in category_section.find_all("li"):
            text = item.clean_text()
            if text:
                categories.append(text)

    return SubstanceRecord(
        name=name,
        source=Source.REACH,
        ec=ec,
        cas=cas,
        hazard_classes=tuple(hazard_classes),
        product_categories=tuple(categories),
    )
