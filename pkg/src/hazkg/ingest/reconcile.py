"""Cross-source reconciliation into one graph build plan.

Factsheet records are the substance universe; disease links and organ
pages attach to it through CAS intersection only. A link whose CAS
matches no factsheet substance is dropped and logged, mirroring how the
source populations genuinely differ. Nothing here is fatal: every drop
lands in the report.
"""

from __future__ import annotations

from hazkg.graph.store import GraphBuildPlan, PlanEdge, PlanNode
from hazkg.ingest.ctd import ChemicalDiseaseLink
from hazkg.ingest.niosh import OrganTargetRecord
from hazkg.ingest.report import ConflictEntry, IngestReport, SkipEntry
from hazkg.model import SubstanceRecord, canonical_key


def reconcile_and_build(
    reach: list[SubstanceRecord],
    ctd: list[ChemicalDiseaseLink],
    niosh: list[OrganTargetRecord],
    prior_skips: list[SkipEntry] | None = None,
) -> tuple[GraphBuildPlan, IngestReport]:
    """Merge the three parsed collections into a plan plus its report.

    Substance nodes come from factsheet records only; disease and organ
    edges attach only where a CAS matches one of them. Duplicate keys
    merge (first record wins) and are logged as conflicts.
    """
    plan = GraphBuildPlan()
    report = IngestReport(skipped=list(prior_skips or []))

    substance_keys: set[str] = set()
    cas_to_substance: dict[str, str] = {}
    hazard_nodes: set[str] = set()
    category_nodes: set[str] = set()
    disease_names: dict[str, str] = {}
    organ_nodes: set[str] = set()
    seen_edges: set[tuple[str, str, str]] = set()

    def add_edge(etype: str, from_key: str, to_key: str, props: dict[str, str],
                 source: str, line: int | None) -> None:
        dedup = (etype, from_key, to_key)
        if dedup in seen_edges:
            report.skipped.append(
                SkipEntry(source, line, "duplicate_link", f"{etype} {from_key} -> {to_key}")
            )
            return
        seen_edges.add(dedup)
        plan.edges.append(PlanEdge(etype, from_key, to_key, props))

    for record in reach:
        key = canonical_key(record).as_string()
        if key in substance_keys:
            report.conflicts.append(
                ConflictEntry("duplicate_substance", key, f"record {record.name!r} already ingested")
            )
            continue
        substance_keys.add(key)
        props = {"key": key, "name": record.name, "source": record.source.value}
        if record.ec is not None:
            props["ec"] = record.ec.value
        if record.cas is not None:
            props["cas"] = record.cas.value
            if record.cas.value in cas_to_substance:
                report.conflicts.append(
                    ConflictEntry(
                        "duplicate_cas",
                        record.cas.value,
                        f"{key} shares a CAS with {cas_to_substance[record.cas.value]}",
                    )
                )
            else:
                cas_to_substance[record.cas.value] = key
        plan.nodes.append(PlanNode("Substance", key, props))

        for class_name, phrase in record.hazard_classes:
            if class_name not in hazard_nodes:
                hazard_nodes.add(class_name)
                plan.nodes.append(PlanNode("HazardClass", class_name, {"name": class_name}))
            add_edge("has_hazard_class", key, class_name, {"hazard_phrase": phrase}, "reach", None)
        for category in record.product_categories:
            if category not in category_nodes:
                category_nodes.add(category)
                plan.nodes.append(PlanNode("ProductCategory", category, {"name": category}))
            add_edge("in_product_category", key, category, {}, "reach", None)

    for line_no, link in enumerate(ctd, start=1):
        if link.cas is None:
            report.skipped.append(
                SkipEntry("ctd", line_no, "no_cas", f"link {link.chemical_id!r} has no CAS to join on")
            )
            continue
        substance = cas_to_substance.get(link.cas.value)
        if substance is None:
            report.skipped.append(
                SkipEntry("ctd", line_no, "not_in_reach", f"CAS {link.cas.value} matches no substance")
            )
            continue
        disease_key = link.disease.as_string()
        if disease_key not in disease_names:
            disease_names[disease_key] = link.disease_name
            plan.nodes.append(
                PlanNode("Disease", disease_key, {"DiseaseId": disease_key, "DiseaseName": link.disease_name})
            )
        elif disease_names[disease_key] != link.disease_name:
            report.conflicts.append(
                ConflictEntry(
                    "disease_name_conflict",
                    disease_key,
                    f"{disease_names[disease_key]!r} vs {link.disease_name!r}",
                )
            )
        props = {"ChemicalID": link.chemical_id} if link.chemical_id else {}
        add_edge("related_to_disease", substance, disease_key, props, "ctd", line_no)

    for line_no, record in enumerate(niosh, start=1):
        substance = cas_to_substance.get(record.cas.value)
        if substance is None:
            report.skipped.append(
                SkipEntry("niosh", line_no, "not_in_reach", f"CAS {record.cas.value} matches no substance")
            )
            continue
        for organ in record.organs:
            if organ not in organ_nodes:
                organ_nodes.add(organ)
                plan.nodes.append(PlanNode("Organ", organ, {"Organ": organ}))
            add_edge("target_organ", substance, organ, {}, "niosh", line_no)

    report.node_counts = plan.node_counts()
    report.edge_counts = plan.edge_counts()
    return plan, report
