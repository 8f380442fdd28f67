"""The static graph schema and its runtime rendering.

The store accepts exactly five node labels and four directed edge types.
Each label has a natural-key property (one node per key) and a
natural-name property (what users search by). The GraphSchema snapshot
handed to the query validator and the prompt builder is this static table
plus whatever property keys were actually observed in the data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

NODE_LABELS = ("Substance", "Disease", "Organ", "HazardClass", "ProductCategory")

# property that enforces one-node-per-key semantics
NATURAL_KEY_PROP = {
    "Substance": "key",
    "Disease": "DiseaseId",
    "Organ": "Organ",
    "HazardClass": "name",
    "ProductCategory": "name",
}

# property used for (case-insensitive) name lookup
NATURAL_NAME_PROP = {
    "Substance": "name",
    "Disease": "DiseaseName",
    "Organ": "Organ",
    "HazardClass": "name",
    "ProductCategory": "name",
}

# edge type -> (source label, target label)
EDGE_SIGNATURES = {
    "related_to_disease": ("Substance", "Disease"),
    "target_organ": ("Substance", "Organ"),
    "has_hazard_class": ("Substance", "HazardClass"),
    "in_product_category": ("Substance", "ProductCategory"),
}

# property keys every node of a label is expected to carry
BASE_NODE_PROPS = {
    "Substance": ("key", "name", "source"),
    "Disease": ("DiseaseId", "DiseaseName"),
    "Organ": ("Organ",),
    "HazardClass": ("name",),
    "ProductCategory": ("name",),
}


@dataclass(frozen=True)
class GraphSchema:
    """Schema as exposed to query validation and prompt construction.

    node_props maps each label to its sorted known property keys; edge
    types are always exactly the static signature table (an edge type
    absent from that table is never listed).
    """

    node_props: dict[str, tuple[str, ...]]
    edge_types: dict[str, tuple[str, str]] = field(
        default_factory=lambda: dict(EDGE_SIGNATURES)
    )

    def known_property_keys(self) -> frozenset[str]:
        keys: set[str] = set()
        for props in self.node_props.values():
            keys.update(props)
        return frozenset(keys)

    def render_text(self) -> str:
        """Stable plain-text rendering used inside LLM prompts."""
        lines = ["Node labels and properties:"]
        for label in NODE_LABELS:
            props = ", ".join(self.node_props.get(label, ()))
            lines.append(f"  {label}: {props}")
        lines.append("Relationship types:")
        for etype, (src, dst) in self.edge_types.items():
            lines.append(f"  ({src})-[:{etype}]->({dst})")
        return "\n".join(lines)


def schema_of(graph) -> GraphSchema:
    """Derive the schema of a loaded graph: static table plus observed keys."""
    observed: dict[str, set[str]] = {label: set(BASE_NODE_PROPS[label]) for label in NODE_LABELS}
    for node in graph.nodes():
        observed[node.label].update(node.properties.keys())
    node_props = {label: tuple(sorted(keys)) for label, keys in observed.items()}
    return GraphSchema(node_props=node_props)
