from hazkg.graph.schema import (
    BASE_NODE_PROPS,
    EDGE_SIGNATURES,
    NATURAL_KEY_PROP,
    NATURAL_NAME_PROP,
    NODE_LABELS,
    GraphSchema,
    schema_of,
)
from hazkg.graph.store import (
    Direction,
    Edge,
    GraphBuildPlan,
    Node,
    PlanEdge,
    PlanNode,
    PropertyGraph,
    SchemaViolation,
    UnknownNode,
    apply_plan,
    natural_view,
)
from hazkg.graph.snapshot import CorruptSnapshot, IoFailure, load_snapshot, save_snapshot

__all__ = [
    "BASE_NODE_PROPS",
    "CorruptSnapshot",
    "Direction",
    "Edge",
    "EDGE_SIGNATURES",
    "GraphBuildPlan",
    "GraphSchema",
    "IoFailure",
    "NATURAL_KEY_PROP",
    "NATURAL_NAME_PROP",
    "NODE_LABELS",
    "Node",
    "PlanEdge",
    "PlanNode",
    "PropertyGraph",
    "SchemaViolation",
    "UnknownNode",
    "apply_plan",
    "load_snapshot",
    "natural_view",
    "save_snapshot",
    "schema_of",
]
