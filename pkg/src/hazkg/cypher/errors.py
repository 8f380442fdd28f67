from __future__ import annotations


class CypherSyntaxError(ValueError):
    """Query text is not well-formed; carries a 1-based line/column position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnsupportedFeature(ValueError):
    """Recognizable Cypher, but outside the read-only subset this engine accepts."""

    def __init__(self, feature: str, line: int = 1, column: int = 1):
        super().__init__(f"unsupported Cypher feature: {feature} (line {line}, column {column})")
        self.feature = feature
        self.line = line
        self.column = column


class ExecutionLimit(RuntimeError):
    """Query exceeded the row cap or the execution time budget."""
