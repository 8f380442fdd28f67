from __future__ import annotations


class IngestError(ValueError):
    """Base class for per-document extraction failures."""


class TemplateMismatch(IngestError):
    """Document structure does not match the supported fixture template."""


class NotHazardous(IngestError):
    """Factsheet has no hazard classification; the platform keeps hazardous
    substances only."""


class MalformedRow(IngestError):
    """One tabular row could not be parsed; callers log and skip it."""


class MissingCas(IngestError):
    """Organ page has no usable CAS number (absent, malformed, or bad checksum)."""


class EmptyAfterNormalization(IngestError):
    """Organ label normalized down to the empty string."""
