"""Domain identifier types and canonical record shapes.

Chemical substances arrive from several registries that disagree about
identity: some rows carry an EC number, some a CAS number, some nothing
but a name. This module owns the validation rules for those identifiers
and the precedence rule that turns a parsed record into one stable key,
so every other module can join records without caring where they came
from.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from enum import Enum


class IdentifierError(ValueError):
    """Base class for identifier validation failures."""


class MalformedFormat(IdentifierError):
    """Input does not match the identifier's digit grouping."""


class ChecksumMismatch(IdentifierError):
    """Digit grouping is right but the check digit is wrong."""


_CAS_RE = re.compile(r"^\d{2,7}-\d{2}-\d$")
_EC_RE = re.compile(r"^\d{3}-\d{3}-\d$")


@dataclass(frozen=True)
class CasNumber:
    """A CAS registry number in canonical ``2-7 digits, 2 digits, check digit`` form."""

    value: str

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class EcNumber:
    """A European Community substance number in canonical ``NNN-NNN-N`` form."""

    value: str

    def __str__(self) -> str:
        return self.value


def cas_check_digit(stem: str) -> int:
    """Check digit for a CAS stem (all digits except the last, hyphens removed).

    The rightmost stem digit is weighted 1, the next 2, and so on leftward;
    the check digit is the weighted sum mod 10.
    """
    total = sum(weight * int(d) for weight, d in enumerate(reversed(stem), start=1))
    return total % 10


def ec_check_digit(stem: str) -> int | None:
    """Check digit for the first six digits of an EC number, or None.

    Digits are weighted 1..6 left to right and summed mod 11. A remainder
    of 10 means no valid EC number exists for that stem.
    """
    rem = sum(weight * int(d) for weight, d in enumerate(stem, start=1)) % 11
    return None if rem == 10 else rem


def validate_cas(text: str) -> CasNumber:
    """Validate and canonicalize a CAS number string.

    Raises MalformedFormat if the digit grouping is wrong, ChecksumMismatch
    if the final digit disagrees with the weighted-sum rule.
    """
    candidate = text.strip()
    if not _CAS_RE.match(candidate):
        raise MalformedFormat(f"not a CAS number: {text!r}")
    digits = candidate.replace("-", "")
    if cas_check_digit(digits[:-1]) != int(digits[-1]):
        raise ChecksumMismatch(f"CAS check digit failed: {candidate}")
    return CasNumber(candidate)


def validate_ec(text: str) -> EcNumber:
    """Validate and canonicalize an EC number string.

    Raises MalformedFormat for anything but the 3-3-1 grouping,
    ChecksumMismatch when the mod-11 check digit fails (including stems
    for which no valid check digit exists).
    """
    candidate = text.strip()
    if not _EC_RE.match(candidate):
        raise MalformedFormat(f"not an EC number: {text!r}")
    digits = candidate.replace("-", "")
    expected = ec_check_digit(digits[:6])
    if expected is None or expected != int(digits[6]):
        raise ChecksumMismatch(f"EC check digit failed: {candidate}")
    return EcNumber(candidate)


class DiseaseScheme(str, Enum):
    MESH = "MESH"
    OMIM = "OMIM"


@dataclass(frozen=True)
class DiseaseId:
    """A disease identifier in one vocabulary; MESH wins when a row has both."""

    scheme: DiseaseScheme
    code: str

    def __post_init__(self) -> None:
        if not self.code:
            raise ValueError("disease code must be non-empty")

    @classmethod
    def from_codes(cls, mesh: str | None, omim: str | None) -> "DiseaseId":
        if mesh:
            return cls(DiseaseScheme.MESH, mesh)
        if omim:
            return cls(DiseaseScheme.OMIM, omim)
        raise ValueError("need at least one of mesh/omim")

    def as_string(self) -> str:
        return f"{self.scheme.value}:{self.code}"

    @classmethod
    def parse(cls, text: str) -> "DiseaseId":
        scheme, _, code = text.partition(":")
        return cls(DiseaseScheme(scheme), code)

    def __str__(self) -> str:
        return self.as_string()


class KeyKind(str, Enum):
    EC = "EC"
    CAS = "CAS"
    SYNTHETIC = "SYN"


@dataclass(frozen=True)
class SubstanceKey:
    """Stable cross-run identity for one substance record."""

    kind: KeyKind
    value: str

    def as_string(self) -> str:
        return f"{self.kind.value}:{self.value}"

    @classmethod
    def parse(cls, text: str) -> "SubstanceKey":
        kind, sep, value = text.partition(":")
        if not sep or not value:
            raise ValueError(f"not a substance key: {text!r}")
        return cls(KeyKind(kind), value)

    def __str__(self) -> str:
        return self.as_string()


class Source(str, Enum):
    REACH = "REACH"
    CTD = "CTD"
    NIOSH = "NIOSH"


@dataclass(frozen=True)
class SubstanceRecord:
    """One substance as extracted from a source document.

    hazard_classes holds (class name, hazard phrase) pairs; it may be empty
    only for non-REACH provenance, because the factsheet extractor keeps
    hazardous substances only.
    """

    name: str
    source: Source
    ec: EcNumber | None = None
    cas: CasNumber | None = None
    hazard_classes: tuple[tuple[str, str], ...] = ()
    product_categories: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.name.strip():
            raise ValueError("substance name must be non-empty")
        if self.source is Source.REACH and not self.hazard_classes:
            raise ValueError("REACH records must carry at least one hazard class")

    @property
    def key(self) -> SubstanceKey:
        return canonical_key(self)


def canonical_key(record: SubstanceRecord) -> SubstanceKey:
    """Derive the record's key: EC if present, else CAS, else a synthetic hash.

    The synthetic fallback is the first 16 hex digits of a SHA-256 over the
    lowercase-trimmed name plus the source tag, so reruns over the same
    corpus always agree.
    """
    if record.ec is not None:
        return SubstanceKey(KeyKind.EC, record.ec.value)
    if record.cas is not None:
        return SubstanceKey(KeyKind.CAS, record.cas.value)
    basis = f"{record.name.strip().lower()}|{record.source.value}"
    digest = hashlib.sha256(basis.encode("utf-8")).hexdigest()[:16]
    return SubstanceKey(KeyKind.SYNTHETIC, digest)
