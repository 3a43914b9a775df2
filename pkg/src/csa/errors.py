"""Engine error hierarchy with machine-readable codes shared by CLI and API."""

from __future__ import annotations


class CsaError(Exception):
    """Base class; ``code`` is the wire-level error identifier."""

    code = "INTERNAL"

    def __init__(self, message: str = "", details: dict | None = None):
        super().__init__(message or self.code)
        self.message = message or self.code
        self.details = details or {}

    def to_doc(self) -> dict:
        return {"code": self.code, "message": self.message, "details": self.details}


# --- order-relations ---

class UnknownDisorder(CsaError):
    code = "UNKNOWN_DISORDER"


class DuplicatePair(CsaError):
    code = "DUPLICATE_PAIR"


class SelfPair(CsaError):
    code = "SELF_PAIR"


class UnknownProperty(CsaError):
    code = "UNKNOWN_PROPERTY"


class NotLinear(CsaError):
    code = "NOT_LINEAR"


class NotWeak(CsaError):
    code = "NOT_WEAK"


class NotSemiorder(CsaError):
    code = "NOT_SEMIORDER"


# --- eigen-weighting ---

class InvalidMatrix(CsaError):
    code = "INVALID_MATRIX"


class NotConverged(CsaError):
    code = "NOT_CONVERGED"


class InconsistentMatrix(CsaError):
    code = "INCONSISTENT_MATRIX"


class PartitionError(CsaError):
    code = "PARTITION_ERROR"


class UnassignedDisorder(CsaError):
    code = "UNASSIGNED_DISORDER"


class UnknownLevel(CsaError):
    code = "UNKNOWN_LEVEL"


# --- trisection ---

class CycleDetected(CsaError):
    code = "CYCLE_DETECTED"


class BadPercentiles(CsaError):
    code = "BAD_PERCENTILES"


class ThresholdOrder(CsaError):
    code = "THRESHOLD_ORDER"


# --- session store / plumbing ---

class NotFound(CsaError):
    code = "NOT_FOUND"


class RevisionConflict(CsaError):
    code = "REVISION_CONFLICT"


class ValidationFailure(CsaError):
    code = "VALIDATION_FAILURE"


class CorruptDocument(CsaError):
    code = "CORRUPT_DOCUMENT"


class StorageFailure(CsaError):
    code = "STORAGE_FAILURE"


class InvalidDisorderSet(CsaError):
    code = "INVALID_DISORDER_SET"


class FormatError(CsaError):
    code = "FORMAT_ERROR"
