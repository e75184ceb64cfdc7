"""Error taxonomy shared across the package.

Every error carries a stable machine ``code`` so callers (and the HTTP
layer) can map failures without string-matching messages.
"""

from __future__ import annotations


class PathLearnError(Exception):
    """Base class; ``code`` identifies the failure kind."""

    code = "Error"

    def __init__(self, message: str = "", *, code: str | None = None):
        super().__init__(message or self.__class__.code)
        if code is not None:
            self.code = code


class InvalidWeek(PathLearnError):
    code = "InvalidWeek"


class TemplateError(PathLearnError):
    code = "TemplateError"


class ParseError(PathLearnError):
    """Structured reply failed extraction or schema validation.

    ``violation`` holds the first schema violation, used verbatim in the
    corrective retry suffix.
    """

    code = "ParseError"

    def __init__(self, violation: str):
        super().__init__(violation)
        self.violation = violation


class ProviderError(PathLearnError):
    """Transport-level provider failure (distinct from LlmExhausted)."""

    code = "ProviderError"


class LlmExhausted(PathLearnError):
    code = "LlmExhausted"

    def __init__(self, attempts: int, last_violation: str):
        super().__init__(f"no valid reply after {attempts} attempts: {last_violation}")
        self.attempts = attempts
        self.last_violation = last_violation


class IngestError(PathLearnError):
    code = "IngestError"


class PlanningError(PathLearnError):
    code = "PlanningError"


class RevisionError(PathLearnError):
    code = "RevisionError"


class NotFound(PathLearnError):
    code = "NotFound"


class InvalidPosition(PathLearnError):
    code = "InvalidPosition"


class InvalidNote(PathLearnError):
    code = "InvalidNote"


class NoteRedundant(PathLearnError):
    code = "NoteRedundant"


class NoteTooThin(PathLearnError):
    code = "NoteTooThin"


class StorageError(PathLearnError):
    code = "StorageError"
