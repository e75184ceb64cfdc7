"""Render -> complete -> parse loop with bounded corrective retry."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Mapping

from ..errors import LlmExhausted, ParseError
from .parsing import parse_structured
from .provider import LlmProvider
from .templates import PromptKind, render

log = logging.getLogger(__name__)

DEFAULT_MAX_ATTEMPTS = 3

CORRECTIVE_SUFFIX = (
    "Your previous reply was invalid: {violation}. Return only the required format."
)


@dataclass(frozen=True)
class StructuredReply:
    payload: Any
    attempts: int
    raw: str


def complete_validated(
    provider: LlmProvider,
    kind: PromptKind | str,
    params: Mapping[str, Any],
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    suffix: str | None = None,
) -> StructuredReply:
    """Return the first schema-valid payload within ``max_attempts`` calls.

    Each retry re-issues the rendered prompt with a one-line corrective
    suffix quoting only the first schema violation. Provider transport
    failures propagate as ProviderError immediately; running out of attempts
    raises LlmExhausted. ``suffix`` lets callers append their own corrective
    line (used when re-ordering a plan that failed validation).
    """
    if max_attempts < 1:
        raise ValueError("max_attempts must be >= 1")
    kind = PromptKind(kind)
    base = render(kind, params)
    if suffix:
        base = base.with_suffix(suffix)
    request = base
    last_violation = ""
    for attempt in range(1, max_attempts + 1):
        raw = provider.complete(request)
        try:
            payload = parse_structured(kind, raw, params)
            return StructuredReply(payload=payload, attempts=attempt, raw=raw)
        except ParseError as exc:
            last_violation = exc.violation
            log.debug(
                "invalid %s reply from %s (attempt %d/%d): %s",
                kind.value,
                provider.name,
                attempt,
                max_attempts,
                exc.violation,
            )
            request = base.with_suffix(
                CORRECTIVE_SUFFIX.format(violation=exc.violation)
            )
    raise LlmExhausted(max_attempts, last_violation)
