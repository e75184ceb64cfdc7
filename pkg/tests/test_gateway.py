from __future__ import annotations

import json

import pytest

from pathlearn.errors import LlmExhausted, ProviderError
from pathlearn.llm.gateway import complete_validated
from pathlearn.llm.mock import ScriptedProvider
from pathlearn.llm.templates import PromptKind

VALID_MAP = json.dumps(
    {
        "description": "d",
        "concepts": [
            {"label": "Signal Flow Basics", "description": "x"},
            {"label": "Applied Channel Coding", "description": "y"},
            {"label": "Advanced Error Correction", "description": "z"},
        ],
    }
)

PARAMS = {"topic": "coding theory", "numConcepts": 3}


def test_first_try_success_counts_one_attempt():
    provider = ScriptedProvider([VALID_MAP])
    reply = complete_validated(provider, PromptKind.CONCEPT_MAP, PARAMS)
    assert reply.attempts == 1
    assert len(provider.calls) == 1


def test_fail_once_then_succeed_counts_two():
    provider = ScriptedProvider(["not json at all", VALID_MAP])
    reply = complete_validated(provider, PromptKind.CONCEPT_MAP, PARAMS)
    assert reply.attempts == 2
    assert len(provider.calls) == 2


def test_retry_prompt_carries_corrective_suffix():
    provider = ScriptedProvider(["prose only", VALID_MAP])
    complete_validated(provider, PromptKind.CONCEPT_MAP, PARAMS)
    retry_request = provider.calls[1]
    assert "Your previous reply was invalid:" in retry_request.user_text
    assert "NotJson" in retry_request.user_text
    assert "Return only the required format." in retry_request.user_text
    # The first request carries no corrective line.
    assert "Your previous reply was invalid" not in provider.calls[0].user_text


def test_exhaustion_after_exactly_max_attempts():
    provider = ScriptedProvider(["still prose"])
    with pytest.raises(LlmExhausted) as err:
        complete_validated(provider, PromptKind.CONCEPT_MAP, PARAMS, max_attempts=3)
    assert err.value.attempts == 3
    assert len(provider.calls) == 3


def test_never_exceeds_max_attempts_even_when_one():
    provider = ScriptedProvider(["prose"])
    with pytest.raises(LlmExhausted):
        complete_validated(provider, PromptKind.CONCEPT_MAP, PARAMS, max_attempts=1)
    assert len(provider.calls) == 1


def test_transport_failure_is_not_retried():
    provider = ScriptedProvider([ProviderError("boom", code="Transport")])
    with pytest.raises(ProviderError):
        complete_validated(provider, PromptKind.CONCEPT_MAP, PARAMS)
    assert len(provider.calls) == 1


def test_invalid_max_attempts_rejected():
    provider = ScriptedProvider([VALID_MAP])
    with pytest.raises(ValueError):
        complete_validated(provider, PromptKind.CONCEPT_MAP, PARAMS, max_attempts=0)


def test_caller_suffix_is_appended():
    provider = ScriptedProvider([VALID_MAP])
    complete_validated(
        provider, PromptKind.CONCEPT_MAP, PARAMS, suffix="Fix the Bloom violations."
    )
    assert provider.calls[0].user_text.endswith("Fix the Bloom violations.")
