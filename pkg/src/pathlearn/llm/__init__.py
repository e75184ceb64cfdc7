from .gateway import StructuredReply, complete_validated
from .mock import MockProvider, ScriptedProvider, request_digest
from .provider import HttpProvider, LlmProvider, RateLimitedProvider, RateLimiter
from .templates import PromptKind, PromptRequest, render

__all__ = [
    "HttpProvider",
    "LlmProvider",
    "MockProvider",
    "PromptKind",
    "PromptRequest",
    "RateLimitedProvider",
    "RateLimiter",
    "ScriptedProvider",
    "StructuredReply",
    "complete_validated",
    "render",
    "request_digest",
]
