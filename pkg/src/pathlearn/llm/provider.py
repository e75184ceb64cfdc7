"""Completion providers and the per-provider rate limiter."""

from __future__ import annotations

import threading
from collections import deque
from typing import Protocol, runtime_checkable

import httpx

from ..errors import ProviderError
from .templates import PromptRequest

DEFAULT_TIMEOUT_S = 60.0


@runtime_checkable
class LlmProvider(Protocol):
    name: str
    deterministic: bool

    def complete(self, request: PromptRequest) -> str: ...


class HttpProvider:
    """Chat-completions provider over HTTPS (OpenAI-compatible wire shape).

    One transport config is shared by every request kind.
    """

    deterministic = False

    def __init__(
        self,
        endpoint: str,
        model: str,
        api_key: str = "",
        timeout_s: float = DEFAULT_TIMEOUT_S,
        temperature: float = 0.2,
    ):
        self.name = f"http:{model}"
        self.endpoint = endpoint
        self.model = model
        self.api_key = api_key
        self.timeout_s = timeout_s
        self.temperature = temperature

    def complete(self, request: PromptRequest) -> str:
        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        body = {
            "model": self.model,
            "temperature": self.temperature,
            "messages": [
                {"role": "system", "content": request.system_text},
                {"role": "user", "content": request.user_text},
            ],
        }
        try:
            response = httpx.post(
                self.endpoint, json=body, headers=headers, timeout=self.timeout_s
            )
            response.raise_for_status()
            data = response.json()
            return data["choices"][0]["message"]["content"]
        except httpx.HTTPError as exc:
            raise ProviderError(f"provider transport failure: {exc}", code="Transport") from exc
        except (KeyError, IndexError, ValueError) as exc:
            raise ProviderError(f"malformed provider response: {exc}", code="Transport") from exc


class RateLimiter:
    """Admission gate: never more than ``max_in_flight`` concurrent calls,
    admitted strictly in arrival (FIFO) order."""

    def __init__(self, max_in_flight: int):
        if max_in_flight < 1:
            raise ValueError("max_in_flight must be >= 1")
        self.max_in_flight = max_in_flight
        self._active = 0
        self._queue: deque[object] = deque()
        self._cond = threading.Condition()

    def __enter__(self):
        ticket = object()
        with self._cond:
            self._queue.append(ticket)
            self._cond.wait_for(
                lambda: self._queue[0] is ticket and self._active < self.max_in_flight
            )
            self._queue.popleft()
            self._active += 1
        return self

    def __exit__(self, *exc_info):
        with self._cond:
            self._active -= 1
            self._cond.notify_all()
        return False


class RateLimitedProvider:
    """Wrap a provider so concurrent completions respect a RateLimiter."""

    def __init__(self, provider: LlmProvider, limiter: RateLimiter):
        self._provider = provider
        self._limiter = limiter
        self.name = provider.name
        self.deterministic = provider.deterministic

    def complete(self, request: PromptRequest) -> str:
        with self._limiter:
            return self._provider.complete(request)
