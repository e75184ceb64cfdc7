"""Deterministic offline providers backed by fixture files.

Fixture files live in one directory, one UTF-8 text file per reply:
``<kind>__<digest>.txt`` for an exact request match, ``<kind>__default.txt``
as the per-kind fallback. The digest covers (kind, sorted params), so
cosmetic template edits keep fixtures valid while param changes invalidate
them. Fixture text may itself contain ``{{param}}`` placeholders, which are
substituted from the request params; the provider stays a pure function of
the request.
"""

from __future__ import annotations

import hashlib
import json
import re
from pathlib import Path
from typing import Iterable, Mapping

from ..errors import ProviderError
from .templates import PromptKind, PromptRequest

_PLACEHOLDER = re.compile(r"\{\{(\w+)\}\}")


def request_digest(kind: PromptKind | str, params: Mapping[str, object]) -> str:
    """Stable digest of (kind, sorted params)."""
    kind = PromptKind(kind)
    reduced = {k: str(v) for k, v in sorted(params.items())}
    blob = json.dumps({"kind": kind.value, "params": reduced}, sort_keys=True)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:16]


class MockProvider:
    """Pure fixture-lookup provider; identical request, identical reply."""

    deterministic = True

    def __init__(self, fixture_dir: Path | str, seed: int = 0):
        self.fixture_dir = Path(fixture_dir)
        self.seed = seed
        self.name = f"mock:{self.fixture_dir.name}"
        self.calls: list[PromptRequest] = []

    def complete(self, request: PromptRequest) -> str:
        self.calls.append(request)
        digest = request_digest(request.kind, request.params)
        stem = request.kind.value
        names = [f"{stem}__{digest}.txt"]
        mode = request.params.get("mode")
        if mode:
            # Template variants (e.g. single-slot revision) get their own
            # default so a full-plan fixture is never returned for them.
            names.append(f"{stem}.{mode}__default.txt")
        names.append(f"{stem}__default.txt")
        for name in names:
            candidate = self.fixture_dir / name
            if candidate.is_file():
                text = candidate.read_text(encoding="utf-8")
                return _fill(text, request.params)
        raise ProviderError(
            f"no fixture for kind={stem} (digest {digest}) in {self.fixture_dir}",
            code="FixtureMissing",
        )


def _fill(text: str, params: Mapping[str, object]) -> str:
    def replace(match: re.Match) -> str:
        key = match.group(1)
        if key in params:
            return _json_safe(params[key])
        return match.group(0)

    return _PLACEHOLDER.sub(replace, text)


def _json_safe(value: object) -> str:
    # Fixture bodies are usually JSON; escape strings so substitution cannot
    # break the document.
    text = str(value)
    return json.dumps(text)[1:-1] if isinstance(value, str) else text


def write_fixture(
    fixture_dir: Path | str,
    kind: PromptKind | str,
    text: str,
    params: Mapping[str, object] | None = None,
) -> Path:
    """Write a reply fixture; with ``params`` an exact-digest file, else the
    kind default."""
    kind = PromptKind(kind)
    fixture_dir = Path(fixture_dir)
    fixture_dir.mkdir(parents=True, exist_ok=True)
    suffix = request_digest(kind, params) if params is not None else "default"
    path = fixture_dir / f"{kind.value}__{suffix}.txt"
    path.write_text(text, encoding="utf-8")
    return path


class ScriptedProvider:
    """Test double replying from a fixed script, then repeating the last entry.

    Entries are raw reply strings; an entry that is an Exception instance is
    raised instead.
    """

    deterministic = True

    def __init__(self, replies: Iterable[str | Exception], name: str = "scripted"):
        self._replies = list(replies)
        if not self._replies:
            raise ValueError("scripted provider needs at least one reply")
        self.name = name
        self.calls: list[PromptRequest] = []

    def complete(self, request: PromptRequest) -> str:
        index = min(len(self.calls), len(self._replies) - 1)
        self.calls.append(request)
        reply = self._replies[index]
        if isinstance(reply, Exception):
            raise reply
        return reply
