"""Backends answering search/metadata/transcript queries.

FixtureBackend serves everything from an in-memory Corpus (zero network
operations); LiveBackend is the HTTPS seam for a real platform client. Both
sit behind the same interface, and InstrumentedBackend wraps either to count
calls for tests and cache verification.
"""

from __future__ import annotations

import re
from collections import Counter
from typing import Protocol, runtime_checkable

from ..errors import IngestError
from .corpus import Corpus, Transcript, _now

_TOKEN = re.compile(r"[a-z0-9]+")


def tokens(text: str) -> set[str]:
    return set(_TOKEN.findall(text.lower()))


@runtime_checkable
class Backend(Protocol):
    def search_playlists(self, query: str) -> list[tuple[str, list[str]]]:
        """Matching (label, member video ids), best match first."""
        ...

    def search_videos(self, query: str) -> list[str]:
        """Matching video ids, best match first."""
        ...

    def get_video(self, video_id: str) -> dict | None:
        """Raw metadata record, or None when the video is unknown."""
        ...

    def get_transcript(self, video_id: str) -> Transcript | None:
        """Transcript, or None when the video has no captions."""
        ...


class FixtureBackend:
    """Corpus-backed backend with token-overlap matching.

    A query matches when it shares at least 2 tokens with the target text
    (1 for single-token queries); results are ordered by overlap count
    descending, id/label ascending for determinism.
    """

    def __init__(self, corpus: Corpus):
        self.corpus = corpus

    def _min_overlap(self, query_tokens: set[str]) -> int:
        return 1 if len(query_tokens) <= 1 else 2

    def search_playlists(self, query: str) -> list[tuple[str, list[str]]]:
        query_tokens = tokens(query)
        needed = self._min_overlap(query_tokens)
        scored = []
        for label, members in self.corpus.playlists.items():
            overlap = len(query_tokens & tokens(label))
            if overlap >= needed:
                scored.append((-overlap, label, list(members)))
        scored.sort()
        return [(label, members) for _, label, members in scored]

    def search_videos(self, query: str) -> list[str]:
        query_tokens = tokens(query)
        needed = self._min_overlap(query_tokens)
        scored = []
        for video_id, record in self.corpus.videos.items():
            haystack = " ".join(
                [
                    record.get("title", ""),
                    record.get("description", ""),
                    " ".join(record.get("tags", [])),
                ]
            )
            overlap = len(query_tokens & tokens(haystack))
            if overlap >= needed:
                scored.append((-overlap, video_id))
        scored.sort()
        return [video_id for _, video_id in scored]

    def get_video(self, video_id: str) -> dict | None:
        return self.corpus.videos.get(video_id)

    def get_transcript(self, video_id: str) -> Transcript | None:
        segments = self.corpus.transcripts.get(video_id)
        if segments is None:
            return None
        return Transcript(video_id=video_id, segments=segments, fetched_at=_now())


class LiveBackend:
    """Placeholder for the platform data API / metadata-extraction subprocess.

    Present so live mode has a config seam; every call raises until an
    endpoint is configured, keeping fixture-mode tests honest about never
    touching the network.
    """

    def __init__(self, api_base: str = "", api_key: str = ""):
        self.api_base = api_base
        self.api_key = api_key

    def _unavailable(self) -> IngestError:
        return IngestError(
            "live ingest backend is not configured; set INGEST_MODE=fixture or "
            "provide a platform API endpoint"
        )

    def search_playlists(self, query: str) -> list[tuple[str, list[str]]]:
        raise self._unavailable()

    def search_videos(self, query: str) -> list[str]:
        raise self._unavailable()

    def get_video(self, video_id: str) -> dict | None:
        raise self._unavailable()

    def get_transcript(self, video_id: str) -> Transcript | None:
        raise self._unavailable()


class InstrumentedBackend:
    """Delegating wrapper that counts calls per method."""

    def __init__(self, inner: Backend):
        self.inner = inner
        self.calls: Counter[str] = Counter()

    def search_playlists(self, query: str):
        self.calls["search_playlists"] += 1
        return self.inner.search_playlists(query)

    def search_videos(self, query: str):
        self.calls["search_videos"] += 1
        return self.inner.search_videos(query)

    def get_video(self, video_id: str):
        self.calls["get_video"] += 1
        return self.inner.get_video(video_id)

    def get_transcript(self, video_id: str):
        self.calls["get_transcript"] += 1
        return self.inner.get_transcript(video_id)
