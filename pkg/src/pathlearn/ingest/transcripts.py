"""Transcript cache plus snippet/window text extraction."""

from __future__ import annotations

import json
import threading
from pathlib import Path

from ..errors import IngestError
from .backend import Backend
from .corpus import Transcript


class TranscriptCache:
    """Keyed by video_id only; transcripts are treated as immutable.

    Concurrent readers are free; writers are serialized per key so any
    interleaving of fetches for one id performs at most one backend call.
    ``directory`` adds an optional JSON-file layer that survives restarts.
    """

    def __init__(self, directory: Path | str | None = None):
        self.directory = Path(directory) if directory else None
        if self.directory:
            self.directory.mkdir(parents=True, exist_ok=True)
        self._memory: dict[str, Transcript] = {}
        self._master = threading.Lock()
        self._key_locks: dict[str, threading.Lock] = {}

    def _lock_for(self, video_id: str) -> threading.Lock:
        with self._master:
            return self._key_locks.setdefault(video_id, threading.Lock())

    def _path_for(self, video_id: str) -> Path | None:
        return self.directory / f"{video_id}.json" if self.directory else None

    def get(self, video_id: str) -> Transcript | None:
        hit = self._memory.get(video_id)
        if hit is not None:
            return hit
        path = self._path_for(video_id)
        if path and path.is_file():
            transcript = Transcript.from_dict(json.loads(path.read_text(encoding="utf-8")))
            self._memory[video_id] = transcript
            return transcript
        return None

    def put(self, transcript: Transcript) -> None:
        self._memory[transcript.video_id] = transcript
        path = self._path_for(transcript.video_id)
        if path:
            path.write_text(json.dumps(transcript.to_dict()), encoding="utf-8")

    def __len__(self) -> int:
        return len(self._memory)

    def __contains__(self, video_id: str) -> bool:
        return self.get(video_id) is not None


def fetch_transcript(video_id: str, backend: Backend, cache: TranscriptCache) -> Transcript:
    """Cached transcript fetch; a video without captions caches as an
    empty-segments transcript. Backend failure leaves the cache unwritten."""
    cached = cache.get(video_id)
    if cached is not None:
        return cached
    with cache._lock_for(video_id):
        cached = cache.get(video_id)
        if cached is not None:
            return cached
        try:
            transcript = backend.get_transcript(video_id)
        except IngestError:
            raise
        except Exception as exc:
            raise IngestError(f"transcript fetch failed for {video_id}: {exc}") from exc
        if transcript is None:
            transcript = Transcript.empty_for(video_id)
        cache.put(transcript)
        return transcript


def snippet(transcript: Transcript, max_chars: int) -> str:
    """Leading transcript text, single-space joined, cut at the last whole
    word that fits in ``max_chars``."""
    if max_chars <= 0:
        raise ValueError("max_chars must be > 0")
    text = transcript.full_text()
    if len(text) <= max_chars:
        return text
    cut = text.rfind(" ", 0, max_chars + 1)
    if cut <= 0:
        return ""
    return text[:cut].rstrip()


def truncate_words(text: str, max_chars: int) -> str:
    """Whole-word truncation for already-joined text (same rule as snippet)."""
    if max_chars <= 0:
        raise ValueError("max_chars must be > 0")
    if len(text) <= max_chars:
        return text
    cut = text.rfind(" ", 0, max_chars + 1)
    if cut <= 0:
        return ""
    return text[:cut].rstrip()


def window(
    transcript: Transcript, center_s: float, half_width_s: float, duration_s: float
) -> str:
    """Text of all segments overlapping [center-half_width, center+half_width],
    clamped to [0, duration_s]. Only existing segment text is returned."""
    if half_width_s <= 0:
        raise ValueError("half_width_s must be > 0")
    lo = max(0.0, center_s - half_width_s)
    hi = min(duration_s, center_s + half_width_s)
    picked = [
        s.text
        for s in transcript.segments
        if s.text and s.start_s <= hi and s.start_s + s.dur_s >= lo
    ]
    return " ".join(picked)
