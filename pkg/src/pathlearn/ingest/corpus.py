"""Offline fixture corpus: raw video records, playlists, transcripts.

The corpus file is one JSON document with ``videos``, ``playlists`` and
``transcripts`` maps; it stands in for platform search/metadata APIs so the
whole pipeline runs without network access.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from ..errors import IngestError
from ..models import SCHEMA_VERSION


@dataclass(frozen=True)
class TranscriptSegment:
    start_s: float
    dur_s: float
    text: str

    def to_dict(self) -> dict:
        return {"start_s": self.start_s, "dur_s": self.dur_s, "text": self.text}

    @classmethod
    def from_dict(cls, d: dict) -> "TranscriptSegment":
        return cls(start_s=float(d["start_s"]), dur_s=float(d["dur_s"]), text=d["text"])


@dataclass(frozen=True)
class Transcript:
    video_id: str
    segments: tuple[TranscriptSegment, ...]
    fetched_at: datetime

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(self.segments))
        starts = [s.start_s for s in self.segments]
        if any(s < 0 for s in starts) or starts != sorted(starts):
            raise ValueError("segments must be ordered by non-negative start_s")

    @property
    def empty(self) -> bool:
        return not self.segments

    def full_text(self) -> str:
        return " ".join(s.text for s in self.segments if s.text)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "video_id": self.video_id,
            "segments": [s.to_dict() for s in self.segments],
            "fetched_at": self.fetched_at.isoformat(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Transcript":
        return cls(
            video_id=d["video_id"],
            segments=tuple(TranscriptSegment.from_dict(s) for s in d["segments"]),
            fetched_at=datetime.fromisoformat(d["fetched_at"]),
        )

    @classmethod
    def empty_for(cls, video_id: str) -> "Transcript":
        return cls(video_id=video_id, segments=(), fetched_at=_now())


def _now() -> datetime:
    return datetime.now(timezone.utc)


@dataclass(frozen=True)
class Corpus:
    videos: dict[str, dict]
    playlists: dict[str, tuple[str, ...]]
    transcripts: dict[str, tuple[TranscriptSegment, ...]] = field(default_factory=dict)

    def __post_init__(self):
        for label, members in self.playlists.items():
            unresolved = [vid for vid in members if vid not in self.videos]
            if unresolved:
                raise IngestError(
                    f"playlist {label!r} references unknown videos: {unresolved}"
                )


def load_corpus(path: Path | str) -> Corpus:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise IngestError(f"cannot load corpus from {path}: {exc}") from exc
    transcripts = {
        vid: tuple(TranscriptSegment.from_dict(s) for s in entry["segments"])
        for vid, entry in data.get("transcripts", {}).items()
    }
    return Corpus(
        videos=dict(data.get("videos", {})),
        playlists={k: tuple(v) for k, v in data.get("playlists", {}).items()},
        transcripts=transcripts,
    )
