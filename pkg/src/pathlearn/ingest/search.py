"""Candidate retrieval (playlist -> video -> fallback phases) and metadata
verification."""

from __future__ import annotations

from dataclasses import dataclass

from ..models import CandidateSource, Chapter, ExperienceLevel, VideoCandidate
from .backend import Backend

PHASE_CAP = 25


@dataclass(frozen=True)
class SearchQuery:
    concept_label: str
    topic: str
    experience_level: ExperienceLevel
    phase: CandidateSource = CandidateSource.SEARCH

    def __post_init__(self):
        if not self.concept_label.strip():
            raise ValueError("concept_label must be non-empty")
        object.__setattr__(self, "experience_level", ExperienceLevel(self.experience_level))
        object.__setattr__(self, "phase", CandidateSource(self.phase))

    def text(self) -> str:
        if self.phase is CandidateSource.FALLBACK:
            return f"{self.concept_label} tutorial {self.experience_level.value}"
        return f"{self.topic} {self.concept_label}"


@dataclass(frozen=True)
class Rejection:
    video_id: str
    reason: str


def _candidate_from_record(record: dict, source: CandidateSource) -> VideoCandidate:
    return VideoCandidate(
        video_id=record["video_id"],
        title=record.get("title", ""),
        channel=record.get("channel", ""),
        duration_s=float(record.get("duration_s", 0)),
        description=record.get("description", ""),
        tags=tuple(record.get("tags", [])),
        chapters=tuple(Chapter.from_dict(c) for c in record.get("chapters", [])),
        view_count=int(record.get("view_count", 0)),
        has_transcript=bool(record.get("has_transcript", False)),
        source=source,
    )


def search_candidates(query: SearchQuery, backend: Backend) -> list[VideoCandidate]:
    """Run one retrieval phase; every candidate carries its source tag and
    each phase returns at most PHASE_CAP results. A fixture query with no
    match is an empty list, not an error."""
    seen: set[str] = set()
    results: list[VideoCandidate] = []

    def add(video_id: str) -> None:
        if video_id in seen or len(results) >= PHASE_CAP:
            return
        record = backend.get_video(video_id)
        if record is None:
            return
        seen.add(video_id)
        results.append(_candidate_from_record(record, query.phase))

    if query.phase is CandidateSource.PLAYLIST:
        for _label, members in backend.search_playlists(query.text()):
            for video_id in members:
                add(video_id)
    else:
        for video_id in backend.search_videos(query.text()):
            add(video_id)
    return results


def verify_metadata(
    candidate: VideoCandidate, backend: Backend
) -> VideoCandidate | Rejection:
    """Confirm availability and fill duration/view_count/chapters/tags from
    the authoritative backend record."""
    record = backend.get_video(candidate.video_id)
    if record is None or not record.get("available", True):
        return Rejection(candidate.video_id, "Unavailable")
    duration = float(record.get("duration_s", 0))
    if duration <= 0:
        return Rejection(candidate.video_id, "ZeroDuration")
    return VideoCandidate(
        video_id=candidate.video_id,
        title=record.get("title", candidate.title),
        channel=record.get("channel", candidate.channel),
        duration_s=duration,
        description=record.get("description", candidate.description),
        tags=tuple(record.get("tags", candidate.tags)),
        chapters=tuple(Chapter.from_dict(c) for c in record.get("chapters", [])),
        transcript_snippet=candidate.transcript_snippet,
        view_count=int(record.get("view_count", candidate.view_count)),
        has_transcript=bool(record.get("has_transcript", candidate.has_transcript)),
        source=candidate.source,
    )
