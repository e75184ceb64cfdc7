"""Session creation and progress tracking over a persisted pathway."""

from __future__ import annotations

import uuid
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timedelta, timezone

from ..errors import InvalidPosition
from ..ingest.backend import Backend
from ..ingest.transcripts import TranscriptCache, fetch_transcript
from ..models import LearnerSession, Pathway

PREFETCH_WORKERS = 8


def new_session(pathway: Pathway, session_id: str | None = None) -> LearnerSession:
    """Fresh session at position (1,1) with empty history, notes, progress."""
    return LearnerSession(
        session_id=session_id or f"ls-{uuid.uuid4().hex[:12]}",
        pathway_id=pathway.pathway_id,
        current=(1, 1),
    )


def warm_cache(pathway: Pathway, backend: Backend, cache: TranscriptCache) -> int:
    """Prefetch transcripts for every pathway video; returns the number of
    videos touched. Missing transcripts cache as empty so later lookups stay
    offline."""
    ids = [v.video_id for v in pathway.videos()]
    with ThreadPoolExecutor(max_workers=PREFETCH_WORKERS) as executor:
        list(executor.map(lambda vid: fetch_transcript(vid, backend, cache), ids))
    return len(ids)


def advance_position(
    pathway: Pathway, completed: frozenset[tuple[int, int]]
) -> tuple[int, int]:
    """First not-completed position in week/slot order; last position when
    everything is done."""
    positions = pathway.positions()
    for position in positions:
        if position not in completed:
            return position
    return positions[-1]


def mark_completed(
    session: LearnerSession, pathway: Pathway, week_index: int, slot: int
) -> LearnerSession:
    """Mark a position done and advance the cursor; idempotent."""
    position = (week_index, slot)
    if position not in pathway.positions():
        raise InvalidPosition(f"({week_index}, {slot}) is not a pathway position")
    completed = session.completed | {position}
    return LearnerSession(
        session_id=session.session_id,
        pathway_id=session.pathway_id,
        current=advance_position(pathway, completed),
        completed=completed,
        chat_history=session.chat_history,
        notes=session.notes,
    )


def next_timestamp(session: LearnerSession) -> datetime:
    """Strictly-increasing timestamp for history appends."""
    now = datetime.now(timezone.utc)
    if session.chat_history:
        last = session.chat_history[-1].created_at
        if now <= last:
            now = last + timedelta(microseconds=1)
    return now
