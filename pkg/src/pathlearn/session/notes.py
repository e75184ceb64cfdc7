"""Context-anchored notes with deterministic anti-repetition.

The repetition filter works on character trigrams of normalized text
(lowercased; runs of non-alphanumeric characters collapse to one space), so
clients can predict exactly which bullets survive. Prompt-level "never
repeat" instructions alone are unverifiable; this post-filter is the
enforced layer.
"""

from __future__ import annotations

import re
from datetime import datetime, timezone

from ..errors import InvalidNote, NoteRedundant, NoteTooThin
from ..ingest.transcripts import window
from ..llm.gateway import complete_validated
from ..llm.provider import LlmProvider
from ..llm.templates import PromptKind
from ..models import LearnerSession, Note, NoteKind, Pathway
from .context import TranscriptSource
from ..fmt import format_timestamp

NOTE_WINDOW_HALF_WIDTH_S = 60.0
NOTE_SIMILARITY_THRESHOLD = 0.5

_NON_ALNUM = re.compile(r"[^a-z0-9]+")


def normalize_for_trigrams(text: str) -> str:
    return _NON_ALNUM.sub(" ", text.lower()).strip()


def trigrams(text: str) -> frozenset[str]:
    normalized = normalize_for_trigrams(text)
    if not normalized:
        return frozenset()
    if len(normalized) < 3:
        return frozenset({normalized})
    return frozenset(normalized[i : i + 3] for i in range(len(normalized) - 2))


def trigram_jaccard(a: str, b: str) -> float:
    ta, tb = trigrams(a), trigrams(b)
    if not ta or not tb:
        return 0.0
    return len(ta & tb) / len(ta | tb)


def filter_repetitive(
    bullets: tuple[str, ...],
    prior_bullets: tuple[str, ...],
    threshold: float = NOTE_SIMILARITY_THRESHOLD,
) -> tuple[str, ...]:
    """Drop bullets at or above ``threshold`` similarity to any prior bullet
    for the same video. Bullets within one reply are not deduped against
    each other; only stored notes count as prior."""
    return tuple(
        b
        for b in bullets
        if all(trigram_jaccard(b, prior) < threshold for prior in prior_bullets)
    )


def _prior_notes_lines(session: LearnerSession, video_id: str) -> str:
    prior = session.notes_for(video_id)
    if not prior:
        return "(none)"
    return " ".join(
        f"[{format_timestamp(n.anchor_s)}] {'; '.join(n.bullets)}" for n in prior
    )


def _append_note(session: LearnerSession, note: Note) -> LearnerSession:
    return LearnerSession(
        session_id=session.session_id,
        pathway_id=session.pathway_id,
        current=session.current,
        completed=session.completed,
        chat_history=session.chat_history,
        notes=session.notes + (note,),
    )


def generate_ai_note(
    session: LearnerSession,
    pathway: Pathway,
    timestamp_s: float,
    provider: LlmProvider,
    transcripts: TranscriptSource,
    max_attempts: int = 3,
) -> tuple[Note, LearnerSession]:
    """Generate a 2-3 bullet note anchored at the current playback position.

    Uses the +/-60 s transcript window when available, the no-transcript
    prompt otherwise; bullets repeating stored notes are dropped.
    """
    week_index, slot = session.current
    week = pathway.weeks[week_index - 1]
    video = week.videos[slot - 1]
    if not 0 <= timestamp_s <= video.duration_s:
        raise InvalidNote(
            f"timestamp {timestamp_s}s outside video duration {video.duration_s}s"
        )

    transcript = transcripts(video.video_id)
    window_text = window(
        transcript, timestamp_s, NOTE_WINDOW_HALF_WIDTH_S, video.duration_s
    )
    params = {
        "title": video.title,
        "main_concept": week.concept,
        "keywords": ", ".join(video.keywords) if video.keywords else "none",
        "learning_objective": video.learning_objective,
        "timestamp": format_timestamp(timestamp_s),
        "previous_notes": _prior_notes_lines(session, video.video_id),
    }
    if window_text:
        params["transcript_window"] = window_text
        kind = PromptKind.NOTE_WITH_TRANSCRIPT
    else:
        kind = PromptKind.NOTE_FALLBACK

    reply = complete_validated(provider, kind, params, max_attempts)
    bullets: tuple[str, ...] = reply.payload
    prior = tuple(
        bullet for note in session.notes_for(video.video_id) for bullet in note.bullets
    )
    surviving = filter_repetitive(bullets, prior)
    if not surviving:
        raise NoteRedundant("every generated bullet repeats a stored note")
    if len(surviving) < 2:
        raise NoteTooThin("fewer than 2 bullets survive the repetition filter")

    note = Note(
        note_id=f"note-{len(session.notes) + 1}",
        video_id=video.video_id,
        anchor_s=float(timestamp_s),
        kind=NoteKind.AI,
        bullets=surviving,
        created_at=datetime.now(timezone.utc),
    )
    return note, _append_note(session, note)


def add_manual_note(
    session: LearnerSession, pathway: Pathway, timestamp_s: float, text: str
) -> tuple[Note, LearnerSession]:
    """Store a free-form single-bullet note; manual notes are never deduped."""
    if not text.strip():
        raise InvalidNote("manual note text must be non-empty")
    week_index, slot = session.current
    video = pathway.video_at(week_index, slot)
    if not 0 <= timestamp_s <= video.duration_s:
        raise InvalidNote(
            f"timestamp {timestamp_s}s outside video duration {video.duration_s}s"
        )
    note = Note(
        note_id=f"note-{len(session.notes) + 1}",
        video_id=video.video_id,
        anchor_s=float(timestamp_s),
        kind=NoteKind.MANUAL,
        bullets=(text.strip(),),
        created_at=datetime.now(timezone.utc),
    )
    return note, _append_note(session, note)
