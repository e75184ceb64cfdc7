"""Budgeted context assembly for the pathway-aware assistant.

Hard budgets: current transcript 3000 chars, per-video detail excerpts 400
chars, history capped at the last 6 messages. Every truncation cuts at a
whole-word boundary. Current-video (type A) bundles carry no detail blocks,
so no text from any other video's transcript can leak into them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..ingest.corpus import Transcript
from ..ingest.transcripts import snippet, truncate_words
from ..models import ChatMessage, LearnerSession, MessageRole, Pathway, QuestionClass

TRANSCRIPT_BUDGET_CHARS = 3000
EXCERPT_BUDGET_CHARS = 400
HISTORY_BUDGET_MESSAGES = 6

TranscriptSource = Callable[[str], Transcript]


@dataclass(frozen=True)
class DetailBlock:
    title: str
    concept: str
    description: str
    excerpt: str


@dataclass(frozen=True)
class ContextBundle:
    type: QuestionClass
    topic: str
    video_title: str
    instructor: str
    completed: int
    total: int
    transcript: str
    listing: tuple[str, ...]
    detail_blocks: tuple[DetailBlock, ...]
    history: tuple[ChatMessage, ...]

    def listing_text(self) -> str:
        return ", ".join(self.listing)

    def history_text(self) -> str:
        if not self.history:
            return "(none)"
        roles = {MessageRole.LEARNER: "Student", MessageRole.ASSISTANT: "Tutor"}
        return " | ".join(f"{roles[m.role]}: {m.content}" for m in self.history)

    def detail_text(self) -> str:
        blocks = [
            f'{i + 1}. "{b.title}" Concept: {b.concept} Desc: {b.description} '
            f'Transcript excerpt: "{b.excerpt}"'
            for i, b in enumerate(self.detail_blocks)
        ]
        return " --- ".join(blocks)

    def to_params(self, message: str) -> dict:
        params = {
            "type": "A" if self.type is QuestionClass.A_CURRENT_VIDEO else "B",
            "topic": self.topic,
            "video_title": self.video_title,
            "instructor": self.instructor,
            "completed": self.completed,
            "total": self.total,
            "transcript": self.transcript,
            "total_videos": self.total,
            "pathway_listing": self.listing_text(),
            "history": self.history_text(),
            "message": message,
        }
        if self.type is QuestionClass.B_PATHWAY:
            params["detail_context"] = self.detail_text()
        return params


def assemble_context(
    session: LearnerSession,
    pathway: Pathway,
    qclass: QuestionClass,
    transcripts: TranscriptSource,
) -> ContextBundle:
    """Build the bundle in template order for the given question class.

    Missing transcripts degrade to empty text; they never fail assembly.
    """
    week_index, slot = session.current
    current = pathway.video_at(week_index, slot)
    current_transcript = transcripts(current.video_id)
    transcript_text = truncate_words(
        current_transcript.full_text(), TRANSCRIPT_BUDGET_CHARS
    )

    listing: list[str] = []
    n = 0
    for week in pathway.weeks:
        for s, video in enumerate(week.videos, start=1):
            n += 1
            entry = f'{n}. "{video.title}" ({week.concept})'
            if (week.week_index, s) == session.current:
                entry += " [CURRENT VIDEO]"
            listing.append(entry)

    detail_blocks: tuple[DetailBlock, ...] = ()
    if qclass is QuestionClass.B_PATHWAY:
        blocks = []
        for week in pathway.weeks:
            for video in week.videos:
                transcript = transcripts(video.video_id)
                blocks.append(
                    DetailBlock(
                        title=video.title,
                        concept=week.concept,
                        description=video.description,
                        excerpt=snippet(transcript, EXCERPT_BUDGET_CHARS),
                    )
                )
        detail_blocks = tuple(blocks)

    return ContextBundle(
        type=qclass,
        topic=pathway.course_title,
        video_title=current.title,
        instructor=current.channel,
        completed=len(session.completed),
        total=len(pathway.positions()),
        transcript=transcript_text,
        listing=tuple(listing),
        detail_blocks=detail_blocks,
        history=session.chat_history[-HISTORY_BUDGET_MESSAGES:],
    )
