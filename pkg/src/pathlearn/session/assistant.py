"""Question classification, routing, and assistant replies."""

from __future__ import annotations

import logging

from ..errors import LlmExhausted
from ..llm.gateway import complete_validated
from ..llm.provider import LlmProvider
from ..llm.templates import PromptKind
from ..models import ChatMessage, LearnerSession, MessageRole, Pathway, QuestionClass
from .context import TranscriptSource, assemble_context
from .lifecycle import next_timestamp

log = logging.getLogger(__name__)

# The three quick-action buttons bypass the classifier: the first two live in
# the video pane (current-video scope), the third concerns progression.
QUICK_ACTIONS: dict[str, QuestionClass] = {
    "summarize": QuestionClass.A_CURRENT_VIDEO,
    "key concepts": QuestionClass.A_CURRENT_VIDEO,
    "what should i do next": QuestionClass.B_PATHWAY,
}


def _normalize_action(message: str) -> str:
    return message.strip().casefold().rstrip("?.!").strip()


def classify_message(
    message: str, provider: LlmProvider, max_attempts: int = 3
) -> QuestionClass:
    """Route a learner question; quick actions short-circuit the LLM and an
    exhausted classifier fails soft to the current video."""
    if not message.strip():
        raise ValueError("message must be non-empty")
    shortcut = QUICK_ACTIONS.get(_normalize_action(message))
    if shortcut is not None:
        return shortcut
    try:
        reply = complete_validated(
            provider, PromptKind.CLASSIFY, {"message": message}, max_attempts
        )
        return reply.payload
    except LlmExhausted:
        log.warning("classifier exhausted; defaulting to current-video context")
        return QuestionClass.A_CURRENT_VIDEO


def ask(
    session: LearnerSession,
    pathway: Pathway,
    message: str,
    provider: LlmProvider,
    transcripts: TranscriptSource,
    max_attempts: int = 3,
) -> tuple[str, LearnerSession]:
    """Classify, assemble context, answer, and append both turns to history.

    Provider failures propagate and leave the session untouched.
    """
    if not message.strip():
        raise ValueError("message must be non-empty")
    qclass = classify_message(message, provider, max_attempts)
    bundle = assemble_context(session, pathway, qclass, transcripts)
    reply = complete_validated(
        provider, PromptKind.ANSWER, bundle.to_params(message), max_attempts
    )
    answer_text: str = reply.payload

    asked_at = next_timestamp(session)
    learner_msg = ChatMessage(
        role=MessageRole.LEARNER,
        content=message,
        created_at=asked_at,
        classification=qclass,
    )
    interim = LearnerSession(
        session_id=session.session_id,
        pathway_id=session.pathway_id,
        current=session.current,
        completed=session.completed,
        chat_history=session.chat_history + (learner_msg,),
        notes=session.notes,
    )
    assistant_msg = ChatMessage(
        role=MessageRole.ASSISTANT,
        content=answer_text,
        created_at=next_timestamp(interim),
    )
    updated = LearnerSession(
        session_id=session.session_id,
        pathway_id=session.pathway_id,
        current=session.current,
        completed=session.completed,
        chat_history=interim.chat_history + (assistant_msg,),
        notes=session.notes,
    )
    return answer_text, updated
