from .assistant import QUICK_ACTIONS, ask, classify_message
from .context import ContextBundle, DetailBlock, assemble_context
from .lifecycle import advance_position, mark_completed, new_session, warm_cache
from .notes import (
    NOTE_SIMILARITY_THRESHOLD,
    add_manual_note,
    filter_repetitive,
    generate_ai_note,
    normalize_for_trigrams,
    trigram_jaccard,
    trigrams,
)

__all__ = [
    "ContextBundle",
    "DetailBlock",
    "NOTE_SIMILARITY_THRESHOLD",
    "QUICK_ACTIONS",
    "add_manual_note",
    "advance_position",
    "ask",
    "assemble_context",
    "classify_message",
    "filter_repetitive",
    "generate_ai_note",
    "mark_completed",
    "new_session",
    "normalize_for_trigrams",
    "trigram_jaccard",
    "trigrams",
    "warm_cache",
]
