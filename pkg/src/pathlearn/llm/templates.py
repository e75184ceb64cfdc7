"""Prompt templates and rendering.

Template text is frozen; placeholders use ``{{name}}`` and every placeholder
must be bound at render time. Two kinds select an internal variant from
params: ``answer`` (current-video vs pathway reply) and ``pathway_order``
(full plan vs single-slot revision).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from ..errors import TemplateError

_PLACEHOLDER = re.compile(r"\{\{(\w+)\}\}")


class PromptKind(str, Enum):
    CONCEPT_MAP = "concept_map"
    PATHWAY_ORDER = "pathway_order"
    CLASSIFY = "classify"
    ANSWER = "answer"
    NOTE_WITH_TRANSCRIPT = "note_with_transcript"
    NOTE_FALLBACK = "note_fallback"


@dataclass(frozen=True)
class PromptRequest:
    kind: PromptKind
    system_text: str
    user_text: str
    params: Mapping[str, object]

    def with_suffix(self, suffix: str) -> "PromptRequest":
        return PromptRequest(
            kind=self.kind,
            system_text=self.system_text,
            user_text=self.user_text + "\n\n" + suffix,
            params=self.params,
        )


CONCEPT_MAP_SYSTEM = "You are a curriculum designer. Return ONLY valid JSON, no markdown."

CONCEPT_MAP_USER = (
    'Topic: "{{topic}}".\n'
    "\n"
    'Return JSON exactly, include "description" as 1 sentence how this topic is '
    'structured, and "concepts" as a list of exactly {{numConcepts}} concepts, each '
    'with "label" as a 2-4 word name and "description" as 1 sentence what it covers. '
    'Use topic-specific labels, not generic like "Introduction". Order concepts from '
    "foundational to advanced (Bloom's Taxonomy)."
)

PATHWAY_ORDER_SYSTEM = (
    "You are a curriculum designer. You are given REAL YouTube videos grouped by "
    "concept. Each concept represents one week of study."
)

_PATHWAY_RULES = (
    "Critical rules: Use content-based selection ranked by signal strength: "
    "transcript_snippet (STRONGEST signal), chapters, tags, description, title, then "
    "quality metrics. The 3 videos in each week must form a coherent mini-sequence "
    "where each genuinely builds on the previous. The last video of week N must "
    "unlock a concept that the first video of week N+1 requires, and this must be a "
    "genuine prerequisite, not a vague topical connection. Explain what specific "
    "knowledge each week builds on and what it unlocks for the next. Never use the "
    "same video twice or select two videos that teach the same sub-topics."
)

PATHWAY_ORDER_USER = (
    'Topic: "{{topic}}". Learner experience level: {{experienceLevel}}.\n'
    "\n"
    "{{candidates}}\n"
    "\n"
    "Bloom progression: Week 1: Remember & Understand (levels 1-2). Week 2: "
    "Understand & Apply (levels 2-3). Week 3: Apply & Analyze (levels 3-4). Week 4+: "
    "Analyze, Evaluate & Create (levels 4-6). Bloom levels MUST increase across "
    "weeks. Within each week, videos also progress, slot 1 = lower, slot 3 = higher. "
    "The overall Bloom level should NEVER decrease.\n"
    "\n" + _PATHWAY_RULES + "\n"
    "\n"
    "Return STRICT JSON with: course_title, course_description, bloom_progression, "
    "learning_objectives, weeks[{concept, focus, bloom_levels, why_this_week_first}], "
    "videos[{candidate_index, bloom_level, bloom_verb, requires_concept, "
    "unlocks_concept, zpd_rationale, learning_objective, why_selected, "
    "dependency_explanation, keywords}]."
)

# Same F.2 rules restricted to one video, used when revising a single slot.
PATHWAY_SLOT_USER = (
    'Topic: "{{topic}}". Learner experience level: {{experienceLevel}}.\n'
    "\n"
    "You are revising one slot of an existing weekly pathway. Week {{weekIndex}}, "
    'slot {{slot}}, concept "{{concept}}". Describe the replacement video, candidate '
    "{{candidateIndex}} below. Assign a bloom_level between {{bloomMin}} and "
    '{{bloomMax}} so the overall Bloom level never decreases. It must require '
    '"{{requiresConcept}}" and unlock "{{unlocksConcept}}" so the dependency chain '
    "stays intact.\n"
    "\n"
    "{{candidates}}\n"
    "\n" + _PATHWAY_RULES + "\n"
    "\n"
    "Return STRICT JSON for the single video: {candidate_index, bloom_level, "
    "bloom_verb, requires_concept, unlocks_concept, zpd_rationale, "
    "learning_objective, why_selected, dependency_explanation, keywords}."
)

CLASSIFY_SYSTEM = (
    "Classify this student question into one category, A) about the CURRENT video "
    "content, concepts, explanations, details from what they are watching, or B) "
    "about the PATHWAY, other videos, what to watch next, comparisons, progression, "
    "recommendations, and connections between videos."
)

CLASSIFY_USER = 'Question: "{{message}}".\n\nRespond with just A or B.'

ANSWER_SYSTEM = (
    "You are a personal tutor. Be direct and concise. By default use plain short "
    "sentences, but if the user asks for bullet points, lists, formatting, or any "
    "specific structure, follow their request. Answer confidently based on the "
    'information provided. Never say "likely", "maybe", "probably", or "I think". '
    "If you have video metadata but no transcript, use the title, concept, and "
    "description to give a definitive answer."
)

_ANSWER_HEAD = (
    'Learning pathway: "{{topic}}". Currently watching: "{{video_title}}" by '
    "{{instructor}}. Progress: {{completed}}/{{total}} videos completed. Current "
    "video transcript: {{transcript}}. PATHWAY VIDEOS ({{total_videos}} total): "
    "{{pathway_listing}}\n"
    "\n"
    "IMPORTANT: When referencing videos, ONLY use exact titles from this list. "
    "Never invent or suggest videos outside this pathway.\n"
    "\n"
)

ANSWER_A_USER = (
    _ANSWER_HEAD
    + "Conversation so far: {{history}}. Student: {{message}}.\n"
    + "Tutor (reply concisely in 2-4 sentences):"
)

ANSWER_B_USER = (
    _ANSWER_HEAD
    + "DETAILED VIDEO CONTEXT: {{detail_context}}\n"
    + "\n"
    + "Conversation so far: {{history}}. Student: {{message}}.\n"
    + "Tutor (reference specific videos from the pathway by their exact title):"
)

NOTE_WITH_TRANSCRIPT_SYSTEM = (
    "You are a study note assistant. Generate notes based ONLY on the transcript "
    "content provided. Return 2-3 bullet points starting with bullet markers. Each "
    "bullet must reference specific ideas, terms, or examples from the transcript. "
    "Never repeat ideas from previous notes. No headers, no markdown."
)

NOTE_WITH_TRANSCRIPT_USER = (
    'Video: "{{title}}". Topic: {{main_concept}}. Key terms: {{keywords}}. Learning '
    'goal: {{learning_objective}}. Transcript around {{timestamp}}: '
    '"{{transcript_window}}". Student paused at {{timestamp}}.\n'
    "\n"
    "Previous notes: {{previous_notes}}\n"
    "\n"
    "Write NEW points about what is being discussed at {{timestamp}} that are "
    "DIFFERENT from the notes above."
)

NOTE_FALLBACK_SYSTEM = (
    "You are a study note assistant. Generate notes about what is being taught at "
    "this point in the video. Return 2-3 bullet points starting with bullet markers. "
    "Each bullet should be one concise sentence. Never repeat ideas from previous "
    "notes. No headers, no markdown."
)

NOTE_FALLBACK_USER = (
    'Video: "{{title}}". Topic: {{main_concept}}. Key terms: {{keywords}}. Learning '
    "goal: {{learning_objective}}. Student paused at {{timestamp}}.\n"
    "\n"
    "Previous notes: {{previous_notes}}\n"
    "\n"
    "Write NEW points about what is being discussed at {{timestamp}} that are "
    "DIFFERENT from the notes above."
)


def _select_template(kind: PromptKind, params: Mapping[str, object]) -> tuple[str, str]:
    if kind is PromptKind.CONCEPT_MAP:
        return CONCEPT_MAP_SYSTEM, CONCEPT_MAP_USER
    if kind is PromptKind.PATHWAY_ORDER:
        if params.get("mode") == "single_slot":
            return PATHWAY_ORDER_SYSTEM, PATHWAY_SLOT_USER
        return PATHWAY_ORDER_SYSTEM, PATHWAY_ORDER_USER
    if kind is PromptKind.CLASSIFY:
        return CLASSIFY_SYSTEM, CLASSIFY_USER
    if kind is PromptKind.ANSWER:
        variant = params.get("type")
        if variant == "B":
            return ANSWER_SYSTEM, ANSWER_B_USER
        if variant == "A":
            return ANSWER_SYSTEM, ANSWER_A_USER
        raise TemplateError("answer prompt needs params['type'] of 'A' or 'B'")
    if kind is PromptKind.NOTE_WITH_TRANSCRIPT:
        return NOTE_WITH_TRANSCRIPT_SYSTEM, NOTE_WITH_TRANSCRIPT_USER
    if kind is PromptKind.NOTE_FALLBACK:
        return NOTE_FALLBACK_SYSTEM, NOTE_FALLBACK_USER
    raise TemplateError(f"unknown prompt kind {kind!r}")


def placeholders(template: str) -> set[str]:
    return set(_PLACEHOLDER.findall(template))


def _substitute(template: str, params: Mapping[str, object]) -> str:
    missing = placeholders(template) - set(params)
    if missing:
        raise TemplateError(f"missing placeholder bindings: {sorted(missing)}")
    return _PLACEHOLDER.sub(lambda m: str(params[m.group(1)]), template)


def render(kind: PromptKind | str, params: Mapping[str, object]) -> PromptRequest:
    """Render the template for ``kind``, substituting every placeholder.

    Substitution is a single pass, so placeholder-like text inside bound
    values is never re-expanded.
    """
    kind = PromptKind(kind)
    system_template, user_template = _select_template(kind, params)
    return PromptRequest(
        kind=kind,
        system_text=_substitute(system_template, params),
        user_text=_substitute(user_template, params),
        params=dict(params),
    )
