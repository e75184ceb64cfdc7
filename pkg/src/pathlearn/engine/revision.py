"""Targeted pathway revision: replace or remove a single video slot.

Revisions are copy-on-write; every other slot stays byte-identical and the
result must pass the full pathway validator.
"""

from __future__ import annotations

from ..errors import InvalidPosition, LlmExhausted, PlanningError, RevisionError
from ..llm.gateway import complete_validated
from ..llm.parsing import PlanVideo
from ..llm.provider import LlmProvider
from ..llm.templates import PromptKind
from ..models import (
    ConceptMap,
    Pathway,
    PathwayVideo,
    PlanningPreferences,
    VideoCandidate,
    Week,
)
from ..validation import bloom_range_for_week, flatten_bloom, validate_pathway
from ..fmt import format_timestamp
from .planner import CandidatePool


def _check_position(pathway: Pathway, week_index: int, slot: int) -> None:
    if not 1 <= week_index <= len(pathway.weeks):
        raise InvalidPosition(f"week {week_index} outside 1..{len(pathway.weeks)}")
    if not 1 <= slot <= len(pathway.weeks[week_index - 1].videos):
        raise InvalidPosition(f"slot {slot} outside week {week_index}")


def _slot_bloom_bounds(pathway: Pathway, week_index: int, slot: int) -> tuple[int, int]:
    """Admissible Bloom interval for a slot: the week's range narrowed by the
    flattened neighbours so monotonicity survives the swap."""
    allowed = bloom_range_for_week(week_index)
    levels = flatten_bloom(pathway)
    flat_index = (week_index - 1) * 3 + (slot - 1)
    lo, hi = min(allowed), max(allowed)
    if flat_index > 0:
        lo = max(lo, levels[flat_index - 1])
    if flat_index < len(levels) - 1:
        hi = min(hi, levels[flat_index + 1])
    return lo, hi


def _serialize_single(candidate: VideoCandidate, index: int) -> str:
    parts = [
        f'[{index}] "{candidate.title}" by {candidate.channel} '
        f"({format_timestamp(candidate.duration_s)})",
        f"views: {candidate.view_count}",
        f'snippet: "{candidate.transcript_snippet}"'
        if candidate.transcript_snippet
        else "snippet: none",
        f"tags: {', '.join(candidate.tags)}" if candidate.tags else "tags: none",
    ]
    return " | ".join(parts)


def replace_video(
    pathway: Pathway,
    concept_map: ConceptMap,
    prefs: PlanningPreferences,
    week_index: int,
    slot: int,
    pool: CandidatePool,
    exclusions: frozenset[str] | set[str],
    provider: LlmProvider,
    max_attempts: int = 3,
) -> Pathway:
    """Swap in the best unused candidate for one slot, re-deriving its
    per-video fields through a single-slot ordering call."""
    _check_position(pathway, week_index, slot)
    week = pathway.weeks[week_index - 1]
    old = week.videos[slot - 1]
    used = {v.video_id for v in pathway.videos()}
    blocked = used | set(exclusions)

    shortlist = pool.for_concept(week_index - 1)
    chosen_index = next(
        (i for i, c in enumerate(shortlist) if c.video_id not in blocked), None
    )
    if chosen_index is None:
        raise RevisionError(
            f"no unused candidate left for week {week_index}", code="NoReplacement"
        )
    chosen = shortlist[chosen_index]

    bloom_min, bloom_max = _slot_bloom_bounds(pathway, week_index, slot)
    params = {
        "mode": "single_slot",
        "topic": prefs.topic,
        "experienceLevel": prefs.experience_level.value,
        "weekIndex": week_index,
        "slot": slot,
        "concept": week.concept,
        "candidateIndex": chosen_index,
        "bloomMin": bloom_min,
        "bloomMax": bloom_max,
        "requiresConcept": old.requires_concept,
        "unlocksConcept": old.unlocks_concept,
        "candidates": _serialize_single(chosen, chosen_index),
    }
    try:
        reply = complete_validated(provider, PromptKind.PATHWAY_ORDER, params, max_attempts)
    except LlmExhausted as exc:
        raise RevisionError(str(exc), code="LlmExhausted") from exc
    plan_video: PlanVideo = reply.payload
    if plan_video.candidate_index != chosen_index:
        raise PlanningError(
            f"single-slot reply describes candidate {plan_video.candidate_index}, "
            f"expected {chosen_index}",
            code="BadIndex",
        )

    replacement = PathwayVideo(
        video_id=chosen.video_id,
        title=chosen.title,
        channel=chosen.channel,
        duration_s=chosen.duration_s,
        description=chosen.description,
        bloom_level=plan_video.bloom_level,
        bloom_verb=plan_video.bloom_verb,
        requires_concept=plan_video.requires_concept,
        unlocks_concept=plan_video.unlocks_concept,
        zpd_rationale=plan_video.zpd_rationale,
        learning_objective=plan_video.learning_objective,
        why_selected=plan_video.why_selected,
        dependency_explanation=plan_video.dependency_explanation,
        keywords=plan_video.keywords,
    )
    videos = list(week.videos)
    videos[slot - 1] = replacement
    new_week = Week(
        week_index=week.week_index,
        concept=week.concept,
        focus=week.focus,
        bloom_levels=week.bloom_levels,
        why_this_week_first=week.why_this_week_first,
        videos=tuple(videos),
    )
    weeks = list(pathway.weeks)
    weeks[week_index - 1] = new_week
    revised = Pathway(
        pathway_id=pathway.pathway_id,
        course_title=pathway.course_title,
        course_description=pathway.course_description,
        bloom_progression=pathway.bloom_progression,
        learning_objectives=pathway.learning_objectives,
        weeks=tuple(weeks),
    )
    report = validate_pathway(revised, concept_map)
    if not report.ok:
        raise RevisionError(
            f"revision breaks the pathway: {report.violations[0].message}",
            code="InvalidRevision",
        )
    return revised


def remove_video(
    pathway: Pathway,
    concept_map: ConceptMap,
    prefs: PlanningPreferences,
    week_index: int,
    slot: int,
    pool: CandidatePool,
    provider: LlmProvider,
    exclusions: frozenset[str] | set[str] = frozenset(),
    max_attempts: int = 3,
) -> Pathway:
    """Remove = replace with the removed id permanently excluded; weeks keep
    exactly 3 videos."""
    _check_position(pathway, week_index, slot)
    removed = pathway.video_at(week_index, slot).video_id
    return replace_video(
        pathway,
        concept_map,
        prefs,
        week_index,
        slot,
        pool,
        set(exclusions) | {removed},
        provider,
        max_attempts=max_attempts,
    )
