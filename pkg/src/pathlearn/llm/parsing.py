"""Structured-reply extraction and schema validation, one kind at a time.

Fence/prose stripping is a single extraction pass; aggressive repair such as
bracket balancing is deliberately absent because it can silently accept a
corrupt plan.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Any, Mapping

from ..errors import ParseError
from ..models import ConceptCluster, ConceptMap, QuestionClass
from ..validation import label_violations
from .templates import PromptKind

_FENCE = re.compile(r"```[a-zA-Z0-9_-]*\s*\n(.*?)```", re.DOTALL)
_BULLET = re.compile(r"^\s*(?:[-*•–])\s+(.*\S)\s*$")


@dataclass(frozen=True)
class PlanVideo:
    candidate_index: int
    bloom_level: int
    bloom_verb: str
    requires_concept: str
    unlocks_concept: str
    zpd_rationale: str
    learning_objective: str
    why_selected: str
    dependency_explanation: str
    keywords: tuple[str, ...] = ()


@dataclass(frozen=True)
class PlanWeek:
    concept: str
    focus: str
    bloom_levels: tuple[int, ...]
    why_this_week_first: str
    videos: tuple[PlanVideo, ...]


@dataclass(frozen=True)
class PathwayPlan:
    course_title: str
    course_description: str
    bloom_progression: str
    learning_objectives: tuple[str, ...]
    weeks: tuple[PlanWeek, ...]


def extract_json(raw: str) -> Any:
    """Extract a single top-level JSON value from a raw reply.

    Tries, in order: the text as-is, the first fenced code block, then the
    slice between the first opening and last closing bracket.
    """
    text = raw.strip()
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        pass

    fenced = _FENCE.search(text)
    if fenced:
        try:
            return json.loads(fenced.group(1).strip())
        except json.JSONDecodeError:
            pass

    starts = [i for i in (text.find("{"), text.find("[")) if i != -1]
    if starts:
        start = min(starts)
        closer = "}" if text[start] == "{" else "]"
        end = text.rfind(closer)
        if end > start:
            try:
                return json.loads(text[start : end + 1])
            except json.JSONDecodeError:
                pass

    raise ParseError("NotJson: no parseable top-level JSON value found")


def _require(obj: Mapping[str, Any], key: str, typ: type | tuple, where: str) -> Any:
    if key not in obj:
        raise ParseError(f"MissingField: {where}.{key} is required")
    value = obj[key]
    if not isinstance(value, typ):
        raise ParseError(f"WrongType: {where}.{key} must be {typ}")
    return value


def _str_list(obj: Mapping[str, Any], key: str, where: str) -> tuple[str, ...]:
    value = _require(obj, key, list, where)
    if not all(isinstance(x, str) for x in value):
        raise ParseError(f"WrongType: {where}.{key} must be a list of strings")
    return tuple(value)


def _parse_concept_map(raw: str, params: Mapping[str, Any]) -> ConceptMap:
    data = extract_json(raw)
    if not isinstance(data, dict):
        raise ParseError("WrongType: concept map reply must be a JSON object")
    description = _require(data, "description", str, "$")
    concepts_raw = _require(data, "concepts", list, "$")
    clusters = []
    for i, entry in enumerate(concepts_raw):
        if not isinstance(entry, dict):
            raise ParseError(f"WrongType: concepts[{i}] must be an object")
        clusters.append(
            ConceptCluster(
                label=_require(entry, "label", str, f"concepts[{i}]"),
                description=_require(entry, "description", str, f"concepts[{i}]"),
            )
        )
    expected = params.get("numConcepts")
    if expected is not None and len(clusters) != int(expected):
        raise ParseError(
            f"CountMismatch: expected exactly {expected} concepts, got {len(clusters)}"
        )
    for i, cluster in enumerate(clusters):
        bad = label_violations(cluster.label, f"concepts[{i}].label")
        if bad:
            raise ParseError(f"{bad[0].code}: {bad[0].message}")
    return ConceptMap(description=description, concepts=tuple(clusters))


def _parse_plan_video(entry: Any, where: str) -> PlanVideo:
    if not isinstance(entry, dict):
        raise ParseError(f"WrongType: {where} must be an object")
    return PlanVideo(
        candidate_index=_require(entry, "candidate_index", int, where),
        bloom_level=_require(entry, "bloom_level", int, where),
        bloom_verb=_require(entry, "bloom_verb", str, where),
        requires_concept=_require(entry, "requires_concept", str, where),
        unlocks_concept=_require(entry, "unlocks_concept", str, where),
        zpd_rationale=_require(entry, "zpd_rationale", str, where),
        learning_objective=_require(entry, "learning_objective", str, where),
        why_selected=_require(entry, "why_selected", str, where),
        dependency_explanation=_require(entry, "dependency_explanation", str, where),
        keywords=_str_list(entry, "keywords", where),
    )


def _parse_pathway_plan(raw: str, params: Mapping[str, Any]) -> PathwayPlan | PlanVideo:
    data = extract_json(raw)
    if params.get("mode") == "single_slot":
        return _parse_plan_video(data, "$")
    if not isinstance(data, dict):
        raise ParseError("WrongType: plan reply must be a JSON object")
    weeks_raw = _require(data, "weeks", list, "$")
    weeks = []
    for i, entry in enumerate(weeks_raw):
        where = f"weeks[{i}]"
        if not isinstance(entry, dict):
            raise ParseError(f"WrongType: {where} must be an object")
        levels = _require(entry, "bloom_levels", list, where)
        if not all(isinstance(x, int) for x in levels):
            raise ParseError(f"WrongType: {where}.bloom_levels must be integers")
        videos_raw = _require(entry, "videos", list, where)
        videos = tuple(
            _parse_plan_video(v, f"{where}.videos[{j}]") for j, v in enumerate(videos_raw)
        )
        if len(videos) != 3:
            raise ParseError(
                f"VideoCountViolation: {where} has {len(videos)} videos, expected 3"
            )
        weeks.append(
            PlanWeek(
                concept=_require(entry, "concept", str, where),
                focus=_require(entry, "focus", str, where),
                bloom_levels=tuple(levels),
                why_this_week_first=_require(entry, "why_this_week_first", str, where),
                videos=videos,
            )
        )
    expected = params.get("numWeeks")
    if expected is not None and len(weeks) != int(expected):
        raise ParseError(
            f"WeekCountMismatch: expected {expected} weeks, got {len(weeks)}"
        )
    return PathwayPlan(
        course_title=_require(data, "course_title", str, "$"),
        course_description=_require(data, "course_description", str, "$"),
        bloom_progression=_require(data, "bloom_progression", str, "$"),
        learning_objectives=_str_list(data, "learning_objectives", "$"),
        weeks=tuple(weeks),
    )


def _parse_classify(raw: str) -> QuestionClass:
    text = raw.strip()
    if len(text) >= 2 and text[0] == text[-1] and text[0] in "'\"":
        text = text[1:-1].strip()
    text = text.rstrip(".")
    if text == "A":
        return QuestionClass.A_CURRENT_VIDEO
    if text == "B":
        return QuestionClass.B_PATHWAY
    raise ParseError(f"BadClassification: expected exactly 'A' or 'B', got {raw!r}")


def parse_bullets(raw: str) -> tuple[str, ...]:
    bullets = tuple(m.group(1) for m in map(_BULLET.match, raw.splitlines()) if m)
    if not bullets:
        raise ParseError("NoBullets: reply contains no bullet-marker lines")
    if not 2 <= len(bullets) <= 3:
        raise ParseError(f"BulletCount: expected 2-3 bullets, got {len(bullets)}")
    return bullets


def _parse_answer(raw: str) -> str:
    text = raw.strip()
    if not text:
        raise ParseError("EmptyAnswer: reply is empty")
    return text


def parse_structured(
    kind: PromptKind | str, raw: str, params: Mapping[str, Any] | None = None
) -> Any:
    """Validate ``raw`` against the schema for ``kind`` and return the payload.

    Admitted content is returned verbatim; nothing is rewritten. ``params``
    supplies request-side expectations (concept count, week count, plan mode).
    """
    kind = PromptKind(kind)
    params = params or {}
    if kind is PromptKind.CONCEPT_MAP:
        return _parse_concept_map(raw, params)
    if kind is PromptKind.PATHWAY_ORDER:
        return _parse_pathway_plan(raw, params)
    if kind is PromptKind.CLASSIFY:
        return _parse_classify(raw)
    if kind is PromptKind.ANSWER:
        return _parse_answer(raw)
    if kind in (PromptKind.NOTE_WITH_TRANSCRIPT, PromptKind.NOTE_FALLBACK):
        return parse_bullets(raw)
    raise ParseError(f"UnknownKind: {kind!r}")
