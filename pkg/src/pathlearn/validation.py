"""Structural validators and Bloom-taxonomy week rules.

Validators never raise on bad data: violations are returned as values so a
review surface can display them. Each violation is (code, path, message).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidWeek
from .models import (
    BANNED_GENERIC_LABELS,
    VIDEOS_PER_WEEK,
    ConceptMap,
    Pathway,
    PlanningPreferences,
)


@dataclass(frozen=True)
class Violation:
    code: str
    path: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}

    def __bool__(self) -> bool:
        return self.ok


def bloom_range_for_week(week_index: int) -> frozenset[int]:
    """Allowed Bloom levels for a 1-based week: 1 -> {1,2}, 2 -> {2,3},
    3 -> {3,4}, 4+ -> {4,5,6}."""
    if week_index < 1:
        raise InvalidWeek(f"week_index must be >= 1, got {week_index}")
    if week_index == 1:
        return frozenset({1, 2})
    if week_index == 2:
        return frozenset({2, 3})
    if week_index == 3:
        return frozenset({3, 4})
    return frozenset({4, 5, 6})


def label_violations(label: str, path: str) -> list[Violation]:
    found = []
    if label.strip().lower() in BANNED_GENERIC_LABELS:
        found.append(Violation("GenericLabel", path, f"label {label!r} is a banned generic placeholder"))
    words = label.split()
    if len(words) < 2:
        found.append(Violation("LabelTooShort", path, f"label {label!r} has fewer than 2 words"))
    elif len(words) > 4:
        found.append(Violation("LabelTooLong", path, f"label {label!r} has more than 4 words"))
    return found


def validate_concept_map(concept_map: ConceptMap, prefs: PlanningPreferences) -> ValidationReport:
    """Check a concept map against the requested preferences.

    Foundational-to-advanced ordering is not locally checkable and is not
    validated here.
    """
    violations: list[Violation] = []
    n = len(concept_map.concepts)
    if n != prefs.num_concepts:
        violations.append(
            Violation(
                "CountMismatch",
                "concepts",
                f"expected exactly {prefs.num_concepts} concepts, got {n}",
            )
        )
    for i, cluster in enumerate(concept_map.concepts):
        violations.extend(label_violations(cluster.label, f"concepts[{i}].label"))
    return ValidationReport(tuple(violations))


def flatten_bloom(pathway: Pathway) -> list[int]:
    """Bloom level of every video in week order, slot order."""
    return [v.bloom_level for w in pathway.weeks for v in w.videos]


def _chain_key(concept: str) -> str:
    return concept.strip().lower()


RATIONALE_FIELDS = ("zpd_rationale", "why_selected", "dependency_explanation")


def validate_pathway(pathway: Pathway, concept_map: ConceptMap) -> ValidationReport:
    """Run every structural pathway check in order and report all violations.

    Order: week count/concepts vs map, 3 videos per week, per-week Bloom
    range, flattened Bloom monotonicity, video_id uniqueness, adjacent-week
    dependency chain, non-empty rationale fields.
    """
    violations: list[Violation] = []
    weeks = pathway.weeks

    if len(weeks) != len(concept_map.concepts):
        violations.append(
            Violation(
                "WeekCountMismatch",
                "weeks",
                f"pathway has {len(weeks)} weeks for {len(concept_map.concepts)} concepts",
            )
        )
    for i, week in enumerate(weeks):
        if i < len(concept_map.concepts):
            expected = concept_map.concepts[i].label
            if _chain_key(week.concept) != _chain_key(expected):
                violations.append(
                    Violation(
                        "ConceptMismatch",
                        f"weeks[{i}].concept",
                        f"week {week.week_index} covers {week.concept!r}, map says {expected!r}",
                    )
                )

    for i, week in enumerate(weeks):
        if len(week.videos) != VIDEOS_PER_WEEK:
            violations.append(
                Violation(
                    "VideoCountViolation",
                    f"weeks[{i}].videos",
                    f"week {week.week_index} has {len(week.videos)} videos, expected {VIDEOS_PER_WEEK}",
                )
            )

    for i, week in enumerate(weeks):
        allowed = bloom_range_for_week(week.week_index)
        for j, video in enumerate(week.videos):
            if video.bloom_level not in allowed:
                violations.append(
                    Violation(
                        "BloomRangeViolation",
                        f"weeks[{i}].videos[{j}].bloom_level",
                        f"level {video.bloom_level} outside {sorted(allowed)} for week {week.week_index}",
                    )
                )

    levels = flatten_bloom(pathway)
    if any(b < a for a, b in zip(levels, levels[1:])):
        violations.append(
            Violation(
                "BloomNotMonotone",
                "weeks",
                f"flattened Bloom sequence decreases: {levels}",
            )
        )

    seen: dict[str, str] = {}
    for i, week in enumerate(weeks):
        for j, video in enumerate(week.videos):
            path = f"weeks[{i}].videos[{j}]"
            if video.video_id in seen:
                violations.append(
                    Violation(
                        "DuplicateVideo",
                        path,
                        f"video {video.video_id!r} already used at {seen[video.video_id]}",
                    )
                )
            else:
                seen[video.video_id] = path

    for i in range(len(weeks) - 1):
        cur, nxt = weeks[i], weeks[i + 1]
        if not cur.videos or not nxt.videos:
            continue
        unlocks = cur.videos[-1].unlocks_concept
        requires = nxt.videos[0].requires_concept
        if _chain_key(unlocks) != _chain_key(requires):
            violations.append(
                Violation(
                    "DependencyBroken",
                    f"weeks[{i}]->weeks[{i + 1}]",
                    f"week {cur.week_index} unlocks {unlocks!r} but week {nxt.week_index} requires {requires!r}",
                )
            )

    for i, week in enumerate(weeks):
        for j, video in enumerate(week.videos):
            for name in RATIONALE_FIELDS:
                if not getattr(video, name).strip():
                    violations.append(
                        Violation(
                            "EmptyRationale",
                            f"weeks[{i}].videos[{j}].{name}",
                            f"{name} must be non-empty",
                        )
                    )

    return ValidationReport(tuple(violations))
