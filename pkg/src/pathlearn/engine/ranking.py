"""Numeric pre-ranking and the two-pass duration filter."""

from __future__ import annotations

import math

from ..errors import PlanningError
from ..models import PlanningPreferences, VideoCandidate, VideoLength

PASS2_SURVIVOR_FLOOR = 6
WEEK_MINIMUM = 3


def rank_score(candidate: VideoCandidate) -> float:
    """log10(1 + views) + 2 for a transcript + 0.5 each for chapters/tags."""
    score = math.log10(1 + candidate.view_count)
    if candidate.has_transcript:
        score += 2.0
    if candidate.chapters:
        score += 0.5
    if candidate.tags:
        score += 0.5
    return score


def rank_order(candidates: list[VideoCandidate]) -> list[VideoCandidate]:
    """Descending rank_score; ties go to the lexicographically smaller id."""
    return sorted(candidates, key=lambda c: (-rank_score(c), c.video_id))


def duration_in_band(
    duration_s: float, video_length: VideoLength, widen: bool = False
) -> bool:
    """Band membership; ``widen`` scales finite edges by +/-50 percent while
    keeping each band's boundary strictness."""
    video_length = VideoLength(video_length)
    lo, hi = {
        VideoLength.SHORT: (0.0, 600.0),
        VideoLength.MEDIUM: (600.0, 1500.0),
        VideoLength.LONG: (1500.0, math.inf),
    }[video_length]
    if widen:
        lo = lo * 0.5
        hi = hi * 1.5 if math.isfinite(hi) else hi
    if video_length is VideoLength.SHORT:
        return 0 < duration_s < hi
    if video_length is VideoLength.MEDIUM:
        return lo <= duration_s <= hi
    return duration_s > lo


def filter_candidates(
    candidates: list[VideoCandidate],
    prefs: PlanningPreferences,
    min_required: int | None = None,
) -> list[VideoCandidate]:
    """Two-pass duration filter, result ordered by rank_score descending.

    Pass 1 keeps the preferred band; when fewer than PASS2_SURVIVOR_FLOOR
    survive, pass 2 re-filters with the band widened by 50 percent. The
    caller triggers fallback retrieval when even pass 2 stays under the
    floor; passing ``min_required`` (used after fallback) turns a shortfall
    into PlanningError(InsufficientCandidates).
    """
    survivors = [
        c for c in candidates if duration_in_band(c.duration_s, prefs.video_length)
    ]
    if len(survivors) < PASS2_SURVIVOR_FLOOR:
        survivors = [
            c
            for c in candidates
            if duration_in_band(c.duration_s, prefs.video_length, widen=True)
        ]
    if min_required is not None and len(survivors) < min_required:
        raise PlanningError(
            f"only {len(survivors)} candidates survive filtering, need {min_required}",
            code="InsufficientCandidates",
        )
    return rank_order(survivors)
