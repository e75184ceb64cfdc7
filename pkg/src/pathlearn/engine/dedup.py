"""Near-duplicate removal over title+tag token sets."""

from __future__ import annotations

import re

from ..models import VideoCandidate
from .ranking import rank_score

_TOKEN = re.compile(r"[a-z0-9]+")

DEFAULT_OVERLAP_THRESHOLD = 0.6


def token_set(candidate: VideoCandidate) -> frozenset[str]:
    text = " ".join([candidate.title, *candidate.tags]).lower()
    return frozenset(_TOKEN.findall(text))


def jaccard(a: frozenset[str], b: frozenset[str]) -> float:
    """Token-set Jaccard; empty-vs-anything counts as no overlap."""
    if not a or not b:
        return 0.0
    return len(a & b) / len(a | b)


def dedup_overlap(
    candidates: list[VideoCandidate], threshold: float = DEFAULT_OVERLAP_THRESHOLD
) -> list[VideoCandidate]:
    """Drop the lower-rank_score member of every pair at or above
    ``threshold`` similarity; survivors keep their input order.

    Conflicts are resolved rank-first: a candidate is dropped only when it
    collides with a surviving higher-ranked one, so a dropped duplicate
    cannot itself knock out a third candidate.
    """
    if not 0 < threshold <= 1:
        raise ValueError("threshold must be in (0, 1]")
    tokenized = {c.video_id: token_set(c) for c in candidates}
    by_rank = sorted(candidates, key=lambda c: (-rank_score(c), c.video_id))
    kept_ids: set[str] = set()
    for candidate in by_rank:
        mine = tokenized[candidate.video_id]
        if any(
            jaccard(mine, tokenized[kept]) >= threshold for kept in kept_ids
        ):
            continue
        kept_ids.add(candidate.video_id)
    return [c for c in candidates if c.video_id in kept_ids]
