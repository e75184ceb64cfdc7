from __future__ import annotations

import re

import pytest
from hypothesis import given, settings, strategies as st

from pathlearn.engine.dedup import dedup_overlap, jaccard, token_set
from pathlearn.engine.ranking import rank_score
from pathlearn.models import VideoCandidate


def _candidate(video_id, title, tags=(), views=0, transcript=False):
    return VideoCandidate(
        video_id=video_id,
        title=title,
        channel="c",
        duration_s=900,
        tags=tuple(tags),
        view_count=views,
        has_transcript=transcript,
    )


def brute_force_dedup(candidates, threshold):
    """Independent oracle: O(n^2) pairwise Jaccard over rank-ordered
    candidates, written before the implementation was exercised."""

    def toks(c):
        return frozenset(re.findall(r"[a-z0-9]+", " ".join([c.title, *c.tags]).lower()))

    def jac(a, b):
        if not a or not b:
            return 0.0
        return len(a & b) / len(a | b)

    ordered = sorted(candidates, key=lambda c: (-rank_score(c), c.video_id))
    kept = []
    for c in ordered:
        if all(jac(toks(c), toks(k)) < threshold for k in kept):
            kept.append(c)
    kept_ids = {c.video_id for c in kept}
    return [c for c in candidates if c.video_id in kept_ids]


def test_identical_titles_keep_higher_score():
    a = _candidate("a", "Graph Theory Basics Lecture", views=10)
    b = _candidate("b", "Graph Theory Basics Lecture", views=100000)
    survivors = dedup_overlap([a, b], 0.6)
    assert [c.video_id for c in survivors] == ["b"]


def test_disjoint_titles_all_survive():
    a = _candidate("a", "Sorting algorithms explained")
    b = _candidate("b", "French bread baking guide")
    assert dedup_overlap([a, b], 0.6) == [a, b]


def test_order_preserves_input_order_of_survivors():
    cands = [
        _candidate("z", "unique alpha topic"),
        _candidate("m", "unique beta topic"),
        _candidate("a", "unique gamma topic"),
    ]
    assert [c.video_id for c in dedup_overlap(cands, 0.6)] == ["z", "m", "a"]


def test_dropped_duplicate_cannot_knock_out_a_third():
    # a (top rank) ~ b, b ~ c, but a !~ c: b drops, c must survive.
    a = _candidate("a", "alpha beta gamma delta", views=1000)
    b = _candidate("b", "alpha beta gamma epsilon zeta", views=10)
    c = _candidate("c", "delta epsilon zeta eta theta iota", views=1)
    threshold = 0.2
    assert jaccard(token_set(a), token_set(b)) >= threshold
    assert jaccard(token_set(b), token_set(c)) >= threshold
    assert jaccard(token_set(a), token_set(c)) < threshold
    survivors = dedup_overlap([a, b, c], threshold)
    assert [x.video_id for x in survivors] == ["a", "c"]
    assert survivors == brute_force_dedup([a, b, c], threshold)


TWELVE = [
    _candidate("v01", "Shannon Weaver model of communication", ["models"], views=5000, transcript=True),
    _candidate("v02", "Shannon Weaver communication model explained", ["models"], views=100),
    _candidate("v03", "Berlo SMCR model communication", ["models"], views=4000),
    _candidate("v04", "Transactional model communication examples", ["models"], views=900),
    _candidate("v05", "Active listening skills workshop", ["listening"], views=8000),
    _candidate("v06", "Active listening skills workshop recording", ["listening"], views=70),
    _candidate("v07", "Nonverbal cues body language", ["nonverbal"], views=6100),
    _candidate("v08", "Semiotics signs signifier signified", ["semiotics"], views=12000, transcript=True),
    _candidate("v09", "Semiotics signifier signified introduction", ["semiotics"], views=400),
    _candidate("v10", "Agenda setting theory news", ["media"], views=9000),
    _candidate("v11", "Cultivation theory television reality", ["media"], views=3000),
    _candidate("v12", "Framing effects media coverage", ["media"], views=2800),
]

# Frozen from the oracle at threshold 0.6 when this test was first written.
TWELVE_SURVIVORS = ["v01", "v03", "v04", "v05", "v07", "v08", "v10", "v11", "v12"]


def test_twelve_candidate_fixture_matches_oracle():
    got = [c.video_id for c in dedup_overlap(TWELVE, 0.6)]
    oracle = [c.video_id for c in brute_force_dedup(TWELVE, 0.6)]
    assert got == oracle == TWELVE_SURVIVORS


@settings(max_examples=200, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.sampled_from(
                ["alpha beta", "alpha beta gamma", "delta epsilon", "zeta eta theta",
                 "alpha gamma delta", "beta gamma", "iota kappa", "kappa lambda mu"]
            ),
            st.integers(min_value=0, max_value=100000),
            st.booleans(),
        ),
        min_size=0,
        max_size=20,
    ),
    st.sampled_from([0.3, 0.5, 0.6, 0.8, 1.0]),
)
def test_matches_oracle_for_all_sets_up_to_20(rows, threshold):
    candidates = [
        _candidate(f"v{i:02d}", title, views=views, transcript=transcript)
        for i, (title, views, transcript) in enumerate(rows)
    ]
    got = [c.video_id for c in dedup_overlap(candidates, threshold)]
    oracle = [c.video_id for c in brute_force_dedup(candidates, threshold)]
    assert got == oracle


@pytest.mark.parametrize("bad", [0.0, -0.1, 1.5])
def test_threshold_domain(bad):
    with pytest.raises(ValueError):
        dedup_overlap([], bad)


def test_empty_token_sets_never_collide():
    a = _candidate("a", "", ())
    b = _candidate("b", "", ())
    assert jaccard(token_set(a), token_set(b)) == 0.0
    assert len(dedup_overlap([a, b], 0.6)) == 2
