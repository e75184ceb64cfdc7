from __future__ import annotations

import pytest

from pathlearn.errors import InvalidPosition
from pathlearn.ingest.transcripts import TranscriptCache
from pathlearn.session.lifecycle import mark_completed, new_session, warm_cache


def test_new_session_starts_at_one_one(oracle_pathway):
    session = new_session(oracle_pathway)
    assert session.current == (1, 1)
    assert session.completed == frozenset()
    assert session.chat_history == () and session.notes == ()
    assert session.pathway_id == oracle_pathway.pathway_id


def test_mark_first_advances_to_next_slot(oracle_pathway):
    session = new_session(oracle_pathway)
    session = mark_completed(session, oracle_pathway, 1, 1)
    assert session.current == (1, 2)
    assert session.completed == {(1, 1)}


def test_mark_all_fifteen_stays_on_last(oracle_pathway):
    session = new_session(oracle_pathway)
    for week, slot in oracle_pathway.positions():
        session = mark_completed(session, oracle_pathway, week, slot)
    assert session.current == (5, 3)
    assert len(session.completed) == 15


def test_marking_is_idempotent(oracle_pathway):
    session = new_session(oracle_pathway)
    once = mark_completed(session, oracle_pathway, 1, 1)
    twice = mark_completed(once, oracle_pathway, 1, 1)
    assert once == twice


def test_completed_set_only_grows_and_cursor_never_goes_back(oracle_pathway):
    session = new_session(oracle_pathway)
    seen = set()
    order = [(1, 1), (2, 3), (1, 2), (3, 1), (1, 3), (2, 1), (2, 2)]
    previous_flat = 0
    for week, slot in order:
        session = mark_completed(session, oracle_pathway, week, slot)
        assert seen <= session.completed
        seen = set(session.completed)
        flat = oracle_pathway.positions().index(session.current)
        assert flat >= previous_flat
        previous_flat = flat


def test_skipping_ahead_keeps_cursor_on_first_gap(oracle_pathway):
    session = new_session(oracle_pathway)
    session = mark_completed(session, oracle_pathway, 2, 2)
    assert session.current == (1, 1)


@pytest.mark.parametrize("week,slot", [(0, 1), (9, 1), (1, 0), (1, 9)])
def test_invalid_positions_rejected(oracle_pathway, week, slot):
    session = new_session(oracle_pathway)
    with pytest.raises(InvalidPosition):
        mark_completed(session, oracle_pathway, week, slot)


def test_prefetch_warms_every_pathway_video(planned, backend):
    pathway, _, _, _ = planned
    cache = TranscriptCache()
    touched = warm_cache(pathway, backend, cache)
    assert touched == 15
    for video in pathway.videos():
        assert video.video_id in cache
