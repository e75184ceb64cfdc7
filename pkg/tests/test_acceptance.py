"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Everything runs at desk scale against the deterministic mock provider and
the fixture corpus; run with ``pytest tests/test_acceptance.py -v -s``.
"""

from __future__ import annotations

import json
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from datetime import datetime, timedelta, timezone
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from pathlearn.engine.dedup import dedup_overlap
from pathlearn.engine.planner import build_pathway, generate_concept_map
from pathlearn.engine.revision import replace_video
from pathlearn.errors import LlmExhausted, NoteRedundant, PlanningError
from pathlearn.ingest.corpus import Transcript
from pathlearn.ingest.transcripts import window
from pathlearn.llm.gateway import complete_validated
from pathlearn.llm.mock import MockProvider, ScriptedProvider, write_fixture
from pathlearn.llm.templates import PromptKind
from pathlearn.models import (
    ChatMessage,
    ConceptMap,
    LearnerSession,
    MessageRole,
    Note,
    Pathway,
    QuestionClass,
    VideoCandidate,
)
from pathlearn.service.app import create_app
from pathlearn.service.config import AppConfig
from pathlearn.service.storage import Store
from pathlearn.session.assistant import classify_message
from pathlearn.session.context import assemble_context
from pathlearn.session.lifecycle import new_session
from pathlearn.session.notes import filter_repetitive, generate_ai_note, trigram_jaccard
from pathlearn.validation import validate_pathway

from conftest import CORPUS_PATH, LLM_FIXTURES, make_transcript
from test_dedup import brute_force_dedup

REPO = Path(__file__).resolve().parent.parent


@contextmanager
def criterion(number: int, label: str):
    try:
        yield
    except BaseException:
        print(f"[acceptance] C{number} {label}: FAIL")
        raise
    print(f"[acceptance] C{number} {label}: PASS")


# -- C1 ---------------------------------------------------------------------

def test_c1_end_to_end_planning_determinism(tmp_path):
    with criterion(1, "end-to-end planning determinism"):
        outputs = []
        for run in (1, 2):
            out = tmp_path / f"pathway-{run}.json"
            started = time.perf_counter()
            proc = subprocess.run(
                [
                    sys.executable, "-m", "pathlearn.cli", "plan",
                    "--topic", "communication theory",
                    "--concepts", "5",
                    "--length", "medium",
                    "--level", "beginner",
                    "--corpus", str(CORPUS_PATH),
                    "--mock-llm", str(LLM_FIXTURES),
                    "--out", str(out),
                ],
                capture_output=True,
                text=True,
                cwd=REPO,
            )
            elapsed = time.perf_counter() - started
            assert proc.returncode == 0, proc.stderr
            assert elapsed < 5.0, f"run {run} took {elapsed:.2f}s"
            outputs.append(out.read_bytes())

        assert outputs[0] == outputs[1], "pathway documents differ between runs"

        doc = json.loads(outputs[0])
        pathway = Pathway.from_dict(doc)
        concept_map = ConceptMap.from_dict(
            json.loads((LLM_FIXTURES / "concept_map__default.txt").read_text())
        )
        report = validate_pathway(pathway, concept_map)
        assert report.ok, report.violations
        assert len(pathway.weeks) == 5
        assert all(len(w.videos) == 3 for w in pathway.weeks)
        ids = [v.video_id for v in pathway.videos()]
        assert len(set(ids)) == 15


# -- C2 ---------------------------------------------------------------------

VALID_MAP_JSON = (LLM_FIXTURES / "concept_map__default.txt").read_text()
VALID_PLAN_JSON = (LLM_FIXTURES / "pathway_order__default.txt").read_text()


def _broken_plan(week: int, video: int, field: str, value):
    doc = json.loads(VALID_PLAN_JSON)
    doc["weeks"][week]["videos"][video][field] = value
    return json.dumps(doc)


def test_c2_schema_robustness(prefs, planned):
    _pathway, concept_map, pool, _trace = planned
    params = {"topic": prefs.topic, "numConcepts": 5}

    with criterion(2, "schema robustness over malformed replies"):
        # 1. fenced JSON recovers without a retry
        provider = ScriptedProvider(["```json\n" + VALID_MAP_JSON + "\n```"])
        reply = complete_validated(provider, PromptKind.CONCEPT_MAP, params)
        assert reply.attempts == 1

        # 2. leading prose around the JSON recovers
        provider = ScriptedProvider(["Sure!\n" + VALID_MAP_JSON + "\nEnjoy."])
        assert complete_validated(provider, PromptKind.CONCEPT_MAP, params).attempts == 1

        # 3. wrong concept count, then valid
        short = json.loads(VALID_MAP_JSON)
        short["concepts"] = short["concepts"][:4]
        provider = ScriptedProvider([json.dumps(short), VALID_MAP_JSON])
        assert complete_validated(provider, PromptKind.CONCEPT_MAP, params).attempts == 2

        # 4. missing field, then valid
        provider = ScriptedProvider(['{"description": "d"}', VALID_MAP_JSON])
        assert complete_validated(provider, PromptKind.CONCEPT_MAP, params).attempts == 2

        # 5. persistent prose exhausts after exactly max_attempts calls
        provider = ScriptedProvider(["just prose"])
        with pytest.raises(LlmExhausted):
            complete_validated(provider, PromptKind.CONCEPT_MAP, params, max_attempts=3)
        assert len(provider.calls) == 3

        # 6. persistent generic label surfaces as PlanningError via the engine
        generic = json.loads(VALID_MAP_JSON)
        generic["concepts"][0]["label"] = "Introduction"
        provider = ScriptedProvider([json.dumps(generic)])
        with pytest.raises(PlanningError) as err:
            generate_concept_map(prefs, provider)
        assert err.value.code == "LlmExhausted"
        assert len(provider.calls) == 3

        # 7. bad candidate_index is a documented error, one ordering call
        provider = ScriptedProvider([_broken_plan(0, 0, "candidate_index", 99)])
        with pytest.raises(PlanningError) as err:
            build_pathway(prefs, concept_map, pool, provider)
        assert err.value.code == "BadIndex"

        # 8. persistent Bloom violation: InvalidPlan after exactly 2 ordering calls
        provider = ScriptedProvider([_broken_plan(1, 0, "bloom_level", 1)])
        with pytest.raises(PlanningError) as err:
            build_pathway(prefs, concept_map, pool, provider)
        assert err.value.code == "InvalidPlan"
        assert len(provider.calls) == 2

        # 9. plan missing a field, then valid: retry recovery
        broken = json.loads(VALID_PLAN_JSON)
        del broken["weeks"][0]["videos"][0]["zpd_rationale"]
        provider = ScriptedProvider([json.dumps(broken), VALID_PLAN_JSON])
        pathway, _ = build_pathway(prefs, concept_map, pool, provider)
        assert validate_pathway(pathway, concept_map).ok

        # 10. wrong week count, then valid
        four = json.loads(VALID_PLAN_JSON)
        four["weeks"] = four["weeks"][:4]
        provider = ScriptedProvider([json.dumps(four), VALID_PLAN_JSON])
        pathway, _ = build_pathway(prefs, concept_map, pool, provider)
        assert len(pathway.weeks) == 5

        # 11. two-video week, then valid
        thin = json.loads(VALID_PLAN_JSON)
        thin["weeks"][2]["videos"] = thin["weeks"][2]["videos"][:2]
        provider = ScriptedProvider([json.dumps(thin), VALID_PLAN_JSON])
        pathway, _ = build_pathway(prefs, concept_map, pool, provider)
        assert len(pathway.weeks[2].videos) == 3

        # 12. garbage classification fails soft to A after exactly 3 calls
        provider = ScriptedProvider(["maybe A maybe B"])
        assert classify_message("free-form question", provider) is QuestionClass.A_CURRENT_VIDEO
        assert len(provider.calls) == 3

        # 13. one-bullet note reply, then a valid one
        provider = ScriptedProvider(["- lonely", "- one\n- two"])
        reply = complete_validated(
            provider, PromptKind.NOTE_FALLBACK,
            {"title": "t", "main_concept": "c", "keywords": "k",
             "learning_objective": "o", "timestamp": "1:35", "previous_notes": "(none)"},
        )
        assert reply.attempts == 2 and len(reply.payload) == 2


# -- C3 ---------------------------------------------------------------------

def test_c3_context_budgets_over_randomized_inputs(oracle_pathway):
    rng = random.Random(20260809)
    t0 = datetime(2025, 1, 1, tzinfo=timezone.utc)
    video_ids = [v.video_id for v in oracle_pathway.videos()]

    with criterion(3, "context budgets over 1000 randomized inputs"):
        for iteration in range(1000):
            transcripts = {}
            for vid in video_ids:
                n_segments = rng.randrange(0, 40)
                texts = [
                    f"XS{vid}X token{rng.randrange(10_000)} " * rng.randrange(1, 5)
                    for _ in range(n_segments)
                ]
                transcripts[vid] = make_transcript(vid, texts)

            n_messages = rng.randrange(0, 15)
            history = tuple(
                ChatMessage(
                    role=MessageRole.LEARNER if i % 2 == 0 else MessageRole.ASSISTANT,
                    content=f"m{i}",
                    created_at=t0 + timedelta(seconds=i),
                )
                for i in range(n_messages)
            )
            position = rng.choice(oracle_pathway.positions())
            session = LearnerSession(
                session_id="s",
                pathway_id=oracle_pathway.pathway_id,
                current=position,
                chat_history=history,
            )
            qclass = rng.choice(
                [QuestionClass.A_CURRENT_VIDEO, QuestionClass.B_PATHWAY]
            )
            bundle = assemble_context(
                session, oracle_pathway, qclass,
                lambda vid: transcripts.get(vid, Transcript.empty_for(vid)),
            )

            assert len(bundle.transcript) <= 3000, iteration
            assert len(bundle.history) == min(6, n_messages), iteration
            for block in bundle.detail_blocks:
                assert len(block.excerpt) <= 400, iteration
            if qclass is QuestionClass.A_CURRENT_VIDEO:
                assert bundle.detail_blocks == ()
                current_id = oracle_pathway.video_at(*position).video_id
                bundle_text = " ".join(
                    [bundle.transcript, bundle.listing_text(), bundle.history_text()]
                )
                for vid in video_ids:
                    if vid != current_id:
                        assert f"XS{vid}X" not in bundle_text, (iteration, vid)


# -- C4 ---------------------------------------------------------------------

def test_c4_note_windowing_and_anti_repetition(oracle_pathway):
    with criterion(4, "note windowing and anti-repetition"):
        duration = 240.0
        transcript = make_transcript("fx01", [f"seg{i}" for i in range(12)])  # 20s each

        def oracle_window(center: float) -> str:
            lo = max(0.0, center - 60.0)
            hi = min(duration, center + 60.0)
            picked = []
            for segment in transcript.segments:
                seg_lo, seg_hi = segment.start_s, segment.start_s + segment.dur_s
                if seg_lo <= hi and seg_hi >= lo:
                    picked.append(segment.text)
            return " ".join(picked)

        for ts in (0.0, 30.0, duration - 10.0, duration):
            assert window(transcript, ts, 60.0, duration) == oracle_window(ts), ts
        assert window(transcript, 0.0, 60.0, duration).startswith("seg0")
        assert window(transcript, duration, 60.0, duration).endswith("seg11")

        # Dedup post-filter vs brute-force trigram oracle on <= 10 priors.
        rng = random.Random(4)
        vocabulary = [
            "noise enters the channel", "feedback closes the loop",
            "the sender encodes meaning", "agendas transfer salience",
            "frames shape judgments", "signs carry layered meaning",
            "heavy viewing cultivates fear", "codes are shared rulebooks",
            "disclosure deepens gradually", "opinion leaders filter media",
        ]
        for _ in range(200):
            priors = tuple(
                rng.choice(vocabulary) + f" extra{rng.randrange(4)}"
                for _ in range(rng.randrange(0, 11))
            )
            fresh = tuple(
                rng.choice(vocabulary) + (f" twist{rng.randrange(3)}" if rng.random() < 0.5 else "")
                for _ in range(rng.randrange(1, 4))
            )
            got = filter_repetitive(fresh, priors, threshold=0.5)
            expected = tuple(
                b for b in fresh
                if all(trigram_jaccard(b, p) < 0.5 for p in priors)
            )
            assert got == expected

        # Echoing every stored bullet raises NoteRedundant.
        bullets = "- alpha point one\n- beta point two\n- gamma point three"
        session = new_session(oracle_pathway)
        source = lambda vid: make_transcript(vid, [f"body{i}" for i in range(30)])
        _, session = generate_ai_note(
            session, oracle_pathway, 95.0, ScriptedProvider([bullets]), source
        )
        with pytest.raises(NoteRedundant):
            generate_ai_note(
                session, oracle_pathway, 180.0, ScriptedProvider([bullets]), source
            )


# -- C5 ---------------------------------------------------------------------

def test_c5_dedup_matches_bruteforce_oracle(planned):
    _pathway, _concept_map, pool, _trace = planned
    rng = random.Random(5)
    titles = [
        "shannon weaver model communication", "communication model explained shannon",
        "active listening skills", "listening skills workshop",
        "semiotics signs meaning", "signs signifier signified",
        "agenda setting news media", "framing media coverage",
        "unique title alpha", "unique title beta", "unique title gamma",
    ]

    with criterion(5, "overlap dedup equals exhaustive oracle"):
        # Corpus-derived candidate sets first.
        for shortlist in pool.shortlists:
            got = [c.video_id for c in dedup_overlap(list(shortlist), 0.6)]
            expected = [c.video_id for c in brute_force_dedup(list(shortlist), 0.6)]
            assert got == expected

        # Then randomized sets up to size 20.
        for _ in range(300):
            size = rng.randrange(0, 21)
            candidates = [
                VideoCandidate(
                    video_id=f"v{i:02d}",
                    title=rng.choice(titles),
                    channel="c",
                    duration_s=900,
                    tags=tuple(rng.sample(["x", "y", "z", "w"], rng.randrange(0, 3))),
                    view_count=rng.randrange(0, 100000),
                    has_transcript=rng.random() < 0.5,
                )
                for i in range(size)
            ]
            got = [c.video_id for c in dedup_overlap(candidates, 0.6)]
            expected = [c.video_id for c in brute_force_dedup(candidates, 0.6)]
            assert got == expected


# -- C6 ---------------------------------------------------------------------

def test_c6_revision_locality_100_randomized(planned, prefs):
    pathway, concept_map, pool, _trace = planned
    provider = MockProvider(LLM_FIXTURES)
    rng = random.Random(6)
    used = {v.video_id for v in pathway.videos()}

    with criterion(6, "revision locality over 100 randomized replacements"):
        for _ in range(100):
            week = rng.randrange(1, 6)
            slot = rng.randrange(1, 4)
            spares = [
                c.video_id
                for c in pool.for_concept(week - 1)
                if c.video_id not in used
            ]
            assert spares, f"no spare candidate for week {week}"
            # Exclude a random strict subset so at least one spare remains.
            excluded = frozenset(rng.sample(spares, rng.randrange(0, len(spares))))

            revised = replace_video(
                pathway, concept_map, prefs, week, slot, pool, excluded, provider
            )

            before = {
                pos: json.dumps(pathway.video_at(*pos).to_dict(), sort_keys=True)
                for pos in pathway.positions()
            }
            after = {
                pos: json.dumps(revised.video_at(*pos).to_dict(), sort_keys=True)
                for pos in revised.positions()
            }
            changed = [pos for pos in before if before[pos] != after[pos]]
            assert changed == [(week, slot)]

            old_ids = {v.video_id for v in pathway.videos()}
            new_ids = {v.video_id for v in revised.videos()}
            assert len(old_ids ^ new_ids) == 2

            report = validate_pathway(revised, concept_map)
            assert report.ok, report.violations


# -- C7 ---------------------------------------------------------------------

def test_c7_persistence_and_api_roundtrips(tmp_path, oracle_pathway):
    with criterion(7, "persistence and API round-trips"):
        store = Store(tmp_path / "acceptance.db")
        store.save_pathway(oracle_pathway)
        loaded, _ = store.get_pathway(oracle_pathway.pathway_id)
        assert loaded == oracle_pathway

        t0 = datetime(2025, 1, 1, tzinfo=timezone.utc)
        session = LearnerSession(
            session_id="s-acc",
            pathway_id=oracle_pathway.pathway_id,
            current=(1, 2),
            completed=frozenset({(1, 1)}),
            chat_history=(
                ChatMessage(role=MessageRole.LEARNER, content="q",
                            created_at=t0, classification=QuestionClass.A_CURRENT_VIDEO),
                ChatMessage(role=MessageRole.ASSISTANT, content="a",
                            created_at=t0 + timedelta(seconds=1)),
            ),
        )
        store.save_session(session)
        assert store.get_session("s-acc") == session

        config = AppConfig(
            llm_mode="mock",
            ingest_mode="fixture",
            corpus_path=str(CORPUS_PATH),
            fixtures_dir=str(LLM_FIXTURES),
            store_path=str(tmp_path / "acceptance-api.db"),
        )
        prefs_body = {
            "topic": "communication theory",
            "video_length": "medium",
            "experience_level": "beginner",
            "num_concepts": 5,
        }
        with TestClient(create_app(config)) as client:
            concept_map_doc = client.post("/v1/concept-maps", json=prefs_body)
            assert concept_map_doc.status_code == 201
            concept_map = ConceptMap.from_dict(concept_map_doc.json())

            pathway_doc = client.post(
                "/v1/pathways",
                json={"prefs": prefs_body,
                      "concept_map_id": concept_map_doc.json()["concept_map_id"]},
            )
            assert pathway_doc.status_code == 201
            pathway = Pathway.from_dict(pathway_doc.json())
            assert validate_pathway(pathway, concept_map).ok

            session_doc = client.post(
                "/v1/sessions", json={"pathway_id": pathway.pathway_id}
            )
            assert session_doc.status_code == 201
            LearnerSession.from_dict(session_doc.json())
            sid = session_doc.json()["session_id"]

            progress = client.post(
                f"/v1/sessions/{sid}/progress", json={"week": 1, "slot": 1}
            )
            assert progress.status_code == 200
            progressed = LearnerSession.from_dict(progress.json())
            assert progressed.current == (1, 2)

            chat = client.post(f"/v1/sessions/{sid}/chat", json={"message": "Summarize"})
            assert chat.status_code == 200
            assert chat.json()["classification"] == "A_current_video"

            note = client.post(f"/v1/sessions/{sid}/notes/ai", json={"timestamp_s": 95})
            assert note.status_code == 201
            Note.from_dict(note.json())

            final = LearnerSession.from_dict(
                client.get(f"/v1/sessions/{sid}").json()
            )
            assert len(final.chat_history) == 2
            assert len(final.notes) == 1


# -- C8 ---------------------------------------------------------------------

LABELED_QUESTIONS = [
    ("What is entropy?", "A"),
    ("Can you explain the example at the end again?", "A"),
    ("What does the instructor mean by semantic noise?", "A"),
    ("Why does the speaker call feedback a loop?", "A"),
    ("Summarize the part about encoding", "A"),
    ("What formula is shown around the five minute mark?", "A"),
    ("Is the diagram on screen the transactional model?", "A"),
    ("Define signifier as used in this lecture", "A"),
    ("What dataset does this video use?", "A"),
    ("Which example did they give for framing?", "A"),
    ("which video explains how decision trees deal with regression?", "B"),
    ("how does this video connect to prior videos in the study plan?", "B"),
    ("can you read the videos in my learning pathway and explain the relation between each video?", "B"),
    ("Which week covers semiotics?", "B"),
    ("What should I watch before the cultivation theory video?", "B"),
    ("Is there a later video that builds on agenda setting?", "B"),
    ("How far am I from finishing the pathway?", "B"),
    ("Compare the first and last videos of the course", "B"),
    ("Which video should I rewatch before week four?", "B"),
    ("Where in the plan do we cover the public sphere?", "B"),
]


def test_c8_quick_action_routing(tmp_path):
    with criterion(8, "quick-action and classifier routing"):
        # The three buttons never call the provider.
        sentinel = ScriptedProvider(["should not be called"])
        assert classify_message("Summarize", sentinel) is QuestionClass.A_CURRENT_VIDEO
        assert classify_message("Key Concepts", sentinel) is QuestionClass.A_CURRENT_VIDEO
        assert classify_message("What Should I Do Next", sentinel) is QuestionClass.B_PATHWAY
        assert sentinel.calls == []

        # Twenty labeled questions route through digest-matched mock fixtures.
        fixture_dir = tmp_path / "classify-fixtures"
        for message, label in LABELED_QUESTIONS:
            write_fixture(
                fixture_dir, PromptKind.CLASSIFY, label + "\n", params={"message": message}
            )
        provider = MockProvider(fixture_dir)
        for message, label in LABELED_QUESTIONS:
            expected = (
                QuestionClass.A_CURRENT_VIDEO if label == "A" else QuestionClass.B_PATHWAY
            )
            assert classify_message(message, provider) is expected, message
        assert len(provider.calls) == len(LABELED_QUESTIONS)
