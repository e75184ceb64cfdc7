from __future__ import annotations

import json
from datetime import datetime, timezone
from pathlib import Path

import pytest

from pathlearn.engine.planner import plan_pathway
from pathlearn.ingest.backend import FixtureBackend, InstrumentedBackend
from pathlearn.ingest.corpus import Corpus, Transcript, TranscriptSegment, load_corpus
from pathlearn.ingest.transcripts import TranscriptCache
from pathlearn.llm.mock import MockProvider
from pathlearn.models import ConceptMap, Pathway, PlanningPreferences

REPO = Path(__file__).resolve().parent.parent
CORPUS_PATH = REPO / "fixtures" / "corpus.json"
LLM_FIXTURES = REPO / "fixtures" / "llm"
DATA = Path(__file__).resolve().parent / "data"


@pytest.fixture(scope="session")
def corpus() -> Corpus:
    return load_corpus(CORPUS_PATH)


@pytest.fixture()
def backend(corpus) -> FixtureBackend:
    return FixtureBackend(corpus)


@pytest.fixture()
def instrumented_backend(corpus) -> InstrumentedBackend:
    return InstrumentedBackend(FixtureBackend(corpus))


@pytest.fixture()
def mock_provider() -> MockProvider:
    return MockProvider(LLM_FIXTURES)


@pytest.fixture()
def prefs() -> PlanningPreferences:
    return PlanningPreferences(
        topic="communication theory",
        video_length="medium",
        experience_level="beginner",
        num_concepts=5,
    )


@pytest.fixture(scope="session")
def planned(corpus):
    """One shared planning run over the repo fixtures."""
    prefs = PlanningPreferences(
        topic="communication theory",
        video_length="medium",
        experience_level="beginner",
        num_concepts=5,
    )
    return plan_pathway(
        prefs, MockProvider(LLM_FIXTURES), FixtureBackend(corpus), TranscriptCache()
    )


@pytest.fixture(scope="session")
def oracle_pathway() -> Pathway:
    return Pathway.from_dict(json.loads((DATA / "pathway_fixture.json").read_text()))


@pytest.fixture(scope="session")
def oracle_concept_map() -> ConceptMap:
    return ConceptMap.from_dict(json.loads((DATA / "concept_map_fixture.json").read_text()))


def make_transcript(video_id: str, texts: list[str], seg_s: float = 20.0) -> Transcript:
    return Transcript(
        video_id=video_id,
        segments=tuple(
            TranscriptSegment(start_s=i * seg_s, dur_s=seg_s, text=t)
            for i, t in enumerate(texts)
        ),
        fetched_at=datetime(2025, 1, 1, tzinfo=timezone.utc),
    )
