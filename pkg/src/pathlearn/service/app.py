"""HTTP surface (/v1) exposing planning and learning operations."""

from __future__ import annotations

import threading
import uuid
from collections import defaultdict
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from ..engine.planner import build_pathway, gather_candidates, generate_concept_map, PipelineTrace
from ..engine.revision import remove_video, replace_video
from ..errors import (
    IngestError,
    InvalidNote,
    InvalidPosition,
    LlmExhausted,
    NotFound,
    NoteRedundant,
    NoteTooThin,
    ParseError,
    PathLearnError,
    PlanningError,
    ProviderError,
    RevisionError,
    StorageError,
    TemplateError,
)
from ..ingest.backend import Backend, FixtureBackend, LiveBackend
from ..ingest.corpus import load_corpus
from ..ingest.transcripts import TranscriptCache, fetch_transcript
from ..llm.mock import MockProvider
from ..llm.provider import HttpProvider, LlmProvider
from ..models import PlanningPreferences
from ..session.assistant import ask
from ..session.lifecycle import mark_completed, new_session, warm_cache
from ..session.notes import add_manual_note, generate_ai_note
from .config import AppConfig
from .storage import Store

_STATUS_BY_ERROR: list[tuple[type, int]] = [
    (NotFound, 404),
    (InvalidPosition, 400),
    (InvalidNote, 400),
    (RevisionError, 409),
    (NoteRedundant, 409),
    (NoteTooThin, 409),
    (PlanningError, 422),
    (ProviderError, 502),
    (IngestError, 502),
    (LlmExhausted, 502),
    (ParseError, 502),
    (TemplateError, 500),
    (StorageError, 500),
]


def _status_for(exc: PathLearnError) -> int:
    for klass, status in _STATUS_BY_ERROR:
        if isinstance(exc, klass):
            return status
    return 500


class PrefsBody(BaseModel):
    topic: str = Field(min_length=1)
    video_length: str
    experience_level: str
    num_concepts: int = 5


class PathwayBody(BaseModel):
    prefs: PrefsBody
    concept_map_id: str


class ReplaceBody(BaseModel):
    exclusions: list[str] = Field(default_factory=list)


class SessionBody(BaseModel):
    pathway_id: str


class ProgressBody(BaseModel):
    week: int
    slot: int


class ChatBody(BaseModel):
    message: str = Field(min_length=1)


class AiNoteBody(BaseModel):
    timestamp_s: float = Field(ge=0)


class ManualNoteBody(BaseModel):
    timestamp_s: float = Field(ge=0)
    text: str = Field(min_length=1)


def _build_provider(config: AppConfig) -> LlmProvider:
    if config.llm_mode == "live":
        return HttpProvider(
            endpoint=config.llm_endpoint,
            model=config.llm_model,
            api_key=config.llm_api_key,
            timeout_s=config.llm_timeout_s,
        )
    return MockProvider(config.fixtures_dir)


def _build_backend(config: AppConfig) -> Backend:
    if config.ingest_mode == "live":
        return LiveBackend()
    return FixtureBackend(load_corpus(config.corpus_path))


def create_app(
    config: AppConfig,
    store: Store | None = None,
    provider: LlmProvider | None = None,
    backend: Backend | None = None,
    cache: TranscriptCache | None = None,
) -> FastAPI:
    store = store if store is not None else Store(config.store_path)
    provider = provider if provider is not None else _build_provider(config)
    backend = backend if backend is not None else _build_backend(config)
    cache = cache if cache is not None else TranscriptCache(config.cache_dir or None)

    app = FastAPI(title="pathlearn", version="0.1.0")
    app.state.store = store
    app.state.provider = provider
    app.state.backend = backend
    app.state.cache = cache

    session_locks: defaultdict[str, threading.Lock] = defaultdict(threading.Lock)
    locks_guard = threading.Lock()

    def session_lock(session_id: str) -> threading.Lock:
        with locks_guard:
            return session_locks[session_id]

    def transcripts(video_id: str):
        return fetch_transcript(video_id, backend, cache)

    @app.exception_handler(PathLearnError)
    def domain_error(_request: Request, exc: PathLearnError):
        return JSONResponse(
            status_code=_status_for(exc),
            content={"code": exc.code, "message": str(exc)},
        )

    @app.exception_handler(RequestValidationError)
    def invalid_request(_request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"code": "ValidationError", "message": str(exc.errors()[:1])},
        )

    @app.exception_handler(ValueError)
    def invalid_value(_request: Request, exc: ValueError):
        return JSONResponse(
            status_code=400, content={"code": "ValidationError", "message": str(exc)}
        )

    @app.post("/v1/concept-maps", status_code=201)
    def create_concept_map(body: PrefsBody):
        prefs = PlanningPreferences(
            topic=body.topic,
            video_length=body.video_length,
            experience_level=body.experience_level,
            num_concepts=body.num_concepts,
        )
        concept_map = generate_concept_map(prefs, provider)
        concept_map_id = store.save_concept_map(concept_map)
        return {"concept_map_id": concept_map_id, **concept_map.to_dict()}

    @app.post("/v1/pathways", status_code=201)
    def create_pathway(body: PathwayBody):
        prefs = PlanningPreferences(
            topic=body.prefs.topic,
            video_length=body.prefs.video_length,
            experience_level=body.prefs.experience_level,
            num_concepts=body.prefs.num_concepts,
        )
        concept_map = store.get_concept_map(body.concept_map_id)
        if len(concept_map.concepts) != prefs.num_concepts:
            raise ValueError(
                f"concept map has {len(concept_map.concepts)} concepts, "
                f"prefs ask for {prefs.num_concepts}"
            )
        trace = PipelineTrace()
        pool = gather_candidates(
            prefs, concept_map, backend, cache, trace, config.dedup_threshold
        )
        pathway, trace = build_pathway(prefs, concept_map, pool, provider, trace)
        revision = store.save_pathway(pathway)
        store.save_planning_context(
            pathway.pathway_id, prefs, body.concept_map_id, pool
        )
        trace_id = f"tr-{pathway.pathway_id}-r{revision}"
        store.save_trace(trace_id, trace.to_dict())
        return {**pathway.to_dict(), "revision": revision, "trace_id": trace_id}

    @app.get("/v1/pathways/{pathway_id}")
    def get_pathway(pathway_id: str, revision: int | None = None):
        pathway, found_revision = store.get_pathway(pathway_id, revision)
        return {**pathway.to_dict(), "revision": found_revision}

    def _revise(pathway_id: str, week: int, slot: int, exclusions: set[str], remove: bool):
        pathway, _ = store.get_pathway(pathway_id)
        prefs, concept_map, pool = store.get_planning_context(pathway_id)
        if remove:
            revised = remove_video(
                pathway, concept_map, prefs, week, slot, pool, provider,
                exclusions=frozenset(exclusions),
            )
        else:
            revised = replace_video(
                pathway, concept_map, prefs, week, slot, pool,
                frozenset(exclusions), provider,
            )
        revision = store.save_pathway(revised)
        return {**revised.to_dict(), "revision": revision}

    @app.post("/v1/pathways/{pathway_id}/videos/{week}/{slot}/replace")
    def replace_pathway_video(pathway_id: str, week: int, slot: int, body: ReplaceBody):
        return _revise(pathway_id, week, slot, set(body.exclusions), remove=False)

    @app.delete("/v1/pathways/{pathway_id}/videos/{week}/{slot}")
    def remove_pathway_video(pathway_id: str, week: int, slot: int):
        return _revise(pathway_id, week, slot, set(), remove=True)

    @app.post("/v1/sessions", status_code=201)
    def create_session(body: SessionBody):
        pathway, _ = store.get_pathway(body.pathway_id)
        session = new_session(pathway, session_id=f"ls-{uuid.uuid4().hex[:12]}")
        warm_cache(pathway, backend, cache)
        store.save_session(session)
        return session.to_dict()

    @app.get("/v1/sessions/{session_id}")
    def get_session(session_id: str):
        return store.get_session(session_id).to_dict()

    @app.post("/v1/sessions/{session_id}/progress")
    def post_progress(session_id: str, body: ProgressBody):
        with session_lock(session_id):
            session = store.get_session(session_id)
            pathway, _ = store.get_pathway(session.pathway_id)
            updated = mark_completed(session, pathway, body.week, body.slot)
            store.save_session(updated)
        return updated.to_dict()

    @app.post("/v1/sessions/{session_id}/chat")
    def post_chat(session_id: str, body: ChatBody):
        with session_lock(session_id):
            session = store.get_session(session_id)
            pathway, _ = store.get_pathway(session.pathway_id)
            reply, updated = ask(session, pathway, body.message, provider, transcripts)
            store.save_session(updated)
            classification = updated.chat_history[-2].classification
        return {"reply": reply, "classification": classification.value}

    @app.post("/v1/sessions/{session_id}/notes/ai", status_code=201)
    def post_ai_note(session_id: str, body: AiNoteBody):
        with session_lock(session_id):
            session = store.get_session(session_id)
            pathway, _ = store.get_pathway(session.pathway_id)
            note, updated = generate_ai_note(
                session, pathway, body.timestamp_s, provider, transcripts
            )
            store.save_session(updated)
        return note.to_dict()

    @app.post("/v1/sessions/{session_id}/notes/manual", status_code=201)
    def post_manual_note(session_id: str, body: ManualNoteBody):
        with session_lock(session_id):
            session = store.get_session(session_id)
            pathway, _ = store.get_pathway(session.pathway_id)
            note, updated = add_manual_note(session, pathway, body.timestamp_s, body.text)
            store.save_session(updated)
        return note.to_dict()

    static_dir = Path(config.static_dir) if config.static_dir else None
    if static_dir and static_dir.is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
