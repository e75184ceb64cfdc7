"""Planning-phase orchestration: concept map, candidate gathering, and the
LLM pedagogical ordering that yields a validated pathway.

The flow fans out per concept (searches and transcript snippets run
concurrently) but joins in concept-index order, so output is independent of
completion order. With a deterministic provider and a fixed corpus the
resulting pathway document is byte-stable.
"""

from __future__ import annotations

import hashlib
import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ..errors import LlmExhausted, PlanningError
from ..fmt import format_timestamp
from ..ingest.backend import Backend, tokens
from ..ingest.search import SearchQuery, Rejection, search_candidates, verify_metadata
from ..ingest.transcripts import TranscriptCache, fetch_transcript, snippet
from ..llm.gateway import complete_validated
from ..llm.parsing import PathwayPlan
from ..llm.provider import LlmProvider
from ..llm.templates import PromptKind
from ..models import (
    CandidateSource,
    ConceptMap,
    Pathway,
    PathwayVideo,
    PlanningPreferences,
    VideoCandidate,
    Week,
)
from ..validation import validate_concept_map, validate_pathway
from .dedup import DEFAULT_OVERLAP_THRESHOLD, dedup_overlap
from .ranking import PASS2_SURVIVOR_FLOOR, WEEK_MINIMUM, filter_candidates

log = logging.getLogger(__name__)

SHORTLIST_CAP = 8
PROMPT_SNIPPET_CHARS = 400
GATHER_WORKERS = 8


@dataclass(frozen=True)
class CandidatePool:
    """Per-concept ordered shortlists plus per-phase provenance counts."""

    shortlists: tuple[tuple[VideoCandidate, ...], ...]
    provenance: dict[str, int]

    def __post_init__(self):
        seen: set[str] = set()
        for shortlist in self.shortlists:
            for candidate in shortlist:
                if candidate.video_id in seen:
                    raise ValueError(
                        f"video {candidate.video_id!r} appears in two concept lists"
                    )
                seen.add(candidate.video_id)

    def for_concept(self, index: int) -> tuple[VideoCandidate, ...]:
        return self.shortlists[index]

    def to_dict(self) -> dict:
        return {
            "shortlists": [[c.to_dict() for c in sl] for sl in self.shortlists],
            "provenance": dict(self.provenance),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CandidatePool":
        return cls(
            shortlists=tuple(
                tuple(VideoCandidate.from_dict(c) for c in sl)
                for sl in d["shortlists"]
            ),
            provenance=dict(d["provenance"]),
        )


@dataclass(frozen=True)
class StageRecord:
    name: str
    count_in: int
    count_out: int
    duration_ms: float
    meta: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "count_in": self.count_in,
            "count_out": self.count_out,
            "duration_ms": self.duration_ms,
            "meta": dict(self.meta),
        }


@dataclass
class PipelineTrace:
    stages: list[StageRecord] = field(default_factory=list)

    def add(self, name: str, count_in: int, count_out: int, started: float, **meta) -> None:
        record = StageRecord(
            name=name,
            count_in=count_in,
            count_out=count_out,
            duration_ms=(time.perf_counter() - started) * 1000.0,
            meta=meta,
        )
        self.stages.append(record)
        log.info("pipeline stage %s", name, extra={"stage": record.to_dict()})

    def named(self, name: str) -> StageRecord:
        return next(s for s in self.stages if s.name == name)

    def to_dict(self) -> dict:
        return {"stages": [s.to_dict() for s in self.stages]}


def generate_concept_map(
    prefs: PlanningPreferences,
    provider: LlmProvider,
    trace: PipelineTrace | None = None,
    max_attempts: int = 3,
) -> ConceptMap:
    """LLM-generated concept clusters, foundational to advanced, exactly
    prefs.num_concepts of them."""
    started = time.perf_counter()
    params = {"topic": prefs.topic, "numConcepts": prefs.num_concepts}
    try:
        reply = complete_validated(provider, PromptKind.CONCEPT_MAP, params, max_attempts)
    except LlmExhausted as exc:
        raise PlanningError(str(exc), code="LlmExhausted") from exc
    concept_map: ConceptMap = reply.payload
    report = validate_concept_map(concept_map, prefs)
    if not report.ok:
        raise PlanningError(
            f"concept map invalid: {report.violations[0].message}", code="InvalidConceptMap"
        )
    if trace is not None:
        trace.add(
            "concept_map",
            count_in=0,
            count_out=len(concept_map.concepts),
            started=started,
            llm_attempts=reply.attempts,
        )
    return concept_map


def _video_query_text(prefs: PlanningPreferences, label: str) -> str:
    return f"{prefs.topic} {label}"


def _retrieve_for_concept(
    prefs: PlanningPreferences, label: str, backend: Backend
) -> list[VideoCandidate]:
    """Playlist-first retrieval, then keyword search; playlist hits keep
    their source tag and win id collisions."""
    merged: dict[str, VideoCandidate] = {}
    for phase in (CandidateSource.PLAYLIST, CandidateSource.SEARCH):
        query = SearchQuery(
            concept_label=label,
            topic=prefs.topic,
            experience_level=prefs.experience_level,
            phase=phase,
        )
        for candidate in search_candidates(query, backend):
            merged.setdefault(candidate.video_id, candidate)
    return list(merged.values())


def _verify_all(
    candidates: list[VideoCandidate], backend: Backend
) -> tuple[list[VideoCandidate], list[Rejection]]:
    verified: list[VideoCandidate] = []
    rejected: list[Rejection] = []
    for candidate in candidates:
        result = verify_metadata(candidate, backend)
        if isinstance(result, Rejection):
            rejected.append(result)
        else:
            verified.append(result)
    return verified, rejected


def _assign_unique(
    per_concept: list[list[VideoCandidate]],
    prefs: PlanningPreferences,
    labels: tuple[str, ...],
) -> list[list[VideoCandidate]]:
    """Resolve cross-concept id collisions: each video goes to the concept
    whose query it overlaps most (ties to the earliest concept)."""
    best: dict[str, tuple[int, int]] = {}
    candidate_tokens: dict[str, set[str]] = {}
    for idx, candidates in enumerate(per_concept):
        query_tokens = tokens(_video_query_text(prefs, labels[idx]))
        for c in candidates:
            if c.video_id not in candidate_tokens:
                candidate_tokens[c.video_id] = tokens(
                    " ".join([c.title, c.description, *c.tags])
                )
            overlap = len(query_tokens & candidate_tokens[c.video_id])
            incumbent = best.get(c.video_id)
            if incumbent is None or overlap > incumbent[1]:
                best[c.video_id] = (idx, overlap)
    return [
        [c for c in candidates if best[c.video_id][0] == idx]
        for idx, candidates in enumerate(per_concept)
    ]


def _attach_snippets(
    candidates: list[VideoCandidate], backend: Backend, cache: TranscriptCache
) -> list[VideoCandidate]:
    def enrich(candidate: VideoCandidate) -> VideoCandidate:
        transcript = fetch_transcript(candidate.video_id, backend, cache)
        text = snippet(transcript, PROMPT_SNIPPET_CHARS) if not transcript.empty else ""
        return _with_snippet(candidate, text, not transcript.empty)

    with ThreadPoolExecutor(max_workers=GATHER_WORKERS) as pool:
        return list(pool.map(enrich, candidates))


def _with_snippet(
    candidate: VideoCandidate, text: str, has_transcript: bool
) -> VideoCandidate:
    return VideoCandidate(
        video_id=candidate.video_id,
        title=candidate.title,
        channel=candidate.channel,
        duration_s=candidate.duration_s,
        description=candidate.description,
        tags=candidate.tags,
        chapters=candidate.chapters,
        transcript_snippet=text,
        view_count=candidate.view_count,
        has_transcript=has_transcript,
        source=candidate.source,
    )


def gather_candidates(
    prefs: PlanningPreferences,
    concept_map: ConceptMap,
    backend: Backend,
    cache: TranscriptCache,
    trace: PipelineTrace | None = None,
    dedup_threshold: float = DEFAULT_OVERLAP_THRESHOLD,
) -> CandidatePool:
    """Retrieve, verify, filter, dedup and shortlist candidates per concept."""
    labels = concept_map.labels()
    trace = trace if trace is not None else PipelineTrace()

    started = time.perf_counter()
    with ThreadPoolExecutor(max_workers=GATHER_WORKERS) as executor:
        raw_lists = list(
            executor.map(
                lambda label: _retrieve_for_concept(prefs, label, backend), labels
            )
        )

    verified_lists: list[list[VideoCandidate]] = []
    for i, raw in enumerate(raw_lists):
        verified, rejected = _verify_all(raw, backend)
        trace.add(
            f"verify:{i}",
            count_in=len(raw),
            count_out=len(verified),
            started=started,
            rejected=[r.reason for r in rejected],
        )
        verified_lists.append(verified)

    assigned = _assign_unique(verified_lists, prefs, labels)

    shortlists: list[tuple[VideoCandidate, ...]] = []
    provenance = {"playlist": 0, "search": 0, "fallback": 0}
    claimed: set[str] = {
        c.video_id for candidates in assigned for c in candidates
    }
    for i, candidates in enumerate(assigned):
        stage_start = time.perf_counter()
        filtered = filter_candidates(candidates, prefs)
        fallback_triggered = len(filtered) < PASS2_SURVIVOR_FLOOR
        if fallback_triggered:
            query = SearchQuery(
                concept_label=labels[i],
                topic=prefs.topic,
                experience_level=prefs.experience_level,
                phase=CandidateSource.FALLBACK,
            )
            extra_raw = search_candidates(query, backend)
            extra, _ = _verify_all(extra_raw, backend)
            known = {c.video_id for c in candidates}
            fresh = [
                c for c in extra if c.video_id not in known and c.video_id not in claimed
            ]
            claimed.update(c.video_id for c in fresh)
            candidates = candidates + fresh
            filtered = filter_candidates(candidates, prefs, min_required=WEEK_MINIMUM)
        if len(filtered) < WEEK_MINIMUM:
            raise PlanningError(
                f"concept {labels[i]!r} has only {len(filtered)} usable candidates",
                code="InsufficientCandidates",
            )
        trace.add(
            f"filter:{i}",
            count_in=len(candidates),
            count_out=len(filtered),
            started=stage_start,
            fallback_triggered=fallback_triggered,
        )

        stage_start = time.perf_counter()
        deduped = dedup_overlap(filtered, dedup_threshold)
        if len(deduped) < WEEK_MINIMUM:
            raise PlanningError(
                f"concept {labels[i]!r} has only {len(deduped)} candidates after dedup",
                code="InsufficientCandidates",
            )
        trace.add(
            f"dedup:{i}",
            count_in=len(filtered),
            count_out=len(deduped),
            started=stage_start,
        )

        shortlist = _attach_snippets(deduped[:SHORTLIST_CAP], backend, cache)
        for candidate in shortlist:
            provenance[candidate.source.value] += 1
        shortlists.append(tuple(shortlist))

    return CandidatePool(shortlists=tuple(shortlists), provenance=provenance)


def serialize_candidates(concept_map: ConceptMap, pool: CandidatePool) -> str:
    """Prompt block: candidates grouped by concept, indexed within each group."""
    lines: list[str] = []
    for i, cluster in enumerate(concept_map.concepts):
        lines.append(f'Concept {i + 1}: "{cluster.label}" - {cluster.description}')
        for j, c in enumerate(pool.for_concept(i)):
            chapters = "; ".join(
                f"{format_timestamp(ch.start_s)} {ch.title}" for ch in c.chapters
            )
            parts = [
                f'[{j}] "{c.title}" by {c.channel} ({format_timestamp(c.duration_s)})',
                f"views: {c.view_count}",
                f'snippet: "{c.transcript_snippet}"' if c.transcript_snippet else "snippet: none",
                f"chapters: {chapters}" if chapters else "chapters: none",
                f"tags: {', '.join(c.tags)}" if c.tags else "tags: none",
            ]
            lines.append(" | ".join(parts))
        lines.append("")
    return "\n".join(lines).strip()


def _resolve_plan(
    plan: PathwayPlan, concept_map: ConceptMap, pool: CandidatePool
) -> Pathway:
    weeks: list[Week] = []
    for i, plan_week in enumerate(plan.weeks):
        shortlist = pool.for_concept(i) if i < len(pool.shortlists) else ()
        videos: list[PathwayVideo] = []
        for plan_video in plan_week.videos:
            if not 0 <= plan_video.candidate_index < len(shortlist):
                raise PlanningError(
                    f"candidate_index {plan_video.candidate_index} does not resolve "
                    f"for concept {i + 1} (shortlist size {len(shortlist)})",
                    code="BadIndex",
                )
            c = shortlist[plan_video.candidate_index]
            videos.append(
                PathwayVideo(
                    video_id=c.video_id,
                    title=c.title,
                    channel=c.channel,
                    duration_s=c.duration_s,
                    description=c.description,
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
            )
        weeks.append(
            Week(
                week_index=i + 1,
                concept=plan_week.concept,
                focus=plan_week.focus,
                bloom_levels=frozenset(plan_week.bloom_levels),
                why_this_week_first=plan_week.why_this_week_first,
                videos=tuple(videos),
            )
        )
    body = Pathway(
        pathway_id="",
        course_title=plan.course_title,
        course_description=plan.course_description,
        bloom_progression=plan.bloom_progression,
        learning_objectives=plan.learning_objectives,
        weeks=tuple(weeks),
    )
    return _with_content_id(body)


def _with_content_id(pathway: Pathway) -> Pathway:
    doc = pathway.to_dict()
    doc["pathway_id"] = ""
    digest = hashlib.sha256(
        json.dumps(doc, sort_keys=True).encode("utf-8")
    ).hexdigest()[:12]
    return Pathway(
        pathway_id=f"pw-{digest}",
        course_title=pathway.course_title,
        course_description=pathway.course_description,
        bloom_progression=pathway.bloom_progression,
        learning_objectives=pathway.learning_objectives,
        weeks=pathway.weeks,
    )


def build_pathway(
    prefs: PlanningPreferences,
    concept_map: ConceptMap,
    pool: CandidatePool,
    provider: LlmProvider,
    trace: PipelineTrace | None = None,
    max_attempts: int = 3,
) -> tuple[Pathway, PipelineTrace]:
    """LLM pedagogical ordering over the shortlists, resolved and validated.

    A validation failure re-issues the ordering prompt once with the
    violations appended; a second failure is PlanningError(InvalidPlan).
    """
    trace = trace if trace is not None else PipelineTrace()
    for shortlist in pool.shortlists:
        if len(shortlist) < WEEK_MINIMUM:
            raise PlanningError(
                "every concept needs at least 3 shortlisted candidates",
                code="InsufficientCandidates",
            )
    params = {
        "topic": prefs.topic,
        "experienceLevel": prefs.experience_level.value,
        "candidates": serialize_candidates(concept_map, pool),
        "numWeeks": prefs.num_concepts,
    }
    suffix = None
    last_report = None
    for ordering_call in (1, 2):
        started = time.perf_counter()
        try:
            reply = complete_validated(
                provider, PromptKind.PATHWAY_ORDER, params, max_attempts, suffix=suffix
            )
        except LlmExhausted as exc:
            raise PlanningError(str(exc), code="LlmExhausted") from exc
        pathway = _resolve_plan(reply.payload, concept_map, pool)
        report = validate_pathway(pathway, concept_map)
        trace.add(
            f"ordering:{ordering_call}",
            count_in=sum(len(s) for s in pool.shortlists),
            count_out=len(pathway.videos()),
            started=started,
            llm_attempts=reply.attempts,
            violations=[v.code for v in report.violations],
        )
        if report.ok:
            return pathway, trace
        last_report = report
        suffix = (
            "Your previous plan violated: "
            + "; ".join(f"{v.code} at {v.path}: {v.message}" for v in report.violations)
            + ". Return only the required format with these violations fixed."
        )
    raise PlanningError(
        f"plan still invalid after retry: {[v.code for v in last_report.violations]}",
        code="InvalidPlan",
    )


def plan_pathway(
    prefs: PlanningPreferences,
    provider: LlmProvider,
    backend: Backend,
    cache: TranscriptCache | None = None,
    dedup_threshold: float = DEFAULT_OVERLAP_THRESHOLD,
) -> tuple[Pathway, ConceptMap, CandidatePool, PipelineTrace]:
    """Full planning phase: concept map -> candidate pool -> ordered pathway."""
    trace = PipelineTrace()
    cache = cache if cache is not None else TranscriptCache()
    concept_map = generate_concept_map(prefs, provider, trace)
    pool = gather_candidates(
        prefs, concept_map, backend, cache, trace, dedup_threshold=dedup_threshold
    )
    pathway, trace = build_pathway(prefs, concept_map, pool, provider, trace)
    return pathway, concept_map, pool, trace
