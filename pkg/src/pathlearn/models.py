"""Core domain types and their canonical JSON encoding (schema_version 1).

All types are immutable values: frozen dataclasses whose sequence fields are
coerced to tuples, safe to share across threads. ``to_dict``/``from_dict``
round-trip field-by-field; aggregate roots carry ``schema_version`` in the
emitted document.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from typing import Any

SCHEMA_VERSION = 1

BANNED_GENERIC_LABELS = frozenset({"introduction", "overview", "basics", "conclusion"})

# Preference bands in seconds: short < 10 min, medium 10-25 min, long > 25 min.
VIDEO_LENGTH_BANDS_S: dict[str, tuple[float, float]] = {
    "short": (0.0, 600.0),
    "medium": (600.0, 1500.0),
    "long": (1500.0, float("inf")),
}

NUM_CONCEPTS_MIN = 3
NUM_CONCEPTS_MAX = 8
VIDEOS_PER_WEEK = 3


class VideoLength(str, Enum):
    SHORT = "short"
    MEDIUM = "medium"
    LONG = "long"


class ExperienceLevel(str, Enum):
    BEGINNER = "beginner"
    INTERMEDIATE = "intermediate"
    ADVANCED = "advanced"


class CandidateSource(str, Enum):
    PLAYLIST = "playlist"
    SEARCH = "search"
    FALLBACK = "fallback"


class MessageRole(str, Enum):
    LEARNER = "learner"
    ASSISTANT = "assistant"


class QuestionClass(str, Enum):
    A_CURRENT_VIDEO = "A_current_video"
    B_PATHWAY = "B_pathway"


class NoteKind(str, Enum):
    AI = "ai"
    MANUAL = "manual"


def _tup(value: Any) -> tuple:
    return tuple(value) if not isinstance(value, tuple) else value


def _freeze(obj: Any, name: str, value: Any) -> None:
    object.__setattr__(obj, name, value)


@dataclass(frozen=True)
class PlanningPreferences:
    topic: str
    video_length: VideoLength
    experience_level: ExperienceLevel
    num_concepts: int = 5

    def __post_init__(self):
        _freeze(self, "topic", self.topic.strip())
        _freeze(self, "video_length", VideoLength(self.video_length))
        _freeze(self, "experience_level", ExperienceLevel(self.experience_level))
        if not self.topic:
            raise ValueError("topic must be non-empty")
        if not NUM_CONCEPTS_MIN <= self.num_concepts <= NUM_CONCEPTS_MAX:
            raise ValueError(
                f"num_concepts must be in [{NUM_CONCEPTS_MIN}, {NUM_CONCEPTS_MAX}]"
            )

    def duration_band_s(self) -> tuple[float, float]:
        return VIDEO_LENGTH_BANDS_S[self.video_length.value]

    def to_dict(self) -> dict:
        return {
            "topic": self.topic,
            "video_length": self.video_length.value,
            "experience_level": self.experience_level.value,
            "num_concepts": self.num_concepts,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PlanningPreferences":
        return cls(
            topic=d["topic"],
            video_length=VideoLength(d["video_length"]),
            experience_level=ExperienceLevel(d["experience_level"]),
            num_concepts=int(d.get("num_concepts", 5)),
        )


@dataclass(frozen=True)
class ConceptCluster:
    label: str
    description: str

    def to_dict(self) -> dict:
        return {"label": self.label, "description": self.description}

    @classmethod
    def from_dict(cls, d: dict) -> "ConceptCluster":
        return cls(label=d["label"], description=d["description"])


@dataclass(frozen=True)
class ConceptMap:
    description: str
    concepts: tuple[ConceptCluster, ...]

    def __post_init__(self):
        _freeze(self, "concepts", _tup(self.concepts))

    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.concepts)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "description": self.description,
            "concepts": [c.to_dict() for c in self.concepts],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ConceptMap":
        return cls(
            description=d["description"],
            concepts=tuple(ConceptCluster.from_dict(c) for c in d["concepts"]),
        )


@dataclass(frozen=True)
class Chapter:
    start_s: float
    title: str

    def to_dict(self) -> dict:
        return {"start_s": self.start_s, "title": self.title}

    @classmethod
    def from_dict(cls, d: dict) -> "Chapter":
        return cls(start_s=float(d["start_s"]), title=d["title"])


@dataclass(frozen=True)
class VideoCandidate:
    video_id: str
    title: str
    channel: str
    duration_s: float
    description: str = ""
    tags: tuple[str, ...] = ()
    chapters: tuple[Chapter, ...] = ()
    transcript_snippet: str = ""
    view_count: int = 0
    has_transcript: bool = False
    source: CandidateSource = CandidateSource.SEARCH

    def __post_init__(self):
        _freeze(self, "tags", _tup(self.tags))
        _freeze(
            self,
            "chapters",
            tuple(
                c if isinstance(c, Chapter) else Chapter.from_dict(c)
                for c in self.chapters
            ),
        )
        _freeze(self, "source", CandidateSource(self.source))
        if self.view_count < 0:
            raise ValueError("view_count must be non-negative")

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "video_id": self.video_id,
            "title": self.title,
            "channel": self.channel,
            "duration_s": self.duration_s,
            "description": self.description,
            "tags": list(self.tags),
            "chapters": [c.to_dict() for c in self.chapters],
            "transcript_snippet": self.transcript_snippet,
            "view_count": self.view_count,
            "has_transcript": self.has_transcript,
            "source": self.source.value,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VideoCandidate":
        return cls(
            video_id=d["video_id"],
            title=d["title"],
            channel=d["channel"],
            duration_s=float(d["duration_s"]),
            description=d.get("description", ""),
            tags=tuple(d.get("tags", [])),
            chapters=tuple(Chapter.from_dict(c) for c in d.get("chapters", [])),
            transcript_snippet=d.get("transcript_snippet", ""),
            view_count=int(d.get("view_count", 0)),
            has_transcript=bool(d.get("has_transcript", False)),
            source=CandidateSource(d.get("source", "search")),
        )


@dataclass(frozen=True)
class PathwayVideo:
    video_id: str
    title: str
    channel: str
    duration_s: float
    description: str
    bloom_level: int
    bloom_verb: str
    requires_concept: str
    unlocks_concept: str
    zpd_rationale: str
    learning_objective: str
    why_selected: str
    dependency_explanation: str
    keywords: tuple[str, ...] = ()

    def __post_init__(self):
        _freeze(self, "keywords", _tup(self.keywords))

    def to_dict(self) -> dict:
        return {
            "video_id": self.video_id,
            "title": self.title,
            "channel": self.channel,
            "duration_s": self.duration_s,
            "description": self.description,
            "bloom_level": self.bloom_level,
            "bloom_verb": self.bloom_verb,
            "requires_concept": self.requires_concept,
            "unlocks_concept": self.unlocks_concept,
            "zpd_rationale": self.zpd_rationale,
            "learning_objective": self.learning_objective,
            "why_selected": self.why_selected,
            "dependency_explanation": self.dependency_explanation,
            "keywords": list(self.keywords),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PathwayVideo":
        return cls(
            video_id=d["video_id"],
            title=d["title"],
            channel=d["channel"],
            duration_s=float(d["duration_s"]),
            description=d.get("description", ""),
            bloom_level=int(d["bloom_level"]),
            bloom_verb=d["bloom_verb"],
            requires_concept=d["requires_concept"],
            unlocks_concept=d["unlocks_concept"],
            zpd_rationale=d["zpd_rationale"],
            learning_objective=d["learning_objective"],
            why_selected=d["why_selected"],
            dependency_explanation=d["dependency_explanation"],
            keywords=tuple(d.get("keywords", [])),
        )


@dataclass(frozen=True)
class Week:
    week_index: int
    concept: str
    focus: str
    bloom_levels: frozenset[int]
    why_this_week_first: str
    videos: tuple[PathwayVideo, ...]

    def __post_init__(self):
        _freeze(self, "bloom_levels", frozenset(self.bloom_levels))
        _freeze(self, "videos", _tup(self.videos))

    def to_dict(self) -> dict:
        return {
            "week_index": self.week_index,
            "concept": self.concept,
            "focus": self.focus,
            "bloom_levels": sorted(self.bloom_levels),
            "why_this_week_first": self.why_this_week_first,
            "videos": [v.to_dict() for v in self.videos],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Week":
        return cls(
            week_index=int(d["week_index"]),
            concept=d["concept"],
            focus=d["focus"],
            bloom_levels=frozenset(int(x) for x in d["bloom_levels"]),
            why_this_week_first=d["why_this_week_first"],
            videos=tuple(PathwayVideo.from_dict(v) for v in d["videos"]),
        )


@dataclass(frozen=True)
class Pathway:
    pathway_id: str
    course_title: str
    course_description: str
    bloom_progression: str
    learning_objectives: tuple[str, ...]
    weeks: tuple[Week, ...]

    def __post_init__(self):
        _freeze(self, "learning_objectives", _tup(self.learning_objectives))
        _freeze(self, "weeks", _tup(self.weeks))

    def videos(self) -> tuple[PathwayVideo, ...]:
        return tuple(v for w in self.weeks for v in w.videos)

    def video_at(self, week_index: int, slot: int) -> PathwayVideo:
        return self.weeks[week_index - 1].videos[slot - 1]

    def positions(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (w.week_index, s + 1) for w in self.weeks for s in range(len(w.videos))
        )

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "pathway_id": self.pathway_id,
            "course_title": self.course_title,
            "course_description": self.course_description,
            "bloom_progression": self.bloom_progression,
            "learning_objectives": list(self.learning_objectives),
            "weeks": [w.to_dict() for w in self.weeks],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Pathway":
        return cls(
            pathway_id=d["pathway_id"],
            course_title=d["course_title"],
            course_description=d["course_description"],
            bloom_progression=d["bloom_progression"],
            learning_objectives=tuple(d["learning_objectives"]),
            weeks=tuple(Week.from_dict(w) for w in d["weeks"]),
        )


@dataclass(frozen=True)
class ChatMessage:
    role: MessageRole
    content: str
    created_at: datetime
    classification: QuestionClass | None = None

    def __post_init__(self):
        _freeze(self, "role", MessageRole(self.role))
        if self.classification is not None:
            _freeze(self, "classification", QuestionClass(self.classification))
        if self.role is MessageRole.ASSISTANT and self.classification is not None:
            raise ValueError("assistant messages carry no classification")

    def to_dict(self) -> dict:
        return {
            "role": self.role.value,
            "content": self.content,
            "classification": self.classification.value if self.classification else None,
            "created_at": self.created_at.isoformat(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ChatMessage":
        raw_cls = d.get("classification")
        return cls(
            role=MessageRole(d["role"]),
            content=d["content"],
            created_at=datetime.fromisoformat(d["created_at"]),
            classification=QuestionClass(raw_cls) if raw_cls else None,
        )


@dataclass(frozen=True)
class Note:
    note_id: str
    video_id: str
    anchor_s: float
    kind: NoteKind
    bullets: tuple[str, ...]
    created_at: datetime

    def __post_init__(self):
        _freeze(self, "kind", NoteKind(self.kind))
        _freeze(self, "bullets", _tup(self.bullets))
        if self.anchor_s < 0:
            raise ValueError("anchor_s must be >= 0")
        if self.kind is NoteKind.AI and not 2 <= len(self.bullets) <= 3:
            raise ValueError("ai notes carry 2-3 bullets")
        if self.kind is NoteKind.MANUAL and len(self.bullets) != 1:
            raise ValueError("manual notes carry exactly 1 bullet")

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "note_id": self.note_id,
            "video_id": self.video_id,
            "anchor_s": self.anchor_s,
            "kind": self.kind.value,
            "bullets": list(self.bullets),
            "created_at": self.created_at.isoformat(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Note":
        return cls(
            note_id=d["note_id"],
            video_id=d["video_id"],
            anchor_s=float(d["anchor_s"]),
            kind=NoteKind(d["kind"]),
            bullets=tuple(d["bullets"]),
            created_at=datetime.fromisoformat(d["created_at"]),
        )


@dataclass(frozen=True)
class LearnerSession:
    session_id: str
    pathway_id: str
    current: tuple[int, int]
    completed: frozenset[tuple[int, int]] = frozenset()
    chat_history: tuple[ChatMessage, ...] = ()
    notes: tuple[Note, ...] = ()

    def __post_init__(self):
        _freeze(self, "current", tuple(self.current))
        _freeze(self, "completed", frozenset(tuple(p) for p in self.completed))
        _freeze(self, "chat_history", _tup(self.chat_history))
        _freeze(self, "notes", _tup(self.notes))
        stamps = [m.created_at for m in self.chat_history]
        if any(b <= a for a, b in zip(stamps, stamps[1:])):
            raise ValueError("chat_history must be strictly ordered by timestamp")

    def notes_for(self, video_id: str) -> tuple[Note, ...]:
        return tuple(n for n in self.notes if n.video_id == video_id)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "session_id": self.session_id,
            "pathway_id": self.pathway_id,
            "current": list(self.current),
            "completed": sorted([list(p) for p in self.completed]),
            "chat_history": [m.to_dict() for m in self.chat_history],
            "notes": [n.to_dict() for n in self.notes],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LearnerSession":
        return cls(
            session_id=d["session_id"],
            pathway_id=d["pathway_id"],
            current=(int(d["current"][0]), int(d["current"][1])),
            completed=frozenset((int(p[0]), int(p[1])) for p in d["completed"]),
            chat_history=tuple(ChatMessage.from_dict(m) for m in d["chat_history"]),
            notes=tuple(Note.from_dict(n) for n in d["notes"]),
        )
