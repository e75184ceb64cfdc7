"""Embedded single-file persistence (sqlite) behind a storage interface.

Aggregates are stored as canonical JSON documents; writes are one
transaction per aggregate. Pathways are immutable versions: every revision
inserts a new row and prior revisions stay retrievable.
"""

from __future__ import annotations

import hashlib
import json
import sqlite3
import threading
from pathlib import Path

from ..engine.planner import CandidatePool
from ..errors import NotFound, StorageError
from ..models import ConceptMap, LearnerSession, Pathway, PlanningPreferences

_SCHEMA = """
CREATE TABLE IF NOT EXISTS concept_maps (
    concept_map_id TEXT PRIMARY KEY,
    doc TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS pathways (
    pathway_id TEXT NOT NULL,
    revision INTEGER NOT NULL,
    doc TEXT NOT NULL,
    PRIMARY KEY (pathway_id, revision)
);
CREATE TABLE IF NOT EXISTS planning_contexts (
    pathway_id TEXT PRIMARY KEY,
    prefs TEXT NOT NULL,
    concept_map_id TEXT NOT NULL REFERENCES concept_maps(concept_map_id),
    pool TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS sessions (
    session_id TEXT PRIMARY KEY,
    pathway_id TEXT NOT NULL,
    doc TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS traces (
    trace_id TEXT PRIMARY KEY,
    doc TEXT NOT NULL
);
"""


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


class Store:
    """Single-node store; safe for concurrent use (one write lock)."""

    def __init__(self, path: Path | str = ":memory:"):
        self.path = str(path)
        self._lock = threading.RLock()
        self._conn = sqlite3.connect(self.path, check_same_thread=False)
        self._conn.execute("PRAGMA foreign_keys = ON")
        with self._lock, self._conn:
            self._conn.executescript(_SCHEMA)

    def close(self) -> None:
        self._conn.close()

    def _one(self, query: str, args: tuple) -> tuple | None:
        with self._lock:
            cur = self._conn.execute(query, args)
            return cur.fetchone()

    def _write(self, query: str, args: tuple) -> None:
        with self._lock, self._conn:
            self._conn.execute(query, args)

    # -- concept maps

    def save_concept_map(self, concept_map: ConceptMap) -> str:
        doc = concept_map.to_dict()
        digest = hashlib.sha256(
            json.dumps(doc, sort_keys=True).encode("utf-8")
        ).hexdigest()[:12]
        concept_map_id = f"cm-{digest}"
        self._write(
            "INSERT OR REPLACE INTO concept_maps (concept_map_id, doc) VALUES (?, ?)",
            (concept_map_id, json.dumps(doc)),
        )
        return concept_map_id

    def get_concept_map(self, concept_map_id: str) -> ConceptMap:
        row = self._one(
            "SELECT doc FROM concept_maps WHERE concept_map_id = ?", (concept_map_id,)
        )
        if row is None:
            raise NotFound(f"concept map {concept_map_id!r} not found")
        return ConceptMap.from_dict(json.loads(row[0]))

    # -- pathways (versioned)

    def save_pathway(self, pathway: Pathway) -> int:
        with self._lock, self._conn:
            row = self._conn.execute(
                "SELECT COALESCE(MAX(revision), 0) FROM pathways WHERE pathway_id = ?",
                (pathway.pathway_id,),
            ).fetchone()
            revision = int(row[0]) + 1
            self._conn.execute(
                "INSERT INTO pathways (pathway_id, revision, doc) VALUES (?, ?, ?)",
                (pathway.pathway_id, revision, json.dumps(pathway.to_dict())),
            )
        return revision

    def get_pathway(
        self, pathway_id: str, revision: int | None = None
    ) -> tuple[Pathway, int]:
        if revision is None:
            row = self._one(
                "SELECT doc, revision FROM pathways WHERE pathway_id = ? "
                "ORDER BY revision DESC LIMIT 1",
                (pathway_id,),
            )
        else:
            row = self._one(
                "SELECT doc, revision FROM pathways WHERE pathway_id = ? AND revision = ?",
                (pathway_id, revision),
            )
        if row is None:
            raise NotFound(f"pathway {pathway_id!r} (revision {revision}) not found")
        return Pathway.from_dict(json.loads(row[0])), int(row[1])

    def pathway_revisions(self, pathway_id: str) -> list[int]:
        with self._lock:
            cur = self._conn.execute(
                "SELECT revision FROM pathways WHERE pathway_id = ? ORDER BY revision",
                (pathway_id,),
            )
            return [int(r[0]) for r in cur.fetchall()]

    # -- planning context (what revisions need: prefs + concept map + pool)

    def save_planning_context(
        self,
        pathway_id: str,
        prefs: PlanningPreferences,
        concept_map_id: str,
        pool: CandidatePool,
    ) -> None:
        try:
            self._write(
                "INSERT OR REPLACE INTO planning_contexts "
                "(pathway_id, prefs, concept_map_id, pool) VALUES (?, ?, ?, ?)",
                (
                    pathway_id,
                    json.dumps(prefs.to_dict()),
                    concept_map_id,
                    json.dumps(pool.to_dict()),
                ),
            )
        except sqlite3.IntegrityError as exc:
            raise StorageError(f"planning context integrity violation: {exc}") from exc

    def get_planning_context(
        self, pathway_id: str
    ) -> tuple[PlanningPreferences, ConceptMap, CandidatePool]:
        row = self._one(
            "SELECT prefs, concept_map_id, pool FROM planning_contexts WHERE pathway_id = ?",
            (pathway_id,),
        )
        if row is None:
            raise NotFound(f"no planning context for pathway {pathway_id!r}")
        prefs = PlanningPreferences.from_dict(json.loads(row[0]))
        concept_map = self.get_concept_map(row[1])
        pool = CandidatePool.from_dict(json.loads(row[2]))
        return prefs, concept_map, pool

    # -- sessions (aggregate embeds chat history and notes)

    def save_session(self, session: LearnerSession) -> None:
        self._write(
            "INSERT OR REPLACE INTO sessions (session_id, pathway_id, doc) VALUES (?, ?, ?)",
            (session.session_id, session.pathway_id, json.dumps(session.to_dict())),
        )

    def get_session(self, session_id: str) -> LearnerSession:
        row = self._one("SELECT doc FROM sessions WHERE session_id = ?", (session_id,))
        if row is None:
            raise NotFound(f"session {session_id!r} not found")
        return LearnerSession.from_dict(json.loads(row[0]))

    # -- traces

    def save_trace(self, trace_id: str, doc: dict) -> None:
        self._write(
            "INSERT OR REPLACE INTO traces (trace_id, doc) VALUES (?, ?)",
            (trace_id, json.dumps(doc)),
        )

    def get_trace(self, trace_id: str) -> dict:
        row = self._one("SELECT doc FROM traces WHERE trace_id = ?", (trace_id,))
        if row is None:
            raise NotFound(f"trace {trace_id!r} not found")
        return json.loads(row[0])
