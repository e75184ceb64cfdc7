// In-memory documents and a fake /v1 server used by the UI tests.

import type {
  ChatMessageDoc,
  ConceptMapDoc,
  NoteDoc,
  PathwayDoc,
  PathwayVideoDoc,
  Position,
  SessionDoc,
} from "../src/types";

export const CONCEPT_LABELS = [
  "Basic Communication Models",
  "Interpersonal Communication",
  "Critical Communication Theory",
  "Semiotics and Signs",
  "Media Effects Theory",
];

export function conceptMapDoc(): ConceptMapDoc {
  return {
    schema_version: 1,
    concept_map_id: "cm-test",
    description: "From transmission models to media influence.",
    concepts: CONCEPT_LABELS.map((label, index) => ({
      label,
      description: `Cluster ${index + 1} description.`,
    })),
  };
}

function video(week: number, slot: number, level: number): PathwayVideoDoc {
  const n = (week - 1) * 3 + slot;
  return {
    video_id: `vid${n.toString().padStart(2, "0")}`,
    title: `Video ${n} of the pathway`,
    channel: "FixtureChannel",
    duration_s: 900,
    description: `Description ${n}.`,
    bloom_level: level,
    bloom_verb: "explain",
    requires_concept: `req ${week}-${slot}`,
    unlocks_concept: `unl ${week}-${slot}`,
    zpd_rationale: `zpd ${n}`,
    learning_objective: `objective ${n}`,
    why_selected: `why selected ${n}`,
    dependency_explanation: `dependency ${n}`,
    keywords: ["fixture"],
  };
}

const WEEK_LEVELS: number[][] = [
  [1, 1, 2],
  [2, 2, 3],
  [3, 3, 4],
  [4, 4, 5],
  [5, 5, 6],
];

export function pathwayDoc(): PathwayDoc {
  return {
    schema_version: 1,
    pathway_id: "pw-test",
    course_title: "Communication Theory Course",
    course_description: "A five-week fixture pathway.",
    bloom_progression: "Remember through create.",
    learning_objectives: ["Objective one", "Objective two"],
    weeks: CONCEPT_LABELS.map((concept, index) => ({
      week_index: index + 1,
      concept,
      focus: `Focus ${index + 1}`,
      bloom_levels: [...new Set(WEEK_LEVELS[index])],
      why_this_week_first: `Why week ${index + 1} first.`,
      videos: WEEK_LEVELS[index].map((level, slot) => video(index + 1, slot + 1, level)),
    })),
    revision: 1,
  };
}

export function sessionDoc(pathwayId = "pw-test"): SessionDoc {
  return {
    schema_version: 1,
    session_id: "ls-test",
    pathway_id: pathwayId,
    current: [1, 1],
    completed: [],
    chat_history: [],
    notes: [],
  };
}

/** Tiny fake of the /v1 API, close enough for scripted UI runs. */
export class FakeServer {
  conceptMap = conceptMapDoc();
  pathway = pathwayDoc();
  session = sessionDoc();
  replacedCounter = 0;
  calls: string[] = [];

  fetch = async (input: RequestInfo | URL, init?: RequestInit): Promise<Response> => {
    const url = String(input);
    const method = (init?.method ?? "GET").toUpperCase();
    const body = init?.body ? JSON.parse(String(init.body)) : null;
    this.calls.push(`${method} ${url}`);
    const json = (data: unknown, status = 200) =>
      new Response(JSON.stringify(data), {
        status,
        headers: { "Content-Type": "application/json" },
      });

    if (method === "POST" && url.endsWith("/v1/concept-maps")) {
      if (!body.topic) return json({ code: "ValidationError", message: "topic required" }, 400);
      return json(this.conceptMap, 201);
    }
    if (method === "POST" && url.endsWith("/v1/pathways")) {
      return json(this.pathway, 201);
    }
    let match = /\/v1\/pathways\/([^/]+)\/videos\/(\d+)\/(\d+)\/replace$/.exec(url);
    if (method === "POST" && match) {
      return json(this.replaceAt(Number(match[2]), Number(match[3])));
    }
    match = /\/v1\/pathways\/([^/]+)\/videos\/(\d+)\/(\d+)$/.exec(url);
    if (method === "DELETE" && match) {
      return json(this.replaceAt(Number(match[2]), Number(match[3])));
    }
    match = /\/v1\/pathways\/([^/?]+)/.exec(url);
    if (method === "GET" && match) {
      return match[1] === this.pathway.pathway_id
        ? json(this.pathway)
        : json({ code: "NotFound", message: "no such pathway" }, 404);
    }
    if (method === "POST" && url.endsWith("/v1/sessions")) {
      this.session = sessionDoc(body.pathway_id);
      return json(this.session, 201);
    }
    match = /\/v1\/sessions\/([^/]+)\/progress$/.exec(url);
    if (method === "POST" && match) {
      const position: Position = [body.week, body.slot];
      const key = position.join("-");
      if (!this.session.completed.some((p) => p.join("-") === key)) {
        this.session.completed.push(position);
      }
      this.session.current = this.nextPosition();
      return json(this.session);
    }
    match = /\/v1\/sessions\/([^/]+)\/chat$/.exec(url);
    if (method === "POST" && match) {
      const classification = body.message === "What Should I Do Next" ? "B_pathway" : "A_current_video";
      const stamp = this.session.chat_history.length;
      const learner: ChatMessageDoc = {
        role: "learner",
        content: body.message,
        classification,
        created_at: `2025-01-01T00:00:${String(stamp).padStart(2, "0")}`,
      };
      const assistant: ChatMessageDoc = {
        role: "assistant",
        content: `Reply to: ${body.message}`,
        classification: null,
        created_at: `2025-01-01T00:00:${String(stamp + 1).padStart(2, "0")}`,
      };
      this.session.chat_history.push(learner, assistant);
      return json({ reply: assistant.content, classification });
    }
    match = /\/v1\/sessions\/([^/]+)\/notes\/ai$/.exec(url);
    if (method === "POST" && match) {
      const [week, slot] = this.session.current;
      const note: NoteDoc = {
        schema_version: 1,
        note_id: `note-${this.session.notes.length + 1}`,
        video_id: this.pathway.weeks[week - 1].videos[slot - 1].video_id,
        anchor_s: body.timestamp_s,
        kind: "ai",
        bullets: ["First generated point", "Second generated point"],
        created_at: "2025-01-01T00:01:00",
      };
      this.session.notes.push(note);
      return json(note, 201);
    }
    match = /\/v1\/sessions\/([^/]+)\/notes\/manual$/.exec(url);
    if (method === "POST" && match) {
      const [week, slot] = this.session.current;
      const note: NoteDoc = {
        schema_version: 1,
        note_id: `note-${this.session.notes.length + 1}`,
        video_id: this.pathway.weeks[week - 1].videos[slot - 1].video_id,
        anchor_s: body.timestamp_s,
        kind: "manual",
        bullets: [body.text],
        created_at: "2025-01-01T00:02:00",
      };
      this.session.notes.push(note);
      return json(note, 201);
    }
    match = /\/v1\/sessions\/([^/?]+)$/.exec(url);
    if (method === "GET" && match) {
      return json(this.session);
    }
    return json({ code: "NotFound", message: `no route for ${method} ${url}` }, 404);
  };

  private replaceAt(week: number, slot: number): PathwayDoc {
    this.replacedCounter += 1;
    const next = structuredClone(this.pathway);
    const target = next.weeks[week - 1].videos[slot - 1];
    target.video_id = `swap${this.replacedCounter}`;
    target.title = `Replacement video ${this.replacedCounter}`;
    target.why_selected = "Best remaining candidate.";
    next.revision = (next.revision ?? 1) + 1;
    this.pathway = next;
    return next;
  }

  private nextPosition(): Position {
    const done = new Set(this.session.completed.map((p) => p.join("-")));
    for (const week of this.pathway.weeks) {
      for (let slot = 1; slot <= week.videos.length; slot += 1) {
        if (!done.has(`${week.week_index}-${slot}`)) return [week.week_index, slot];
      }
    }
    const last = this.pathway.weeks.at(-1)!;
    return [last.week_index, last.videos.length];
  }
}
