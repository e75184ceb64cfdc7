import type {
  ChatReply,
  ConceptMapDoc,
  NoteDoc,
  PathwayDoc,
  Prefs,
  SessionDoc,
} from "./types";

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = typeof fetch;

/** Thin typed client over the /v1 HTTP surface; all domain logic stays server-side. */
export class ApiClient {
  constructor(
    private base: string = "/v1",
    private fetchImpl: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchImpl(`${this.base}${path}`, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const text = await response.text();
    const data = text ? JSON.parse(text) : null;
    if (!response.ok) {
      const code = data?.code ?? "Unknown";
      const message = data?.message ?? response.statusText;
      throw new ApiError(response.status, code, message);
    }
    return data as T;
  }

  createConceptMap(prefs: Prefs): Promise<ConceptMapDoc> {
    return this.request("POST", "/concept-maps", prefs);
  }

  createPathway(prefs: Prefs, conceptMapId: string): Promise<PathwayDoc> {
    return this.request("POST", "/pathways", { prefs, concept_map_id: conceptMapId });
  }

  getPathway(pathwayId: string, revision?: number): Promise<PathwayDoc> {
    const query = revision === undefined ? "" : `?revision=${revision}`;
    return this.request("GET", `/pathways/${pathwayId}${query}`);
  }

  replaceVideo(pathwayId: string, week: number, slot: number, exclusions: string[] = []): Promise<PathwayDoc> {
    return this.request("POST", `/pathways/${pathwayId}/videos/${week}/${slot}/replace`, {
      exclusions,
    });
  }

  removeVideo(pathwayId: string, week: number, slot: number): Promise<PathwayDoc> {
    return this.request("DELETE", `/pathways/${pathwayId}/videos/${week}/${slot}`);
  }

  createSession(pathwayId: string): Promise<SessionDoc> {
    return this.request("POST", "/sessions", { pathway_id: pathwayId });
  }

  getSession(sessionId: string): Promise<SessionDoc> {
    return this.request("GET", `/sessions/${sessionId}`);
  }

  markProgress(sessionId: string, week: number, slot: number): Promise<SessionDoc> {
    return this.request("POST", `/sessions/${sessionId}/progress`, { week, slot });
  }

  chat(sessionId: string, message: string): Promise<ChatReply> {
    return this.request("POST", `/sessions/${sessionId}/chat`, { message });
  }

  aiNote(sessionId: string, timestampS: number): Promise<NoteDoc> {
    return this.request("POST", `/sessions/${sessionId}/notes/ai`, {
      timestamp_s: timestampS,
    });
  }

  manualNote(sessionId: string, timestampS: number, text: string): Promise<NoteDoc> {
    return this.request("POST", `/sessions/${sessionId}/notes/manual`, {
      timestamp_s: timestampS,
      text,
    });
  }
}
