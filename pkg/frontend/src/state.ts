// Phase state machine plus URL-hash (de)serialization so every phase is
// deep-linkable and survives reload.

export type Phase = "preferences" | "concept_preview" | "pathway_review" | "learning";

export interface ViewState {
  phase: Phase;
  conceptMapId?: string;
  pathwayId?: string;
  sessionId?: string;
}

const PHASE_ORDER: Phase[] = [
  "preferences",
  "concept_preview",
  "pathway_review",
  "learning",
];

export function phaseIndex(phase: Phase): number {
  return PHASE_ORDER.indexOf(phase);
}

/** Forward moves go one phase at a time; backward navigation is always allowed. */
export function transitionAllowed(from: Phase, to: Phase): boolean {
  return phaseIndex(to) <= phaseIndex(from) + 1;
}

/** A state is presentable only when the ids its phase depends on exist. */
export function stateValid(state: ViewState): boolean {
  switch (state.phase) {
    case "preferences":
      return true;
    case "concept_preview":
      return Boolean(state.conceptMapId);
    case "pathway_review":
      return Boolean(state.pathwayId);
    case "learning":
      return Boolean(state.sessionId && state.pathwayId);
  }
}

export function toHash(state: ViewState): string {
  const params = new URLSearchParams();
  if (state.conceptMapId) params.set("map", state.conceptMapId);
  if (state.pathwayId) params.set("pathway", state.pathwayId);
  if (state.sessionId) params.set("session", state.sessionId);
  const query = params.toString();
  return `#/${state.phase}${query ? "?" + query : ""}`;
}

export function parseHash(hash: string): ViewState {
  const match = /^#\/([a-z_]+)(?:\?(.*))?$/.exec(hash);
  if (!match) return { phase: "preferences" };
  const phase = PHASE_ORDER.find((p) => p === match[1]);
  if (!phase) return { phase: "preferences" };
  const params = new URLSearchParams(match[2] ?? "");
  const state: ViewState = {
    phase,
    conceptMapId: params.get("map") ?? undefined,
    pathwayId: params.get("pathway") ?? undefined,
    sessionId: params.get("session") ?? undefined,
  };
  return stateValid(state) ? state : { phase: "preferences" };
}
