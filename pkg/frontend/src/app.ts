import { ApiClient, ApiError } from "./api";
import { formatTimestamp } from "./format";
import { PositionTracker } from "./player";
import { parseHash, stateValid, toHash, type ViewState } from "./state";
import type { ConceptMapDoc, PathwayDoc, Prefs, SessionDoc } from "./types";
import { renderConceptPreview } from "./views/conceptPreview";
import { renderLearning, type LearningUiState } from "./views/learning";
import { renderPathwayReview } from "./views/pathwayReview";
import { renderPreferences } from "./views/preferences";

export interface Navigation {
  getHash(): string;
  setHash(hash: string): void;
  onChange(listener: () => void): void;
}

export function windowNavigation(): Navigation {
  return {
    getHash: () => window.location.hash,
    setHash: (hash) => {
      if (window.location.hash !== hash) window.location.hash = hash;
    },
    onChange: (listener) => window.addEventListener("hashchange", listener),
  };
}

const DEFAULT_PREFS: Prefs = {
  topic: "",
  video_length: "medium",
  experience_level: "beginner",
  num_concepts: 5,
};

/** Controller: renders server state for the current phase and forwards every
 * user intent to the API. No domain logic lives here. */
export class App {
  state: ViewState = { phase: "preferences" };
  prefs: Prefs = { ...DEFAULT_PREFS };
  conceptMap: ConceptMapDoc | null = null;
  pathway: PathwayDoc | null = null;
  session: SessionDoc | null = null;

  formError: string | null = null;
  expandedRationales = new Set<string>();
  rowErrors = new Map<string, string>();
  tracker = new PositionTracker(0);
  ui: LearningUiState = {
    playerPositionS: 0,
    playing: false,
    chatPending: false,
    chatDraft: "",
    toast: null,
  };

  constructor(
    private container: HTMLElement,
    private api: ApiClient,
    private nav: Navigation,
  ) {
    this.container.addEventListener("click", (event) => this.onClick(event));
    this.container.addEventListener("submit", (event) => this.onSubmit(event));
    this.container.addEventListener("input", (event) => this.onInput(event));
    this.container.addEventListener("change", (event) => this.onChange(event));
    this.tracker.onTick((positionS) => this.onPlayerTick(positionS));
    this.nav.onChange(() => void this.restoreFromHash());
  }

  async start(): Promise<void> {
    await this.restoreFromHash();
  }

  private async restoreFromHash(): Promise<void> {
    const state = parseHash(this.nav.getHash());
    if (toHash(state) === toHash(this.state) && this.rendered) return;
    try {
      if (state.pathwayId && state.pathwayId !== this.pathway?.pathway_id) {
        this.pathway = await this.api.getPathway(state.pathwayId);
      }
      if (state.sessionId && state.sessionId !== this.session?.session_id) {
        this.session = await this.api.getSession(state.sessionId);
        this.resetTrackerToCurrent();
      }
      this.state = stateValid(state) ? state : { phase: "preferences" };
    } catch {
      this.state = { phase: "preferences" };
    }
    this.render();
  }

  private rendered = false;

  private setState(state: ViewState): void {
    this.state = state;
    this.nav.setHash(toHash(state));
    this.render();
  }

  render(): void {
    this.rendered = true;
    switch (this.state.phase) {
      case "preferences":
        this.container.innerHTML = renderPreferences(this.prefs, this.formError);
        break;
      case "concept_preview":
        if (!this.conceptMap) return this.fallback();
        this.container.innerHTML = renderConceptPreview(this.conceptMap, this.formError);
        break;
      case "pathway_review":
        if (!this.pathway) return this.fallback();
        this.container.innerHTML = renderPathwayReview(
          this.pathway,
          this.expandedRationales,
          this.rowErrors,
        );
        break;
      case "learning":
        if (!this.pathway || !this.session) return this.fallback();
        this.container.innerHTML = renderLearning(this.pathway, this.session, this.ui);
        break;
    }
  }

  private fallback(): void {
    this.state = { phase: "preferences" };
    this.container.innerHTML = renderPreferences(this.prefs, this.formError);
  }

  private resetTrackerToCurrent(): void {
    if (!this.pathway || !this.session) return;
    const [week, slot] = this.session.current;
    const video = this.pathway.weeks[week - 1]?.videos[slot - 1];
    this.tracker.reset(video ? video.duration_s : 0);
    this.ui.playerPositionS = 0;
    this.ui.playing = false;
  }

  private onPlayerTick(positionS: number): void {
    this.ui.playerPositionS = positionS;
    this.ui.playing = this.tracker.playing;
    const label = this.container.querySelector('[data-role="player-position"]');
    if (label) label.textContent = formatTimestamp(positionS);
    const seek = this.container.querySelector<HTMLInputElement>('[data-role="seek"]');
    if (seek) seek.value = String(Math.round(positionS));
  }

  private onClick(event: Event): void {
    const target = (event.target as HTMLElement).closest<HTMLElement>("[data-action]");
    if (!target) return;
    event.preventDefault();
    const action = target.dataset.action!;
    const pos = target.dataset.pos ?? "";
    const handlers: Record<string, () => void | Promise<void>> = {
      "back-to-preferences": () => this.setState({ phase: "preferences" }),
      "back-to-preview": () =>
        this.setState({
          phase: "concept_preview",
          conceptMapId: this.state.conceptMapId,
          pathwayId: this.state.pathwayId,
        }),
      "generate-pathway": () => this.generatePathway(),
      "toggle-rationale": () => this.toggleRationale(pos),
      "replace-video": () => this.reviseVideo(pos, "replace"),
      "remove-video": () => this.reviseVideo(pos, "remove"),
      "start-learning": () => this.startLearning(),
      "mark-done": () => this.markDone(),
      "toggle-play": () => this.togglePlay(),
      quick: () => this.sendChat(target.dataset.message ?? ""),
      "ai-note": () => this.createAiNote(),
      "dismiss-toast": () => {
        this.ui.toast = null;
        this.render();
      },
    };
    void handlers[action]?.();
  }

  private onSubmit(event: Event): void {
    const form = event.target as HTMLFormElement;
    event.preventDefault();
    if (form.id === "prefs-form") void this.submitPreferences(form);
    if (form.id === "chat-form") {
      const input = form.elements.namedItem("message") as HTMLInputElement;
      void this.sendChat(input.value);
    }
    if (form.id === "manual-note-form") {
      const input = form.elements.namedItem("text") as HTMLInputElement;
      void this.createManualNote(input.value);
    }
  }

  private onInput(event: Event): void {
    const target = event.target as HTMLInputElement;
    if (target.name === "message") this.ui.chatDraft = target.value;
    if (target.name === "num_concepts") {
      const output = this.container.querySelector("#concepts-count");
      if (output) output.textContent = target.value;
    }
  }

  private onChange(event: Event): void {
    const target = event.target as HTMLInputElement;
    if (target.dataset.role === "seek") this.tracker.seek(Number(target.value));
  }

  private readPrefs(form: HTMLFormElement): Prefs {
    const data = new FormData(form);
    return {
      topic: String(data.get("topic") ?? "").trim(),
      video_length: String(data.get("video_length")) as Prefs["video_length"],
      experience_level: String(data.get("experience_level")) as Prefs["experience_level"],
      num_concepts: Number(data.get("num_concepts") ?? 5),
    };
  }

  private async submitPreferences(form: HTMLFormElement): Promise<void> {
    this.prefs = this.readPrefs(form);
    this.formError = null;
    try {
      this.conceptMap = await this.api.createConceptMap(this.prefs);
      this.setState({ phase: "concept_preview", conceptMapId: this.conceptMap.concept_map_id });
    } catch (error) {
      this.formError = error instanceof ApiError ? error.message : String(error);
      this.render();
    }
  }

  private async generatePathway(): Promise<void> {
    if (!this.conceptMap) return;
    this.formError = null;
    try {
      this.pathway = await this.api.createPathway(this.prefs, this.conceptMap.concept_map_id);
      this.expandedRationales.clear();
      this.rowErrors.clear();
      this.setState({
        phase: "pathway_review",
        conceptMapId: this.conceptMap.concept_map_id,
        pathwayId: this.pathway.pathway_id,
      });
    } catch (error) {
      this.formError = error instanceof ApiError ? error.message : String(error);
      this.render();
    }
  }

  private toggleRationale(pos: string): void {
    if (this.expandedRationales.has(pos)) this.expandedRationales.delete(pos);
    else this.expandedRationales.add(pos);
    this.render();
  }

  private async reviseVideo(pos: string, mode: "replace" | "remove"): Promise<void> {
    if (!this.pathway) return;
    const [week, slot] = pos.split("-").map(Number);
    this.rowErrors.delete(pos);
    try {
      this.pathway =
        mode === "replace"
          ? await this.api.replaceVideo(this.pathway.pathway_id, week, slot)
          : await this.api.removeVideo(this.pathway.pathway_id, week, slot);
    } catch (error) {
      this.rowErrors.set(pos, error instanceof ApiError ? error.message : String(error));
    }
    this.render();
  }

  private async startLearning(): Promise<void> {
    if (!this.pathway) return;
    try {
      this.session = await this.api.createSession(this.pathway.pathway_id);
      this.resetTrackerToCurrent();
      this.setState({
        phase: "learning",
        conceptMapId: this.state.conceptMapId,
        pathwayId: this.pathway.pathway_id,
        sessionId: this.session.session_id,
      });
    } catch (error) {
      this.formError = error instanceof ApiError ? error.message : String(error);
      this.render();
    }
  }

  private async markDone(): Promise<void> {
    if (!this.session) return;
    const [week, slot] = this.session.current;
    try {
      this.session = await this.api.markProgress(this.session.session_id, week, slot);
      this.resetTrackerToCurrent();
    } catch (error) {
      this.ui.toast = error instanceof ApiError ? error.message : String(error);
    }
    this.render();
  }

  private togglePlay(): void {
    if (this.tracker.playing) this.tracker.pause();
    else this.tracker.play();
    this.ui.playing = this.tracker.playing;
    this.render();
  }

  // One in-flight chat request per session; the send button is disabled
  // while a reply is pending, mirroring server-side serialization.
  private async sendChat(message: string): Promise<void> {
    if (!this.session || this.ui.chatPending || !message.trim()) return;
    this.ui.chatPending = true;
    this.ui.toast = null;
    this.render();
    try {
      await this.api.chat(this.session.session_id, message);
      this.session = await this.api.getSession(this.session.session_id);
      this.ui.chatDraft = "";
    } catch (error) {
      // Keep the draft so a retry costs nothing.
      this.ui.chatDraft = message;
      this.ui.toast =
        error instanceof ApiError
          ? `Assistant unavailable (${error.code}); your message is kept below.`
          : String(error);
    }
    this.ui.chatPending = false;
    this.render();
  }

  private async createAiNote(): Promise<void> {
    if (!this.session) return;
    try {
      await this.api.aiNote(this.session.session_id, this.ui.playerPositionS);
      this.session = await this.api.getSession(this.session.session_id);
      this.ui.toast = null;
    } catch (error) {
      this.ui.toast = error instanceof ApiError ? error.message : String(error);
    }
    this.render();
  }

  private async createManualNote(text: string): Promise<void> {
    if (!this.session || !text.trim()) return;
    try {
      await this.api.manualNote(this.session.session_id, this.ui.playerPositionS, text);
      this.session = await this.api.getSession(this.session.session_id);
    } catch (error) {
      this.ui.toast = error instanceof ApiError ? error.message : String(error);
    }
    this.render();
  }
}
