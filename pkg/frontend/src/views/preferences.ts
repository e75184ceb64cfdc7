import { escapeHtml } from "../format";
import type { Prefs } from "../types";

const LENGTH_LABELS: Record<string, string> = {
  short: "Short (under 10 min)",
  medium: "Medium (10-25 min)",
  long: "Long (over 25 min)",
};

export function renderPreferences(prefs: Prefs, error: string | null): string {
  const lengths = Object.entries(LENGTH_LABELS)
    .map(
      ([value, label]) =>
        `<option value="${value}"${value === prefs.video_length ? " selected" : ""}>${label}</option>`,
    )
    .join("");
  const levels = ["beginner", "intermediate", "advanced"]
    .map(
      (value) =>
        `<option value="${value}"${value === prefs.experience_level ? " selected" : ""}>${value}</option>`,
    )
    .join("");
  return `
  <section class="panel preferences">
    <h1>Plan a learning pathway</h1>
    <p class="hint">Tell us what you want to learn and how you like to study.</p>
    ${error ? `<div class="banner error" data-role="form-error">${escapeHtml(error)}</div>` : ""}
    <form id="prefs-form">
      <label>Topic
        <input name="topic" type="text" required placeholder="e.g. communication theory"
               value="${escapeHtml(prefs.topic)}" />
      </label>
      <label>Preferred video length
        <select name="video_length">${lengths}</select>
      </label>
      <label>Experience level
        <select name="experience_level">${levels}</select>
      </label>
      <label>Concept clusters: <output id="concepts-count">${prefs.num_concepts}</output>
        <input name="num_concepts" type="range" min="3" max="8" step="1"
               value="${prefs.num_concepts}" />
      </label>
      <button type="submit" class="primary" data-role="preview">Preview the concept map</button>
    </form>
  </section>`;
}
