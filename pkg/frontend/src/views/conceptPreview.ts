import { escapeHtml } from "../format";
import type { ConceptMapDoc } from "../types";

/** Concept clusters as labeled stations along a dotted path. */
export function renderConceptPreview(conceptMap: ConceptMapDoc, error: string | null): string {
  const stations = conceptMap.concepts
    .map(
      (cluster, index) => `
      <li class="station" data-role="station">
        <span class="marker">${index + 1}</span>
        <div class="station-text">
          <strong>${escapeHtml(cluster.label)}</strong>
          <p>${escapeHtml(cluster.description)}</p>
        </div>
      </li>`,
    )
    .join("");
  const weeks = conceptMap.concepts.length;
  return `
  <section class="panel concept-preview">
    <h1>Your concept map</h1>
    <p class="hint">${escapeHtml(conceptMap.description)}</p>
    ${error ? `<div class="banner error">${escapeHtml(error)}</div>` : ""}
    <ol class="stations dotted-path">${stations}</ol>
    <div class="actions">
      <button class="secondary" data-action="back-to-preferences">Adjust preferences</button>
      <button class="primary" data-action="generate-pathway">
        Generate a ${weeks}-week pathway
      </button>
    </div>
  </section>`;
}
