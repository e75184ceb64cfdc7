import { escapeHtml, formatDurationMinutes } from "../format";
import type { PathwayDoc, PathwayVideoDoc } from "../types";

function videoRow(
  video: PathwayVideoDoc,
  week: number,
  slot: number,
  expanded: boolean,
  rowError: string | undefined,
): string {
  const pos = `${week}-${slot}`;
  const rationale = expanded
    ? `<div class="rationale" data-role="rationale">
         <p><strong>Why this video?</strong> ${escapeHtml(video.why_selected)}</p>
         <p>${escapeHtml(video.dependency_explanation)}</p>
         <p class="zpd">${escapeHtml(video.zpd_rationale)}</p>
       </div>`
    : "";
  return `
  <li class="video-row" data-pos="${pos}" data-video-id="${escapeHtml(video.video_id)}">
    <div class="video-main">
      <span class="slot">${slot}</span>
      <div class="video-text">
        <strong>${escapeHtml(video.title)}</strong>
        <span class="meta">${escapeHtml(video.channel)} - ${formatDurationMinutes(video.duration_s)}
          - Bloom ${video.bloom_level} (${escapeHtml(video.bloom_verb)})</span>
      </div>
      <span class="row-buttons">
        <button class="link" data-action="toggle-rationale" data-pos="${pos}">Why this video?</button>
        <button class="secondary" data-action="replace-video" data-pos="${pos}">Replace</button>
        <button class="secondary" data-action="remove-video" data-pos="${pos}">Remove</button>
      </span>
    </div>
    ${rationale}
    ${rowError ? `<div class="banner error row-error">${escapeHtml(rowError)}</div>` : ""}
  </li>`;
}

export function renderPathwayReview(
  pathway: PathwayDoc,
  expanded: Set<string>,
  rowErrors: Map<string, string>,
): string {
  const weeks = pathway.weeks
    .map((week) => {
      const rows = week.videos
        .map((video, slotIndex) =>
          videoRow(
            video,
            week.week_index,
            slotIndex + 1,
            expanded.has(`${week.week_index}-${slotIndex + 1}`),
            rowErrors.get(`${week.week_index}-${slotIndex + 1}`),
          ),
        )
        .join("");
      return `
      <details class="week" ${week.week_index === 1 ? "open" : ""} data-week="${week.week_index}">
        <summary>
          <span class="week-label">Week ${week.week_index}</span>
          <strong>${escapeHtml(week.concept)}</strong>
          <span class="focus">${escapeHtml(week.focus)}</span>
        </summary>
        <p class="why-first">${escapeHtml(week.why_this_week_first)}</p>
        <ol class="video-list">${rows}</ol>
      </details>`;
    })
    .join("");
  const objectives = pathway.learning_objectives
    .map((objective) => `<li>${escapeHtml(objective)}</li>`)
    .join("");
  return `
  <section class="panel pathway-review">
    <h1>${escapeHtml(pathway.course_title)}</h1>
    <p class="hint">${escapeHtml(pathway.course_description)}</p>
    <p class="bloom">${escapeHtml(pathway.bloom_progression)}</p>
    <ul class="objectives">${objectives}</ul>
    <div class="weeks">${weeks}</div>
    <div class="actions">
      <button class="secondary" data-action="back-to-preview">Back to concepts</button>
      <button class="primary" data-action="start-learning">Start learning</button>
    </div>
  </section>`;
}
