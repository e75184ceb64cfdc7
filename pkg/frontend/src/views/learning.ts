import { escapeHtml, formatTimestamp } from "../format";
import { embedUrl } from "../player";
import type { PathwayDoc, Position, SessionDoc } from "../types";

export interface LearningUiState {
  playerPositionS: number;
  playing: boolean;
  chatPending: boolean;
  chatDraft: string;
  toast: string | null;
}

function samePos(a: Position, b: Position): boolean {
  return a[0] === b[0] && a[1] === b[1];
}

function roadmap(pathway: PathwayDoc, session: SessionDoc): string {
  const completed = session.completed.map((p) => p.join("-"));
  const stations = pathway.weeks
    .map((week) => {
      const slots = week.videos
        .map((video, slotIndex) => {
          const pos: Position = [week.week_index, slotIndex + 1];
          const key = pos.join("-");
          const classes = ["slot-dot"];
          if (completed.includes(key)) classes.push("done");
          const isCurrent = samePos(pos, session.current);
          if (isCurrent) classes.push("current");
          return `<span class="${classes.join(" ")}" data-role="slot-dot" data-pos="${key}"
                        title="${escapeHtml(video.title)}">${isCurrent ? "🚂" : ""}</span>`;
        })
        .join("");
      return `
      <div class="road-station" data-role="road-station" data-week="${week.week_index}">
        <div class="station-name">${escapeHtml(week.concept)}</div>
        <div class="slot-rail">${slots}</div>
      </div>`;
    })
    .join("");
  return `<div class="roadmap rail" data-role="roadmap">${stations}</div>`;
}

function chatPanel(session: SessionDoc, ui: LearningUiState): string {
  const messages = session.chat_history
    .map((message) => {
      const tag =
        message.role === "learner" && message.classification
          ? `<span class="tag">${message.classification === "A_current_video" ? "current video" : "pathway"}</span>`
          : "";
      return `<li class="msg ${message.role}" data-role="chat-msg">${tag}
                <p>${escapeHtml(message.content)}</p></li>`;
    })
    .join("");
  const disabled = ui.chatPending ? "disabled" : "";
  return `
  <aside class="chat-panel">
    <h2>Assistant</h2>
    <div class="quick-actions">
      <button data-action="quick" data-message="Summarize" ${disabled}>Summarize</button>
      <button data-action="quick" data-message="Key Concepts" ${disabled}>Key Concepts</button>
      <button data-action="quick" data-message="What Should I Do Next" ${disabled}>What Should I Do Next</button>
    </div>
    <ul class="chat-log" data-role="chat-log">${messages}</ul>
    <form id="chat-form">
      <input name="message" type="text" placeholder="Ask about this video or the pathway"
             value="${escapeHtml(ui.chatDraft)}" ${disabled} />
      <button type="submit" class="primary" data-role="chat-send" ${disabled}>
        ${ui.chatPending ? "Thinking..." : "Send"}
      </button>
    </form>
  </aside>`;
}

function notesPanel(session: SessionDoc, currentVideoId: string): string {
  const cards = session.notes
    .filter((note) => note.video_id === currentVideoId)
    .map((note) => {
      const bullets = note.bullets.map((b) => `<li>${escapeHtml(b)}</li>`).join("");
      return `<li class="note-card ${note.kind}" data-role="note-card">
        <span class="stamp">${formatTimestamp(note.anchor_s)}</span>
        <span class="kind">${note.kind === "ai" ? "AI note" : "my note"}</span>
        <ul>${bullets}</ul>
      </li>`;
    })
    .join("");
  return `
  <aside class="notes-panel">
    <h2>Notes</h2>
    <button class="secondary" data-action="ai-note" data-role="ai-note">AI note at current position</button>
    <form id="manual-note-form">
      <input name="text" type="text" placeholder="Write your own note" />
      <button type="submit">Add</button>
    </form>
    <ul class="note-list" data-role="note-list">${cards}</ul>
  </aside>`;
}

export function renderLearning(
  pathway: PathwayDoc,
  session: SessionDoc,
  ui: LearningUiState,
): string {
  const [week, slot] = session.current;
  const video = pathway.weeks[week - 1].videos[slot - 1];
  const done = session.completed.length;
  const total = pathway.weeks.reduce((n, w) => n + w.videos.length, 0);
  return `
  <section class="panel learning">
    <header class="learning-head">
      <h1>${escapeHtml(pathway.course_title)}</h1>
      <span class="progress" data-role="progress">${done}/${total} videos completed</span>
    </header>
    ${ui.toast ? `<div class="banner error toast" data-role="toast">${escapeHtml(ui.toast)} <button class="link" data-action="dismiss-toast">dismiss</button></div>` : ""}
    ${roadmap(pathway, session)}
    <div class="learning-grid">
      <main class="player-pane">
        <h2 data-role="now-playing">Week ${week}, video ${slot}: ${escapeHtml(video.title)}</h2>
        <p class="meta">${escapeHtml(video.channel)} - ${escapeHtml(video.learning_objective)}</p>
        <iframe class="player" title="video player" src="${embedUrl(video.video_id)}"
                allowfullscreen></iframe>
        <div class="player-controls">
          <button data-action="toggle-play" data-role="toggle-play">${ui.playing ? "Pause" : "Play"}</button>
          <span class="position" data-role="player-position">${formatTimestamp(ui.playerPositionS)}</span>
          <input type="range" data-role="seek" min="0" max="${Math.round(video.duration_s)}"
                 value="${Math.round(ui.playerPositionS)}" />
          <button class="primary" data-action="mark-done" data-role="mark-done">Mark as done</button>
        </div>
      </main>
      ${chatPanel(session, ui)}
      ${notesPanel(session, video.video_id)}
    </div>
  </section>`;
}
