import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api";
import { FakeServer } from "./fixtures";

function client(server: FakeServer): ApiClient {
  return new ApiClient("/v1", server.fetch);
}

const PREFS = {
  topic: "communication theory",
  video_length: "medium" as const,
  experience_level: "beginner" as const,
  num_concepts: 5,
};

describe("ApiClient", () => {
  it("posts preferences and returns the concept map", async () => {
    const server = new FakeServer();
    const doc = await client(server).createConceptMap(PREFS);
    expect(doc.concepts).toHaveLength(5);
    expect(server.calls).toContain("POST /v1/concept-maps");
  });

  it("surfaces error bodies as ApiError with code", async () => {
    const server = new FakeServer();
    await expect(
      client(server).createConceptMap({ ...PREFS, topic: "" }),
    ).rejects.toMatchObject({ code: "ValidationError", status: 400 });
    await expect(client(server).getPathway("pw-ghost")).rejects.toBeInstanceOf(ApiError);
  });

  it("hits the replace and remove routes", async () => {
    const server = new FakeServer();
    const replaced = await client(server).replaceVideo("pw-test", 2, 2);
    expect(replaced.weeks[1].videos[1].video_id).toBe("swap1");
    await client(server).removeVideo("pw-test", 1, 1);
    expect(server.calls).toContain("POST /v1/pathways/pw-test/videos/2/2/replace");
    expect(server.calls).toContain("DELETE /v1/pathways/pw-test/videos/1/1");
  });

  it("drives the session endpoints", async () => {
    const server = new FakeServer();
    const api = client(server);
    const session = await api.createSession("pw-test");
    const progressed = await api.markProgress(session.session_id, 1, 1);
    expect(progressed.current).toEqual([1, 2]);
    const chat = await api.chat(session.session_id, "Summarize");
    expect(chat.classification).toBe("A_current_video");
    const note = await api.aiNote(session.session_id, 95);
    expect(note.anchor_s).toBe(95);
  });
});
