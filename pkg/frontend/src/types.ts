// Mirrors the server's canonical JSON documents (schema_version 1).

export type VideoLength = "short" | "medium" | "long";
export type ExperienceLevel = "beginner" | "intermediate" | "advanced";

export interface Prefs {
  topic: string;
  video_length: VideoLength;
  experience_level: ExperienceLevel;
  num_concepts: number;
}

export interface ConceptCluster {
  label: string;
  description: string;
}

export interface ConceptMapDoc {
  schema_version: number;
  concept_map_id: string;
  description: string;
  concepts: ConceptCluster[];
}

export interface PathwayVideoDoc {
  video_id: string;
  title: string;
  channel: string;
  duration_s: number;
  description: string;
  bloom_level: number;
  bloom_verb: string;
  requires_concept: string;
  unlocks_concept: string;
  zpd_rationale: string;
  learning_objective: string;
  why_selected: string;
  dependency_explanation: string;
  keywords: string[];
}

export interface WeekDoc {
  week_index: number;
  concept: string;
  focus: string;
  bloom_levels: number[];
  why_this_week_first: string;
  videos: PathwayVideoDoc[];
}

export interface PathwayDoc {
  schema_version: number;
  pathway_id: string;
  course_title: string;
  course_description: string;
  bloom_progression: string;
  learning_objectives: string[];
  weeks: WeekDoc[];
  revision?: number;
  trace_id?: string;
}

export type Classification = "A_current_video" | "B_pathway";

export interface ChatMessageDoc {
  role: "learner" | "assistant";
  content: string;
  classification: Classification | null;
  created_at: string;
}

export interface NoteDoc {
  schema_version: number;
  note_id: string;
  video_id: string;
  anchor_s: number;
  kind: "ai" | "manual";
  bullets: string[];
  created_at: string;
}

export type Position = [number, number];

export interface SessionDoc {
  schema_version: number;
  session_id: string;
  pathway_id: string;
  current: Position;
  completed: Position[];
  chat_history: ChatMessageDoc[];
  notes: NoteDoc[];
}

export interface ChatReply {
  reply: string;
  classification: Classification;
}
