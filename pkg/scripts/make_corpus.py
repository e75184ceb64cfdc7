#!/usr/bin/env python3
"""Regenerate fixtures/corpus.json (deterministic, no RNG).

The corpus covers the five demo concepts for the topic "communication
theory" with enough verified medium-length videos per concept to fill a
week, plus deliberate noise: an unavailable record, a zero-duration record,
a near-duplicate pair, off-band durations, and videos without transcripts.
"""

from __future__ import annotations

import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "fixtures" / "corpus.json"

SENTENCE_TEMPLATES = [
    "In this part we look closely at {p}.",
    "Notice how {p} shows up in the worked example.",
    "A common exam question asks you to explain {p} in your own words.",
    "That is why {p} matters for the bigger picture of the course.",
    "Pause here and sketch {p} before moving on.",
    "Compare {p} with what the previous section claimed.",
]

SEGMENT_SECONDS = 20.0


def build_transcript(phrases: list[str], segments: int = 12) -> list[dict]:
    out = []
    for i in range(segments):
        phrase = phrases[i % len(phrases)]
        template = SENTENCE_TEMPLATES[i % len(SENTENCE_TEMPLATES)]
        out.append(
            {
                "start_s": round(i * SEGMENT_SECONDS, 1),
                "dur_s": SEGMENT_SECONDS,
                "text": template.format(p=phrase),
            }
        )
    return out


def chapters_for(duration_s: float) -> list[dict]:
    return [
        {"start_s": 0, "title": "Intro"},
        {"start_s": round(duration_s * 0.3), "title": "Core idea"},
        {"start_s": round(duration_s * 0.7), "title": "Examples"},
    ]


# id, title, channel, duration_s, views, tags, chapters?, transcript?, phrases
VIDEOS = [
    # -- Basic Communication Models
    ("bcm01", "Shannon and Weaver Model of Communication Explained", "CommLab", 1120, 182000,
     ["communication models", "shannon weaver"], True, True,
     ["the shannon and weaver model", "information source and transmitter", "channel noise", "how the receiver decodes the signal"]),
    ("bcm02", "Berlo's SMCR Model of Communication", "Theory Minutes", 980, 96000,
     ["communication models", "berlo smcr"], True, True,
     ["berlo's source message channel receiver model", "encoding skills of the sender", "how attitudes shape the message"]),
    ("bcm03", "Transactional Model of Communication with Examples", "CommLab", 1240, 154000,
     ["communication models", "transactional model"], True, True,
     ["the transactional model", "simultaneous sending and receiving", "shared fields of experience"]),
    ("bcm04", "Linear vs Interactive vs Transactional Communication Models", "Study Fox", 1380, 72000,
     ["communication models", "model comparison"], False, True,
     ["linear one-way transmission", "interactive feedback loops", "transactional co-creation of meaning"]),
    ("bcm05", "Encoding and Decoding in Basic Communication Models", "Theory Minutes", 860, 44000,
     ["communication models", "encoding decoding"], False, True,
     ["encoding a thought into symbols", "decoding on the receiver side", "where misunderstanding enters"]),
    ("bcm06", "Noise and Feedback in Communication Models", "CampusComm", 720, 39000,
     ["communication models", "noise feedback"], False, False,
     ["physical and semantic noise", "feedback closing the loop"]),
    ("bcm07", "Schramm's Model of Communication Explained", "Study Fox", 1050, 88000,
     ["communication models", "schramm"], True, True,
     ["schramm's circular model", "the field of experience", "interpretation between participants"]),
    ("bcm08", "Basic Communication Models Crash Review", "CampusComm", 1180, 27000,
     ["communication models", "review"], False, True,
     ["a rapid tour of the classic models", "which model fits which situation"]),
    ("bcm09", "A Brief History of Communication Theory", "CommLab", 2100, 260000,
     ["communication theory", "history"], True, True,
     ["the rhetorical tradition", "mass communication research", "how models evolved over a century"]),
    ("bcm90", "Communication Models Masterclass (removed)", "CommLab", 1300, 12000,
     ["communication models"], False, False, ["placeholder"]),
    ("bcm91", "Communication Models Live Stream", "CampusComm", 0, 500,
     ["communication models"], False, False, ["placeholder"]),
    # -- Interpersonal Communication
    ("ipc01", "Active Listening Skills in Interpersonal Communication", "TalkWorks", 1150, 134000,
     ["interpersonal communication", "active listening"], True, True,
     ["levels of active listening", "paraphrasing what you heard", "withholding judgment while listening"]),
    ("ipc02", "Nonverbal Cues and Body Language in Interpersonal Communication", "TalkWorks", 990, 118000,
     ["interpersonal communication", "nonverbal"], True, True,
     ["gesture posture and gaze", "when nonverbal cues contradict words", "reading context before cues"]),
    ("ipc03", "Self-Disclosure and the Johari Window", "MindBridge", 1210, 67000,
     ["interpersonal communication", "johari window"], False, True,
     ["the four panes of the johari window", "gradual self-disclosure", "trust built through reciprocity"]),
    ("ipc04", "Conflict Styles in Interpersonal Communication", "TalkWorks", 1330, 59000,
     ["interpersonal communication", "conflict styles"], True, True,
     ["avoiding accommodating competing", "collaborating on interests not positions", "choosing a style deliberately"]),
    ("ipc05", "Social Penetration Theory Explained", "MindBridge", 880, 41000,
     ["interpersonal communication", "social penetration"], False, False,
     ["breadth and depth of disclosure", "the onion model of relationships"]),
    ("ipc06", "Uncertainty Reduction Theory in First Encounters", "CampusComm", 1020, 52000,
     ["interpersonal communication", "uncertainty reduction"], False, True,
     ["passive active and interactive strategies", "why first meetings feel scripted"]),
    ("ipc07", "Relational Dialectics Explained with Examples", "MindBridge", 1440, 47000,
     ["interpersonal communication", "relational dialectics"], True, True,
     ["autonomy versus connection", "openness versus closedness", "managing contradictions in relationships"]),
    ("ipc08", "Interpersonal Communication Fundamentals", "TalkWorks", 300, 205000,
     ["interpersonal communication", "fundamentals"], False, True,
     ["why dyadic exchange differs from broadcast", "the smallest unit of conversation"]),
    # -- Critical Communication Theory
    ("cct01", "The Frankfurt School and Critical Theory of Media", "CritiqueRoom", 1260, 91000,
     ["critical communication theory", "frankfurt school"], True, True,
     ["the culture industry argument", "standardisation of media products", "critique of mass culture"]),
    ("cct02", "Hegemony and Ideology in Communication", "CritiqueRoom", 1100, 64000,
     ["critical communication theory", "hegemony"], False, True,
     ["gramsci's notion of consent", "ideology embedded in everyday talk", "common sense as a site of power"]),
    ("cct03", "Political Economy of Communication Explained", "MediaLens", 1190, 58000,
     ["critical communication theory", "political economy"], True, True,
     ["ownership and concentration of media", "advertising as the real transaction", "who pays for the message"]),
    ("cct04", "Cultural Studies and the Critical Tradition", "CritiqueRoom", 1290, 49000,
     ["critical communication theory", "cultural studies"], False, True,
     ["encoding and decoding audiences", "resistant readings of texts", "culture as a site of struggle"]),
    ("cct05", "Habermas and the Public Sphere", "MediaLens", 1020, 83000,
     ["critical communication theory", "public sphere"], True, True,
     ["the bourgeois public sphere", "rational critical debate", "refeudalisation of public discourse"]),
    ("cct06", "Power and Discourse: A Critical Introduction", "CritiqueRoom", 950, 38000,
     ["critical communication theory", "discourse"], False, True,
     ["discourse as constitutive of power", "whose voice counts as knowledge"]),
    ("cct07", "Critical Communication Theory Overview Lecture", "CampusComm", 1480, 31000,
     ["critical communication theory", "lecture"], False, True,
     ["mapping the critical tradition", "from critique to emancipation"]),
    # -- Semiotics and Signs
    ("sem01", "Saussure: Signifier and Signified Explained", "SignSense", 840, 172000,
     ["semiotics", "signs", "saussure"], True, True,
     ["the signifier and the signified", "the arbitrariness of the sign", "language as a system of differences"]),
    ("sem02", "Peirce's Triadic Model of Signs", "SignSense", 1060, 76000,
     ["semiotics", "signs", "peirce"], False, True,
     ["icon index and symbol", "the interpretant in peirce's triad", "signs that point by causation"]),
    ("sem03", "Denotation, Connotation and Myth in Semiotics", "SignSense", 1230, 69000,
     ["semiotics", "signs", "barthes"], True, True,
     ["first and second order signification", "connotation layered on denotation", "myth naturalising meaning"]),
    ("sem04", "Codes and Conventions: Reading Signs in Media", "MediaLens", 1120, 54000,
     ["semiotics", "signs", "codes"], False, True,
     ["codes as shared rulebooks", "genre conventions as signs", "how audiences learn the code"]),
    ("sem05", "Barthes' Mythologies and Everyday Signs", "SignSense", 1350, 61000,
     ["semiotics", "signs", "mythologies"], True, True,
     ["wrestling as spectacle of signs", "the rhetoric of the image", "everyday objects as texts"]),
    ("sem06", "Introduction to Semiotics: Signs, Signifiers and Signified", "SignSense", 920, 210000,
     ["semiotics", "signs", "introduction"], True, True,
     ["what counts as a sign", "signifier signified pairs", "reading adverts semiotically"]),
    ("sem07", "Introduction to Semiotics: Signs, Signifiers and Signified (Re-upload)", "SignCopy", 930, 5400,
     ["semiotics", "signs", "introduction"], False, False,
     ["what counts as a sign", "signifier signified pairs"]),
    # -- Media Effects Theory
    ("met01", "Agenda Setting Theory and the News", "MediaLens", 1170, 143000,
     ["media effects", "agenda setting", "communication theory"], True, True,
     ["the press tells us what to think about", "salience transfer from media to public", "the chapel hill study"]),
    ("met02", "Cultivation Theory: Television and Perceived Reality", "MediaLens", 1280, 97000,
     ["media effects", "cultivation", "communication theory"], True, True,
     ["heavy viewing and mean world syndrome", "cultivation as slow drip effects", "mainstreaming across audiences"]),
    ("met03", "Two-Step Flow and Opinion Leaders", "CampusComm", 1010, 46000,
     ["media effects", "two-step flow", "communication theory"], False, False,
     ["opinion leaders filtering the media", "personal influence over broadcast"]),
    ("met04", "Uses and Gratifications Theory Explained", "Study Fox", 1090, 85000,
     ["media effects", "uses gratifications", "communication theory"], True, True,
     ["audiences as active selectors", "needs that media gratify", "why we choose one medium over another"]),
    ("met05", "Framing Effects in Media Coverage", "MediaLens", 1360, 66000,
     ["media effects", "framing", "communication theory"], False, True,
     ["frames as interpretive packages", "equivalence versus emphasis framing", "how frames change judgments"]),
    ("met06", "Spiral of Silence Theory with Modern Examples", "CritiqueRoom", 1150, 53000,
     ["media effects", "spiral of silence", "communication theory"], False, True,
     ["fear of isolation and opinion climates", "the quasi-statistical sense", "silence feeding on silence"]),
    ("met07", "Media Effects Theory: From Hypodermic Needle to Limited Effects", "CampusComm", 1420, 74000,
     ["media effects", "communication theory", "history"], True, True,
     ["the hypodermic needle metaphor", "limited effects findings", "the return of strong effects"]),
    # -- Noise (must never match the concept queries)
    ("mis01", "Weeknight Pasta: Five Easy Sauces", "HomePlates", 760, 910000,
     ["cooking", "pasta"], False, True,
     ["browning garlic without burning it", "emulsifying the sauce with pasta water"]),
    ("mis02", "Beginner Guitar Chord Changes", "StrumAlong", 840, 480000,
     ["guitar", "practice"], False, True,
     ["switching between g and c cleanly", "muting accidental strings"]),
]

PLAYLISTS = {
    "Basic Communication Models Course": ["bcm01", "bcm02", "bcm05", "bcm06", "bcm90", "bcm91"],
    "Semiotics and Signs Course": ["sem01", "sem02", "sem03", "sem04"],
    "Weeknight Cooking": ["mis01"],
}


def main() -> None:
    videos = {}
    transcripts = {}
    for vid, title, channel, dur, views, tags, with_chapters, with_transcript, phrases in VIDEOS:
        videos[vid] = {
            "video_id": vid,
            "title": title,
            "channel": channel,
            "duration_s": dur,
            "description": f"{title}. {phrases[0].capitalize()} and related ideas, explained step by step.",
            "tags": tags,
            "chapters": chapters_for(dur) if with_chapters else [],
            "view_count": views,
            "has_transcript": with_transcript,
            "available": vid != "bcm90",
        }
        if with_transcript:
            transcripts[vid] = {"segments": build_transcript(phrases)}

    corpus = {"videos": videos, "playlists": PLAYLISTS, "transcripts": transcripts}
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(corpus, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {OUT} ({len(videos)} videos, {len(transcripts)} transcripts)")


if __name__ == "__main__":
    main()
