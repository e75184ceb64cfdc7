#!/usr/bin/env python3
"""Regenerate the mock-LLM reply fixtures under fixtures/llm/.

One UTF-8 text file per reply: ``<kind>__default.txt`` per-kind fallbacks,
plus a dedicated default for the single-slot ordering variant. Fixture
bodies may use ``{{param}}`` placeholders filled from the request params.
"""

from __future__ import annotations

import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "fixtures" / "llm"

CONCEPT_MAP = {
    "description": "Communication theory moves from message-transmission models through relational and critical perspectives to sign systems and media influence.",
    "concepts": [
        {
            "label": "Basic Communication Models",
            "description": "Foundational sender-receiver models that explain how messages travel and break down.",
        },
        {
            "label": "Interpersonal Communication",
            "description": "How people build meaning, relationships, and conflict in direct exchange.",
        },
        {
            "label": "Critical Communication Theory",
            "description": "Power, ideology, and institutions shaping who gets to communicate what.",
        },
        {
            "label": "Semiotics and Signs",
            "description": "Signs, codes, and layered meaning-making in texts and everyday life.",
        },
        {
            "label": "Media Effects Theory",
            "description": "How mediated messages shape attitudes, agendas, and public behavior.",
        },
    ],
}


def _video(idx, level, verb, requires, unlocks, objective, why, dep, keywords):
    return {
        "candidate_index": idx,
        "bloom_level": level,
        "bloom_verb": verb,
        "requires_concept": requires,
        "unlocks_concept": unlocks,
        "zpd_rationale": "Sits one step past the previous slot, close enough to reach with what the week has already built.",
        "learning_objective": objective,
        "why_selected": why,
        "dependency_explanation": dep,
        "keywords": keywords,
    }


PATHWAY_PLAN = {
    "course_title": "Communication Theory, Week by Week",
    "course_description": "A five-week pathway from classic transmission models to independent analysis of media influence.",
    "bloom_progression": "Remember and understand the classic models first, then apply and analyze them in interpersonal and critical settings, and finish by evaluating and creating media analyses.",
    "learning_objectives": [
        "Explain the classic communication models and their limits.",
        "Apply interpersonal and critical concepts to real interactions and institutions.",
        "Analyze texts semiotically and evaluate claims about media effects.",
    ],
    "weeks": [
        {
            "concept": "Basic Communication Models",
            "focus": "How messages travel: source, channel, noise, feedback.",
            "bloom_levels": [1, 2],
            "why_this_week_first": "Every later perspective argues with these models, so the vocabulary has to come first.",
            "videos": [
                _video(0, 1, "define", "everyday communication experience", "linear model vocabulary",
                       "Name the parts of a transmission model.",
                       "Strongest transcript signal on the core model among the shortlist.",
                       "Starts from everyday experience and supplies the week's base vocabulary.",
                       ["sender", "receiver", "noise"]),
                _video(1, 1, "recall", "linear model vocabulary", "feedback and interaction terms",
                       "Recall how feedback extends the linear picture.",
                       "Covers the feedback extension directly, with worked diagrams in its chapters.",
                       "Uses the vocabulary from slot 1 and adds the interaction terms slot 3 assumes.",
                       ["feedback", "interaction"]),
                _video(2, 2, "explain", "feedback and interaction terms", "message transmission fundamentals",
                       "Explain transactional co-creation of meaning.",
                       "The clearest transactional treatment in the pool per its snippet.",
                       "Closes the week by unifying the models into transmission fundamentals week 2 requires.",
                       ["transactional", "meaning"]),
            ],
        },
        {
            "concept": "Interpersonal Communication",
            "focus": "Meaning-making between people: listening, nonverbals, disclosure.",
            "bloom_levels": [2, 3],
            "why_this_week_first": "Dyadic exchange is the smallest live case of the models from week 1.",
            "videos": [
                _video(0, 2, "describe", "message transmission fundamentals", "listening as decoding",
                       "Describe what active listening adds to decoding.",
                       "Transcript shows concrete listening drills, the strongest signal in this group.",
                       "Grounds week 1's decoding idea in live conversation.",
                       ["listening", "paraphrase"]),
                _video(1, 2, "interpret", "listening as decoding", "nonverbal channels",
                       "Interpret nonverbal cues against verbal content.",
                       "Best nonverbal coverage by chapters and tags.",
                       "Extends decoding from words to the nonverbal channel.",
                       ["nonverbal", "body language"]),
                _video(2, 3, "apply", "nonverbal channels", "relational meaning-making",
                       "Apply disclosure models to a developing relationship.",
                       "Applies the week's ideas to relationship development, per its snippet.",
                       "Turns the week's skills into the relational lens week 3 critiques.",
                       ["self-disclosure", "johari window"]),
            ],
        },
        {
            "concept": "Critical Communication Theory",
            "focus": "Power and ideology in who communicates and who is heard.",
            "bloom_levels": [3, 4],
            "why_this_week_first": "With transmission and relation in hand, the critical tradition asks who benefits.",
            "videos": [
                _video(0, 3, "apply", "relational meaning-making", "culture industry critique",
                       "Apply the culture industry argument to a current franchise.",
                       "Canonical Frankfurt School introduction with a strong transcript.",
                       "Reframes week 2's meaning-making as something institutions mass-produce.",
                       ["frankfurt school", "culture industry"]),
                _video(1, 3, "examine", "culture industry critique", "consent and hegemony",
                       "Examine how consent is manufactured in everyday talk.",
                       "Direct hegemony treatment, the missing middle step in this group.",
                       "Moves from industry critique to the mechanics of consent.",
                       ["hegemony", "ideology"]),
                _video(2, 4, "analyze", "consent and hegemony", "critical reading of power in texts",
                       "Analyze a media institution's economics and incentives.",
                       "The political-economy angle rounds out the critical toolkit.",
                       "Delivers the power-in-texts reading that semiotics week assumes.",
                       ["political economy", "ownership"]),
            ],
        },
        {
            "concept": "Semiotics and Signs",
            "focus": "Reading texts sign by sign: signifier, code, myth.",
            "bloom_levels": [4, 5],
            "why_this_week_first": "Critical claims about texts need the sign-level toolkit to be testable.",
            "videos": [
                _video(0, 4, "analyze", "critical reading of power in texts", "sign anatomy",
                       "Analyze signs into signifier and signified.",
                       "The cleanest Saussure explainer in the pool by snippet strength.",
                       "Gives the anatomy that code- and myth-level readings build on.",
                       ["saussure", "signifier"]),
                _video(1, 4, "differentiate", "sign anatomy", "orders of signification",
                       "Differentiate denotation, connotation, and myth.",
                       "Covers second-order signification explicitly.",
                       "Stacks orders of meaning on the sign anatomy from slot 1.",
                       ["connotation", "myth"]),
                _video(2, 5, "evaluate", "orders of signification", "sign-level analysis of media texts",
                       "Evaluate a full mythological reading of an everyday object.",
                       "Barthes applied end-to-end, the strongest worked example available.",
                       "Produces the media-text analyses week 5 evaluates at scale.",
                       ["barthes", "mythologies"]),
            ],
        },
        {
            "concept": "Media Effects Theory",
            "focus": "What media exposure does: agendas, cultivation, frames.",
            "bloom_levels": [5, 6],
            "why_this_week_first": "Effects claims are the payoff: they need every earlier lens to be judged fairly.",
            "videos": [
                _video(0, 5, "evaluate", "sign-level analysis of media texts", "agenda salience",
                       "Evaluate the evidence behind agenda-setting claims.",
                       "The agenda-setting study walkthrough has the strongest transcript.",
                       "Tests sign-level skills against empirical effects claims.",
                       ["agenda setting", "salience"]),
                _video(1, 5, "judge", "agenda salience", "long-run exposure effects",
                       "Judge cultivation findings about heavy viewers.",
                       "Cultivation theory with data discussion, per chapters.",
                       "Extends one-story agendas to long-run exposure.",
                       ["cultivation", "mean world"]),
                _video(2, 6, "design", "long-run exposure effects", "independent media analysis",
                       "Design a small framing analysis of current coverage.",
                       "Framing is the most hands-on effects lens for a capstone.",
                       "Caps the pathway with a self-directed analysis project.",
                       ["framing", "coverage"]),
            ],
        },
    ],
}

SINGLE_SLOT = """{
  "candidate_index": {{candidateIndex}},
  "bloom_level": {{bloomMin}},
  "bloom_verb": "apply",
  "requires_concept": "{{requiresConcept}}",
  "unlocks_concept": "{{unlocksConcept}}",
  "zpd_rationale": "Sits just past what this week already covered, reachable from the neighbouring slots.",
  "learning_objective": "Work through {{concept}} at the level this slot demands.",
  "why_selected": "Strongest remaining candidate for {{concept}} by content signals once the original pick is excluded.",
  "dependency_explanation": "Keeps the chain intact: it requires {{requiresConcept}} and still unlocks {{unlocksConcept}}.",
  "keywords": ["{{concept}}"]
}
"""

ANSWER = (
    "Here is the direct answer. In \"{{video_title}}\" the instructor develops the "
    "point you asked about step by step, and the surrounding pathway context "
    "supports it. Rewatch the section near your current position and compare it "
    "with the week's focus. That is the fastest way to settle your question."
)

NOTE_WITH_TRANSCRIPT = (
    "- At {{timestamp}} the segment develops {{main_concept}} through a concrete worked example\n"
    "- Key terms in play right here: {{keywords}}\n"
    "- The discussion ties back to the goal: {{learning_objective}}\n"
)

NOTE_FALLBACK = (
    "- Around {{timestamp}} the video is building up {{main_concept}} step by step\n"
    "- Watch for these terms as anchors: {{keywords}}\n"
)


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    files = {
        "concept_map__default.txt": json.dumps(CONCEPT_MAP, indent=2) + "\n",
        "pathway_order__default.txt": json.dumps(PATHWAY_PLAN, indent=2) + "\n",
        "pathway_order.single_slot__default.txt": SINGLE_SLOT,
        "classify__default.txt": "A\n",
        "answer__default.txt": ANSWER + "\n",
        "note_with_transcript__default.txt": NOTE_WITH_TRANSCRIPT,
        "note_fallback__default.txt": NOTE_FALLBACK,
    }
    for name, text in files.items():
        (OUT / name).write_text(text, encoding="utf-8")
    print(f"wrote {len(files)} fixtures to {OUT}")


if __name__ == "__main__":
    main()
