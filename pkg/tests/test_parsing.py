from __future__ import annotations

import json

import pytest

from pathlearn.errors import ParseError
from pathlearn.llm.parsing import PathwayPlan, PlanVideo, parse_structured
from pathlearn.llm.templates import PromptKind
from pathlearn.models import QuestionClass

CONCEPT_MAP_JSON = {
    "description": "d",
    "concepts": [
        {"label": "Signal Flow Basics", "description": "x"},
        {"label": "Applied Channel Coding", "description": "y"},
        {"label": "Advanced Error Correction", "description": "z"},
    ],
}


def test_plain_json_parses():
    payload = parse_structured(
        PromptKind.CONCEPT_MAP, json.dumps(CONCEPT_MAP_JSON), {"numConcepts": 3}
    )
    assert [c.label for c in payload.concepts] == [
        "Signal Flow Basics",
        "Applied Channel Coding",
        "Advanced Error Correction",
    ]


def test_fenced_json_is_stripped():
    raw = "```json\n" + json.dumps(CONCEPT_MAP_JSON) + "\n```"
    payload = parse_structured(PromptKind.CONCEPT_MAP, raw, {"numConcepts": 3})
    assert payload.description == "d"


def test_surrounding_prose_is_stripped():
    raw = "Sure, here you go:\n" + json.dumps(CONCEPT_MAP_JSON) + "\nHope that helps!"
    payload = parse_structured(PromptKind.CONCEPT_MAP, raw, {"numConcepts": 3})
    assert len(payload.concepts) == 3


def test_admitted_content_returned_verbatim():
    payload = parse_structured(
        PromptKind.CONCEPT_MAP, json.dumps(CONCEPT_MAP_JSON), {"numConcepts": 3}
    )
    assert payload.concepts[0].description == "x"


def test_concept_count_mismatch():
    with pytest.raises(ParseError) as err:
        parse_structured(
            PromptKind.CONCEPT_MAP, json.dumps(CONCEPT_MAP_JSON), {"numConcepts": 5}
        )
    assert "CountMismatch" in err.value.violation


def test_generic_label_rejected_at_parse():
    doc = json.loads(json.dumps(CONCEPT_MAP_JSON))
    doc["concepts"][0]["label"] = "Introduction"
    with pytest.raises(ParseError) as err:
        parse_structured(PromptKind.CONCEPT_MAP, json.dumps(doc), {"numConcepts": 3})
    assert "GenericLabel" in err.value.violation


def test_unparseable_prose_is_parse_error():
    with pytest.raises(ParseError) as err:
        parse_structured(PromptKind.CONCEPT_MAP, "I would suggest five concepts.", {})
    assert "NotJson" in err.value.violation


@pytest.mark.parametrize(
    "raw,expected",
    [
        ("A", QuestionClass.A_CURRENT_VIDEO),
        ('"A"', QuestionClass.A_CURRENT_VIDEO),
        ("B", QuestionClass.B_PATHWAY),
        (" B.\n", QuestionClass.B_PATHWAY),
    ],
)
def test_classify_accepts_exactly_a_or_b(raw, expected):
    assert parse_structured(PromptKind.CLASSIFY, raw) is expected


@pytest.mark.parametrize("raw", ["C", "AB", "A or B", "The answer is A", "a"])
def test_classify_rejects_everything_else(raw):
    with pytest.raises(ParseError):
        parse_structured(PromptKind.CLASSIFY, raw)


def _plan_video(index=0, level=1):
    return {
        "candidate_index": index,
        "bloom_level": level,
        "bloom_verb": "define",
        "requires_concept": "r",
        "unlocks_concept": "u",
        "zpd_rationale": "z",
        "learning_objective": "l",
        "why_selected": "w",
        "dependency_explanation": "d",
        "keywords": ["k"],
    }


def _plan(num_weeks=1):
    return {
        "course_title": "t",
        "course_description": "d",
        "bloom_progression": "p",
        "learning_objectives": ["o"],
        "weeks": [
            {
                "concept": f"c{i}",
                "focus": "f",
                "bloom_levels": [1, 2],
                "why_this_week_first": "w",
                "videos": [_plan_video(j) for j in range(3)],
            }
            for i in range(num_weeks)
        ],
    }


def test_plan_parses_to_payload():
    payload = parse_structured(PromptKind.PATHWAY_ORDER, json.dumps(_plan(2)), {"numWeeks": 2})
    assert isinstance(payload, PathwayPlan)
    assert len(payload.weeks) == 2
    assert payload.weeks[0].videos[1].candidate_index == 1


def test_plan_missing_field_names_the_path():
    doc = _plan()
    del doc["weeks"][0]["videos"][2]["zpd_rationale"]
    with pytest.raises(ParseError) as err:
        parse_structured(PromptKind.PATHWAY_ORDER, json.dumps(doc), {"numWeeks": 1})
    assert "weeks[0].videos[2].zpd_rationale" in err.value.violation


def test_plan_week_count_checked_when_expected():
    with pytest.raises(ParseError) as err:
        parse_structured(PromptKind.PATHWAY_ORDER, json.dumps(_plan(4)), {"numWeeks": 5})
    assert "WeekCountMismatch" in err.value.violation


def test_plan_rejects_two_video_weeks():
    doc = _plan()
    doc["weeks"][0]["videos"] = doc["weeks"][0]["videos"][:2]
    with pytest.raises(ParseError) as err:
        parse_structured(PromptKind.PATHWAY_ORDER, json.dumps(doc), {"numWeeks": 1})
    assert "VideoCountViolation" in err.value.violation


def test_single_slot_mode_parses_one_video():
    payload = parse_structured(
        PromptKind.PATHWAY_ORDER,
        json.dumps(_plan_video(index=4, level=3)),
        {"mode": "single_slot"},
    )
    assert isinstance(payload, PlanVideo)
    assert payload.candidate_index == 4


def test_answer_passthrough_and_empty_rejection():
    assert parse_structured(PromptKind.ANSWER, "  short answer \n") == "short answer"
    with pytest.raises(ParseError):
        parse_structured(PromptKind.ANSWER, "   ")


@pytest.mark.parametrize(
    "raw,count",
    [
        ("- one\n- two", 2),
        ("* one\n* two\n* three", 3),
        ("• one\n• two", 2),
        ("noise line\n- one\n- two\ntrailing", 2),
    ],
)
def test_bullet_parsing(raw, count):
    bullets = parse_structured(PromptKind.NOTE_WITH_TRANSCRIPT, raw)
    assert len(bullets) == count


@pytest.mark.parametrize("raw", ["- only", "- a\n- b\n- c\n- d", "no bullets at all"])
def test_bullet_count_enforced(raw):
    with pytest.raises(ParseError):
        parse_structured(PromptKind.NOTE_FALLBACK, raw)
