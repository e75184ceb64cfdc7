from .dedup import dedup_overlap, jaccard, token_set
from .planner import (
    CandidatePool,
    PipelineTrace,
    StageRecord,
    build_pathway,
    gather_candidates,
    generate_concept_map,
    plan_pathway,
)
from .ranking import duration_in_band, filter_candidates, rank_score
from .revision import remove_video, replace_video

__all__ = [
    "CandidatePool",
    "PipelineTrace",
    "StageRecord",
    "build_pathway",
    "dedup_overlap",
    "duration_in_band",
    "filter_candidates",
    "gather_candidates",
    "generate_concept_map",
    "jaccard",
    "plan_pathway",
    "rank_score",
    "remove_video",
    "replace_video",
    "token_set",
]
