from .backend import Backend, FixtureBackend, InstrumentedBackend, LiveBackend
from .corpus import Corpus, Transcript, TranscriptSegment, load_corpus
from .search import SearchQuery, Rejection, search_candidates, verify_metadata
from .transcripts import TranscriptCache, fetch_transcript, snippet, window

__all__ = [
    "Backend",
    "Corpus",
    "FixtureBackend",
    "InstrumentedBackend",
    "LiveBackend",
    "Rejection",
    "SearchQuery",
    "Transcript",
    "TranscriptCache",
    "TranscriptSegment",
    "fetch_transcript",
    "load_corpus",
    "search_candidates",
    "snippet",
    "verify_metadata",
    "window",
]
