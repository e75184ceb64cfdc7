"""pathlearn: topic-to-pathway planning plus pathway-aware learning sessions."""

__version__ = "0.1.0"
