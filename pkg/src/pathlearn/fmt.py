"""Small shared formatting helpers."""

from __future__ import annotations


def format_timestamp(seconds: float) -> str:
    """Seconds as m:ss (h:mm:ss past the hour): 95 -> ``1:35``."""
    total = int(round(seconds))
    minutes, secs = divmod(total, 60)
    hours, minutes = divmod(minutes, 60)
    if hours:
        return f"{hours}:{minutes:02d}:{secs:02d}"
    return f"{minutes}:{secs:02d}"
