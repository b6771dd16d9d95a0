"""Internal quasiperiodicity queries (covers, seeds, periods, borders, runs) over a fixed text.

Positions are 1-based and factors are closed intervals ``[i, j]``.
"""

from ._core import Index, QpiError

__all__ = ["Index", "QpiError", "expand"]


def expand(progressions):
    """Flatten ``(start, diff, count)`` triples into a sorted list."""
    out = []
    for start, diff, count in progressions:
        out.extend(start + t * diff for t in range(count))
    return out
