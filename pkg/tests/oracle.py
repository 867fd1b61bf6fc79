"""Independent oracles used to compute expected values before asserting.

Nothing here may import from aidkit: these implementations must stay
independent of the code paths they check.
"""

from functools import lru_cache


def brute_levenshtein(a: str, b: str) -> int:
    """Edit distance straight from the recursive definition."""

    @lru_cache(maxsize=None)
    def go(i: int, j: int) -> int:
        if i == 0:
            return j
        if j == 0:
            return i
        return min(
            go(i - 1, j) + 1,
            go(i, j - 1) + 1,
            go(i - 1, j - 1) + (a[i - 1] != b[j - 1]),
        )

    return go(len(a), len(b))


def bytelen(text: str) -> int:
    return len(text.encode("utf-8"))


def byte_of(text: str, needle: str, occurrence: int = 0) -> int:
    """Byte offset of the nth occurrence of ``needle``."""
    pos = -1
    for _ in range(occurrence + 1):
        pos = text.index(needle, pos + 1)
    return bytelen(text[:pos])


def byte_span_of(text: str, needle: str, occurrence: int = 0) -> tuple[int, int]:
    start = byte_of(text, needle, occurrence)
    return start, start + bytelen(needle)
