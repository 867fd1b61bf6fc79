"""Core value types: spans, pairs, statements, diagnostics, and the builder.

Statement texts obey one hard rule: no ':' (U+003A) and no ';' (U+003B),
because those two characters are structurally reserved by the statement
grammar. The builder enforces the rule at construction time; the parser
instead reports violations as diagnostics and, in lenient mode, may emit
pairs that break it (flagged AID-E004).

All types here are plain immutable values once finished and safe to share
across threads; the builder is single-owner.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum

from .taxonomy import Heading, entry_for

FORBIDDEN_CHARS = ":;"


class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"


class Origin(Enum):
    PARSED = "parsed"
    BUILT = "built"


@dataclass(frozen=True)
class SourceSpan:
    """Byte range in the source text, with the 1-based start line/column.

    Columns count characters, not bytes. Built (non-parsed) statements
    carry synthetic zero-length spans at line 1, column 1.
    """

    start_byte: int
    end_byte: int
    start_line: int = 1
    start_col: int = 1

    def __post_init__(self) -> None:
        if self.start_byte < 0 or self.end_byte < self.start_byte:
            raise ValueError(f"invalid span bytes: {self.start_byte}..{self.end_byte}")
        if self.start_line < 1 or self.start_col < 1:
            raise ValueError("line and column are 1-based")


SYNTHETIC_SPAN = SourceSpan(0, 0, 1, 1)


@dataclass(frozen=True)
class Diagnostic:
    """One coded finding, anchored to a source span."""

    code: str
    severity: Severity
    message: str
    span: SourceSpan
    suggestion: str | None = None

    def is_error(self) -> bool:
        return self.severity is Severity.ERROR


@dataclass(frozen=True)
class DisclosurePair:
    """One heading:statement pair.

    ``heading_raw`` is the heading as written (emphasis markers removed);
    ``heading`` is its taxonomy resolution, if any.
    """

    heading_raw: str
    heading: Heading | None
    statement: str
    heading_span: SourceSpan = SYNTHETIC_SPAN
    statement_span: SourceSpan = SYNTHETIC_SPAN

    @property
    def ordinal(self) -> int | None:
        return self.heading.ordinal if self.heading else None


@dataclass(frozen=True)
class AidStatement:
    """An ordered, nonempty sequence of disclosure pairs."""

    pairs: tuple[DisclosurePair, ...]
    label_span: SourceSpan = SYNTHETIC_SPAN
    terminated: bool = True
    origin: Origin = Origin.BUILT

    def __post_init__(self) -> None:
        if not self.pairs:
            raise ValueError("a statement needs at least one pair")


class BuildError(ValueError):
    """Statement construction rejected."""


class EmptyStatementText(BuildError):
    def __init__(self, what: str = "statement text") -> None:
        super().__init__(f"{what} is empty")


class ForbiddenCharacter(BuildError):
    def __init__(self, char: str) -> None:
        self.char = char
        super().__init__(
            f"{char!r} is reserved by the statement grammar and may not appear in statement text"
        )


class ToolSectionDuplicated(BuildError):
    def __init__(self) -> None:
        super().__init__("the tool section is fixed at construction and may not be added again")


def _check_text(text: str, what: str = "statement text") -> str:
    if not text.strip():
        raise EmptyStatementText(what)
    for char in FORBIDDEN_CHARS:
        if char in text:
            raise ForbiddenCharacter(char)
    return text.strip()


class StatementBuilder:
    """Builds a valid statement programmatically, tool section first.

    >>> builder = StatementBuilder("ToolX")
    >>> statement = builder.add(Heading.CONCEPTUALIZATION, "refined the question").finish()
    >>> len(statement.pairs)
    2

    Pairs keep insertion order; duplicate non-tool headings are accepted
    here and left for the linter to judge.
    """

    def __init__(self, tool_description: str) -> None:
        text = _check_text(tool_description, "tool description")
        tool = Heading.ARTIFICIAL_INTELLIGENCE_TOOL
        self._pairs: list[DisclosurePair] = [
            DisclosurePair(entry_for(tool).display, tool, text)
        ]

    def add(self, heading: Heading, statement: str) -> "StatementBuilder":
        if heading is Heading.ARTIFICIAL_INTELLIGENCE_TOOL:
            raise ToolSectionDuplicated()
        text = _check_text(statement)
        self._pairs.append(DisclosurePair(entry_for(heading).display, heading, text))
        return self

    def finish(self) -> AidStatement:
        return AidStatement(pairs=tuple(self._pairs))


class LineIndex:
    """Converts between character offsets, byte offsets, and line/column.

    Built once per input text; lookups are O(log n), and pure-ASCII text
    (where byte and char offsets coincide) skips the offset table. Lone
    surrogates are measured with their surrogatepass encoding so indexing
    never raises.
    """

    def __init__(self, text: str) -> None:
        self.text = text
        total = len(text.encode("utf-8", "surrogatepass"))
        if total == len(text):
            self._byte_of = None  # ASCII: identity mapping
        else:
            byte_of = [0] * (len(text) + 1)
            acc = 0
            for i, ch in enumerate(text):
                acc += len(ch.encode("utf-8", "surrogatepass"))
                byte_of[i + 1] = acc
            self._byte_of = byte_of
        self._line_starts = [0]
        newline = text.find("\n")
        while newline != -1:
            self._line_starts.append(newline + 1)
            newline = text.find("\n", newline + 1)

    def byte_at(self, char_offset: int) -> int:
        if self._byte_of is None:
            return char_offset
        return self._byte_of[char_offset]

    def char_at_byte(self, byte_offset: int) -> int:
        if self._byte_of is None:
            return byte_offset
        return bisect_right(self._byte_of, byte_offset) - 1

    def line_col(self, char_offset: int) -> tuple[int, int]:
        line = bisect_right(self._line_starts, char_offset)
        return line, char_offset - self._line_starts[line - 1] + 1

    def span(self, start_char: int, end_char: int) -> SourceSpan:
        line, col = self.line_col(start_char)
        return SourceSpan(self.byte_at(start_char), self.byte_at(end_char), line, col)
