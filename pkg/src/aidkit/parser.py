"""Turns raw text into a statement plus diagnostics, with byte-exact spans.

The grammar is small and unambiguous because ':' and ';' are reserved:

    label    = [emphasis] "AID Statement" [emphasis] ":"
    body     = segment (";" segment)*
    segment  = heading ":" statement-text
    last segment ends with "." (stripped; its absence is AID-E003)

Strict mode withholds the statement when any error-severity finding fires;
lenient mode returns a best-effort statement (possibly with unresolved
headings) whenever the label and at least one pair were found. Emphasis
markers ('*', '_') around the label, headings, and their colons are
consumed as trivia, covering both typography styles seen in the wild
("*Heading*:" and "*Heading:*").

Parsing is a pure function of its inputs; all spans reference the original
input bytes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from . import rules
from .model import AidStatement, Diagnostic, DisclosurePair, LineIndex, Origin, SourceSpan
from .taxonomy import MatchOutcome, entry_for, resolve, suggest

_EMPHASIS = "*_"
_LABEL_RE = re.compile(
    r"(?:[*_]{1,3}[ \t]*)?(?<![0-9A-Za-z])(?P<aid>AID)[ \t]+(?P<stmt>Statement)[*_]{0,3}[ \t]*:",
    re.IGNORECASE,
)


class ParseMode(Enum):
    STRICT = "strict"
    LENIENT = "lenient"


@dataclass(frozen=True)
class ParseOutcome:
    """A best-effort statement (when one was found) plus all diagnostics."""

    statement: AidStatement | None
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def errors(self) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.is_error()]


@dataclass(frozen=True)
class _Label:
    start: int  # char offsets
    end: int
    canonical_casing: bool


def _match_label(text: str, pos: int) -> _Label | None:
    """Match the statement label at ``pos``, consuming emphasis trivia."""
    m = _LABEL_RE.match(text, pos)
    if m is None:
        return None
    matched = m.group(0)
    opened = len(matched) - len(matched.lstrip(_EMPHASIS))
    before_colon = matched[:-1].rstrip(" \t")
    closed = len(before_colon) - len(before_colon.rstrip(_EMPHASIS))
    end = m.end()
    pending = max(0, opened - closed)
    while pending and end < len(text) and text[end] in _EMPHASIS:
        end += 1
        pending -= 1
    canonical = (m.group("aid"), m.group("stmt")) == ("AID", "Statement")
    return _Label(m.start(), end, canonical)


def _search_label(text: str, pos: int = 0) -> _Label | None:
    """First label occurrence at or after ``pos``."""
    m = _LABEL_RE.search(text, pos)
    if m is None:
        return None
    return _match_label(text, m.start())


def locate_label(text: str) -> SourceSpan | None:
    """Span of the first statement label, or None."""
    label = _search_label(text)
    if label is None:
        return None
    return LineIndex(text).span(label.start, label.end)


def _strip_range(text: str, start: int, end: int) -> tuple[int, int]:
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    return start, end


def parse_statement(text: str, mode: ParseMode = ParseMode.LENIENT) -> ParseOutcome:
    """Parse one candidate statement.

    ``text`` must already be decoded; callers reading bytes are expected to
    reject invalid UTF-8 before calling. Never raises on any str input.
    """
    index = LineIndex(text)
    diagnostics: list[Diagnostic] = []
    strict = mode is ParseMode.STRICT

    def diag(code: str, start: int, end: int, message: str, suggestion: str | None = None) -> None:
        severity = rules.default_severity(code, strict)
        diagnostics.append(Diagnostic(code, severity, message, index.span(start, end), suggestion))

    pos = 1 if text.startswith("\ufeff") else 0
    while pos < len(text) and text[pos].isspace():
        pos += 1

    label = _match_label(text, pos)
    if label is None:
        diag(rules.MISSING_LABEL, pos, pos, 'expected the statement to open with "AID Statement:"')
        return ParseOutcome(None, diagnostics)
    if not label.canonical_casing:
        diag(
            rules.LABEL_CASING,
            label.start,
            label.end,
            'label casing differs from the canonical "AID Statement"',
            suggestion="AID Statement",
        )
    label_span = index.span(label.start, label.end)

    body_start, body_end = _strip_range(text, label.end, len(text))
    if body_start >= body_end:
        diag(rules.MISSING_TERMINATOR, body_end, body_end, "statement body is empty and lacks the terminal period")
        return ParseOutcome(None, diagnostics)

    # Split the body on every ';'. The character rule reserves ';', so for
    # N semicolons this always yields exactly N+1 segments.
    segments: list[tuple[int, int]] = []
    seg_start = body_start
    for i in range(body_start, body_end):
        if text[i] == ";":
            segments.append((seg_start, i))
            seg_start = i + 1
    segments.append((seg_start, body_end))

    terminated = False
    last_start, last_end = segments[-1]
    _, trimmed_end = _strip_range(text, last_start, last_end)
    if trimmed_end > last_start and text[trimmed_end - 1] == ".":
        terminated = True
        segments[-1] = (last_start, trimmed_end - 1)
    else:
        diag(rules.MISSING_TERMINATOR, trimmed_end, trimmed_end, "the last statement must end with a period")

    pairs: list[DisclosurePair] = []
    for seg_start, seg_end in segments:
        core_start, core_end = _strip_range(text, seg_start, seg_end)
        if core_start >= core_end:
            diag(rules.EMPTY_SEGMENT, core_start, core_start, "segment is empty")
            continue
        colon = text.find(":", core_start, core_end)
        if colon < 0:
            diag(
                rules.NO_SEPARATOR,
                core_start,
                core_end,
                "segment has no ':' separating a heading from its statement",
            )
            continue

        # Heading: trim, then peel emphasis runs from both edges.
        h_start, h_end = _strip_range(text, core_start, colon)
        lead = 0
        while h_start + lead < h_end and text[h_start + lead] in _EMPHASIS:
            lead += 1
        trail = 0
        while h_end - trail - 1 >= h_start + lead and text[h_end - trail - 1] in _EMPHASIS:
            trail += 1
        h_start, h_end = _strip_range(text, h_start + lead, h_end - trail)
        pending_closers = max(0, lead - trail)

        # Statement: consume emphasis closers left dangling by the heading
        # ("*Heading:* text" typography), then trim.
        s_start = colon + 1
        while pending_closers and s_start < core_end and text[s_start] in _EMPHASIS:
            s_start += 1
            pending_closers -= 1
        s_start, s_end = _strip_range(text, s_start, core_end)

        if h_start >= h_end:
            diag(rules.EMPTY_SEGMENT, h_start, h_start, "heading text is empty")
            continue
        heading_raw = text[h_start:h_end]
        heading_span = index.span(h_start, h_end)

        if s_start >= s_end:
            diag(rules.EMPTY_SEGMENT, s_start, s_start, "statement text is empty")
            continue
        # Text with a stray ':' is carried verbatim; strict mode withholds
        # the whole statement at the end because the error fired.
        statement_text = text[s_start:s_end]
        extra_colon = statement_text.find(":")
        if extra_colon >= 0:
            diag(
                rules.COLON_IN_STATEMENT,
                s_start + extra_colon,
                s_start + extra_colon + 1,
                "':' inside statement text",
            )

        match = resolve(heading_raw)
        heading = match.id
        if match.outcome is MatchOutcome.ALIAS:
            canonical = entry_for(match.id).display
            diag(
                rules.ALIAS_SPELLING,
                h_start,
                h_end,
                f"non-canonical heading spelling {heading_raw!r}",
                suggestion=canonical,
            )
        elif match.outcome is MatchOutcome.NONE:
            candidates = suggest(heading_raw, 3)
            hint = ", ".join(entry.display for entry, _ in candidates) or None
            diag(
                rules.UNKNOWN_HEADING,
                h_start,
                h_end,
                f"unknown heading {heading_raw!r}",
                suggestion=hint,
            )

        pairs.append(
            DisclosurePair(
                heading_raw=heading_raw,
                heading=heading,
                statement=statement_text,
                heading_span=heading_span,
                statement_span=index.span(s_start, s_end),
            )
        )

    if pairs and pairs[0].heading is not None and pairs[0].ordinal != 1:
        diagnostics.append(
            Diagnostic(
                rules.TOOL_SECTION_NOT_FIRST,
                rules.default_severity(rules.TOOL_SECTION_NOT_FIRST, strict),
                "the first pair must be the Artificial Intelligence Tool section",
                pairs[0].heading_span,
            )
        )

    diagnostics.sort(key=lambda d: (d.span.start_byte, d.span.end_byte, d.code))

    statement: AidStatement | None = None
    if pairs and not (strict and any(d.is_error() for d in diagnostics)):
        statement = AidStatement(
            pairs=tuple(pairs),
            label_span=label_span,
            terminated=terminated,
            origin=Origin.PARSED,
        )
    return ParseOutcome(statement, diagnostics)
