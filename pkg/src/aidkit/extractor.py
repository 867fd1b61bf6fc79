"""Finds and parses every statement embedded in a larger document.

A candidate block runs from a label occurrence to the end of its paragraph
(first blank line or end of document); in Markdown documents an ATX
heading line or horizontal rule also ends the block. Each block is parsed
in lenient mode and every span is translated into document coordinates.

Paragraphs are the boundary rather than sentences because statement texts
legally contain internal periods. When a paragraph continues past the
statement's terminal period, the tail is reported as AID-W106 instead of
being swallowed into the final pair.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from enum import Enum

from . import rules
from .model import Diagnostic, LineIndex, Severity, SourceSpan
from .parser import ParseMode, ParseOutcome, _search_label, parse_statement


class DocumentFormat(Enum):
    PLAIN_TEXT = "text"
    MARKDOWN = "markdown"


@dataclass(frozen=True)
class ExtractedStatement:
    """One statement found in a document, with its enclosing block."""

    outcome: ParseOutcome
    document_span: SourceSpan
    block_index: int


_BLANK_LINE_RE = re.compile(r"\n[ \t\r]*\n")
_MARKDOWN_BREAK_RE = re.compile(
    r"\n(?=[ \t]{0,3}(?:#{1,6}[ \t]|(?:-[ \t]*){3,}\r?$|(?:\*[ \t]*){3,}\r?$|(?:_[ \t]*){3,}\r?$))",
    re.MULTILINE,
)


def _block_end(document: str, start: int, fmt: DocumentFormat) -> int:
    """Char offset where the block starting at ``start`` ends."""
    end = len(document)
    blank = _BLANK_LINE_RE.search(document, start)
    if blank is not None:
        end = blank.start()
    if fmt is DocumentFormat.MARKDOWN:
        brk = _MARKDOWN_BREAK_RE.search(document, start, end)
        if brk is not None:
            end = brk.start()
    return end


def _translate(span: SourceSpan, block: LineIndex, block_char_start: int, doc: LineIndex) -> SourceSpan:
    start = block_char_start + block.char_at_byte(span.start_byte)
    end = block_char_start + block.char_at_byte(span.end_byte)
    return doc.span(start, end)


def extract(document: str, fmt: DocumentFormat = DocumentFormat.PLAIN_TEXT) -> list[ExtractedStatement]:
    """All statements in the document, in order, with document-level spans.

    Returns an empty list when nothing matches. Blocks never overlap:
    scanning resumes after each extracted block.
    """
    doc_index = LineIndex(document)
    results: list[ExtractedStatement] = []
    pos = 0
    while True:
        label = _search_label(document, pos)
        if label is None:
            break
        block_start = label.start
        block_stop = _block_end(document, block_start, fmt)
        _, block_stop = _strip_trailing(document, block_start, block_stop)

        block_text = document[block_start:block_stop]
        statement_text, tail_start = _split_trailing_content(block_text)
        outcome = parse_statement(statement_text, ParseMode.LENIENT)

        block_span = doc_index.span(block_start, block_stop)
        block_index_obj = LineIndex(statement_text)
        diagnostics = [
            replace(d, span=_translate(d.span, block_index_obj, block_start, doc_index))
            for d in outcome.diagnostics
        ]
        statement = outcome.statement
        if statement is not None:
            pairs = tuple(
                replace(
                    pair,
                    heading_span=_translate(pair.heading_span, block_index_obj, block_start, doc_index),
                    statement_span=_translate(pair.statement_span, block_index_obj, block_start, doc_index),
                )
                for pair in statement.pairs
            )
            statement = replace(
                statement,
                pairs=pairs,
                label_span=_translate(statement.label_span, block_index_obj, block_start, doc_index),
            )
        if tail_start is not None:
            tail_span = doc_index.span(block_start + tail_start, block_stop)
            diagnostics.append(
                Diagnostic(
                    rules.TRAILING_CONTENT,
                    Severity.WARNING,
                    "content follows the terminal period inside the statement's paragraph",
                    tail_span,
                )
            )
        diagnostics.sort(key=lambda d: (d.span.start_byte, d.span.end_byte, d.code))

        results.append(
            ExtractedStatement(
                outcome=ParseOutcome(statement, diagnostics),
                document_span=block_span,
                block_index=len(results),
            )
        )
        pos = max(block_stop, label.end)
    return results


def _strip_trailing(document: str, start: int, end: int) -> tuple[int, int]:
    while end > start and document[end - 1].isspace():
        end -= 1
    return start, end


def _split_trailing_content(block_text: str) -> tuple[str, int | None]:
    """Split a block at the statement's terminal period.

    If the block does not end with '.', everything after the last '.' is
    trailing content (W106) and the statement part ends at that period.
    Blocks with no '.' at all are returned whole; the parser will report
    the missing terminator.
    """
    if not block_text or block_text.endswith("."):
        return block_text, None
    last_dot = block_text.rfind(".")
    if last_dot < 0:
        return block_text, None
    tail = block_text[last_dot + 1 :]
    if not tail.strip():
        return block_text, None
    return block_text[: last_dot + 1], last_dot + 1
