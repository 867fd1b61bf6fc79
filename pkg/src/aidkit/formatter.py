"""Canonical rendering and canonicalization of statements.

Canonical text is a single physical line: the label, pairs joined by "; ",
one space after every colon, and a terminal period. Markdown style wraps
each heading in single asterisks with the colon outside, so stripping the
asterisks from Markdown output yields the plain output byte for byte.
"""

from __future__ import annotations

from dataclasses import replace
from enum import Enum

from .model import AidStatement, DisclosurePair
from .taxonomy import MatchOutcome, entry_for, resolve


class Style(Enum):
    PLAIN = "plain"
    MARKDOWN = "markdown"


def _display(pair: DisclosurePair) -> str:
    if pair.heading is not None:
        return entry_for(pair.heading).display
    return pair.heading_raw


def _single_line(text: str) -> str:
    return " ".join(text.split())


def format_text(statement: AidStatement, style: Style = Style.PLAIN) -> str:
    """Render to canonical text.

    Resolved headings print their canonical display; unresolved ones keep
    the raw spelling. Whitespace runs inside statement texts collapse to
    single spaces so the output is one line even for statements parsed out
    of wrapped paragraphs.
    """
    parts = []
    for pair in statement.pairs:
        name = _display(pair)
        if style is Style.MARKDOWN:
            name = f"*{name}*"
        parts.append(f"{name}: {_single_line(pair.statement)}")
    return "AID Statement: " + "; ".join(parts) + "."


def canonicalize(statement: AidStatement, reorder: bool = False) -> AidStatement:
    """Normalize heading spellings; optionally sort pairs into taxonomy order.

    Reordering is stable: duplicates keep their relative order, and pairs
    with unresolved headings travel with the last resolved pair they
    followed. The result is always terminated. Spans are left pointing at
    the pre-canonical source positions.
    """
    pairs = []
    for pair in statement.pairs:
        match = resolve(pair.heading_raw)
        if match.outcome is not MatchOutcome.NONE:
            canonical = entry_for(match.id).display
            pairs.append(replace(pair, heading_raw=canonical, heading=match.id))
        else:
            pairs.append(pair)

    if reorder:
        keyed = []
        anchor = 0
        for pair in pairs:
            if pair.heading is not None:
                anchor = pair.heading.ordinal
            keyed.append((anchor, pair))
        keyed.sort(key=lambda item: item[0])
        pairs = [pair for _, pair in keyed]

    return replace(statement, pairs=tuple(pairs), terminated=True)
