"""The published rule catalog: codes, default severities, descriptions.

Codes are stable and never reused across versions (the gap at AID-E005 is
deliberate). AID-E008 is the one mode-dependent rule: unknown headings are
errors under a strict, closed reading of the taxonomy and warnings under a
lenient, forward-compatible one.
"""

from __future__ import annotations

from .model import Severity

MISSING_LABEL = "AID-E001"
TOOL_SECTION_NOT_FIRST = "AID-E002"
MISSING_TERMINATOR = "AID-E003"
COLON_IN_STATEMENT = "AID-E004"
NO_SEPARATOR = "AID-E006"
EMPTY_SEGMENT = "AID-E007"
UNKNOWN_HEADING = "AID-E008"
DUPLICATE_HEADING = "AID-W101"
OUT_OF_ORDER = "AID-W102"
ALIAS_SPELLING = "AID-W103"
PLACEHOLDER_TEXT = "AID-W104"
CONFUSABLE_PUNCTUATION = "AID-W105"
TRAILING_CONTENT = "AID-W106"
LABEL_CASING = "AID-W107"

# (code, default severity, description), E-codes before W-codes.
CATALOG: tuple[tuple[str, Severity, str], ...] = (
    (
        MISSING_LABEL,
        Severity.ERROR,
        'no "AID Statement:" label introduces the statement',
    ),
    (
        TOOL_SECTION_NOT_FIRST,
        Severity.ERROR,
        "the first pair must be the Artificial Intelligence Tool section",
    ),
    (
        MISSING_TERMINATOR,
        Severity.ERROR,
        "the last statement must end with a period",
    ),
    (
        COLON_IN_STATEMENT,
        Severity.ERROR,
        "':' is reserved for separating headings from statements and may not "
        "appear inside statement text",
    ),
    (
        NO_SEPARATOR,
        Severity.ERROR,
        "segment has no ':' separating a heading from its statement",
    ),
    (
        EMPTY_SEGMENT,
        Severity.ERROR,
        "empty segment, heading, or statement text",
    ),
    (
        UNKNOWN_HEADING,
        Severity.ERROR,
        "heading is not one of the 14 disclosure headings (error when strict, "
        "warning with suggestions when lenient)",
    ),
    (
        DUPLICATE_HEADING,
        Severity.WARNING,
        "heading appears more than once",
    ),
    (
        OUT_OF_ORDER,
        Severity.WARNING,
        "pairs after the tool section are not in taxonomy order",
    ),
    (
        ALIAS_SPELLING,
        Severity.WARNING,
        "heading uses a tolerated non-canonical spelling",
    ),
    (
        PLACEHOLDER_TEXT,
        Severity.WARNING,
        "statement text is shorter than 3 characters, likely a placeholder",
    ),
    (
        CONFUSABLE_PUNCTUATION,
        Severity.WARNING,
        "statement text contains confusable punctuation (fullwidth or other "
        "colon/semicolon look-alikes)",
    ),
    (
        TRAILING_CONTENT,
        Severity.WARNING,
        "content follows the terminal period inside the statement's paragraph",
    ),
    (
        LABEL_CASING,
        Severity.WARNING,
        'label casing differs from the canonical "AID Statement"',
    ),
)

ALL_CODES = frozenset(code for code, _, _ in CATALOG)
# Grammar errors that a strict configuration may not disable.
GRAMMAR_ERROR_CODES = frozenset(
    {
        MISSING_LABEL,
        TOOL_SECTION_NOT_FIRST,
        MISSING_TERMINATOR,
        COLON_IN_STATEMENT,
        NO_SEPARATOR,
        EMPTY_SEGMENT,
    }
)

_DEFAULTS = {code: severity for code, severity, _ in CATALOG}


def default_severity(code: str, strict: bool) -> Severity:
    """Catalog severity for ``code``; E008 downgrades when not strict."""
    if code == UNKNOWN_HEADING and not strict:
        return Severity.WARNING
    return _DEFAULTS[code]


def describe(code: str) -> str:
    for candidate, _, description in CATALOG:
        if candidate == code:
            return description
    raise KeyError(code)
