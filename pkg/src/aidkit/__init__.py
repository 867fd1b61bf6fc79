"""Tooling for Artificial Intelligence Disclosure (AID) Statements.

An AID Statement is an appended disclosure block ("AID Statement: ...")
that enumerates AI use across the stages of a work as heading:statement
pairs, drawn from a closed taxonomy of 14 headings. This package parses,
lints, formats, extracts, and serializes such statements; the ``aid``
command wires the same operations into a CLI.
"""

from .extractor import DocumentFormat, ExtractedStatement, extract
from .formatter import Style, canonicalize, format_text
from .interchange import (
    EmptyPairs,
    InterchangeError,
    UnsupportedVersion,
    from_json,
    json_schema,
    to_json,
)
from .linter import (
    ConfigError,
    LintConfig,
    LintReport,
    Verdict,
    lint,
    load_config,
    rule_catalog,
)
from .model import (
    AidStatement,
    BuildError,
    Diagnostic,
    DisclosurePair,
    EmptyStatementText,
    ForbiddenCharacter,
    Origin,
    Severity,
    SourceSpan,
    StatementBuilder,
    ToolSectionDuplicated,
)
from .parser import ParseMode, ParseOutcome, locate_label, parse_statement
from .taxonomy import (
    Heading,
    HeadingEntry,
    MatchOutcome,
    MatchResult,
    all_headings,
    entry_for,
    resolve,
    suggest,
)

__version__ = "0.1.0"

__all__ = [
    "AidStatement",
    "BuildError",
    "ConfigError",
    "Diagnostic",
    "DisclosurePair",
    "DocumentFormat",
    "EmptyPairs",
    "EmptyStatementText",
    "ExtractedStatement",
    "ForbiddenCharacter",
    "Heading",
    "HeadingEntry",
    "InterchangeError",
    "LintConfig",
    "LintReport",
    "MatchOutcome",
    "MatchResult",
    "Origin",
    "ParseMode",
    "ParseOutcome",
    "Severity",
    "SourceSpan",
    "StatementBuilder",
    "Style",
    "ToolSectionDuplicated",
    "UnsupportedVersion",
    "Verdict",
    "all_headings",
    "canonicalize",
    "entry_for",
    "extract",
    "format_text",
    "from_json",
    "json_schema",
    "lint",
    "load_config",
    "locate_label",
    "parse_statement",
    "resolve",
    "rule_catalog",
    "suggest",
    "to_json",
]
