"""Rule engine over parsed or built statements.

The linter merges the parser's diagnostics with its own model-level rules
(duplicates, ordering, placeholders, confusables, spelling), normalizes
severities for the configured mode, applies per-rule overrides, and sorts
everything by source position. Linting is pure: it always returns a
report, never raises on statement content.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from . import rules
from .model import AidStatement, Diagnostic, Severity, SourceSpan
from .parser import ParseMode
from .taxonomy import MatchOutcome, entry_for, resolve, suggest

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

# Colon/semicolon look-alikes worth flagging inside statement text:
# fullwidth, small-form, Armenian, Arabic, and the Greek question mark.
CONFUSABLES = "：；︓︔﹔﹕։؛;"


class Verdict(Enum):
    PASS = "pass"
    FAIL = "fail"


class ConfigError(ValueError):
    """Lint configuration rejected."""


_OFF = "off"
_SEVERITY_WORDS = {
    "error": Severity.ERROR,
    "warning": Severity.WARNING,
}


@dataclass(frozen=True)
class LintConfig:
    """Mode, per-rule severity overrides, and suggestion budget.

    Override values are Severity members or the string "off". Grammar
    error rules (AID-E001..E007) may not be switched off in strict mode.
    """

    mode: ParseMode = ParseMode.LENIENT
    severity_overrides: dict = field(default_factory=dict)
    max_suggestions: int = 3

    def __post_init__(self) -> None:
        if self.max_suggestions < 1:
            raise ConfigError("max_suggestions must be positive")
        for code, value in self.severity_overrides.items():
            if code not in rules.ALL_CODES:
                raise ConfigError(f"unknown rule code in overrides: {code}")
            if not (value == _OFF or isinstance(value, Severity)):
                raise ConfigError(f"override for {code} must be a Severity or 'off'")
            if (
                value == _OFF
                and self.mode is ParseMode.STRICT
                and code in rules.GRAMMAR_ERROR_CODES
            ):
                raise ConfigError(f"{code} is a grammar rule and cannot be off in strict mode")


def load_config(path: str, mode: ParseMode | None = None) -> LintConfig:
    """Read a TOML config file.

    Schema::

        mode = "lenient"          # or "strict"; optional
        max_suggestions = 3       # optional
        [rules]
        AID-W102 = "off"          # or "error" / "warning"

    A ``mode`` argument (e.g. from a CLI flag) wins over the file's mode.
    """
    with open(path, "rb") as handle:
        try:
            data = tomllib.load(handle)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc
    return config_from_dict(data, mode=mode, source=path)


def config_from_dict(data: dict, mode: ParseMode | None = None, source: str = "config") -> LintConfig:
    known = {"mode", "max_suggestions", "rules"}
    for key in data:
        if key not in known:
            raise ConfigError(f"{source}: unknown key {key!r}")
    if mode is None:
        raw_mode = data.get("mode", "lenient")
        try:
            mode = ParseMode(raw_mode)
        except ValueError:
            raise ConfigError(f"{source}: mode must be 'strict' or 'lenient', got {raw_mode!r}")
    overrides = {}
    for code, word in data.get("rules", {}).items():
        if not isinstance(word, str) or word.lower() not in (_OFF, *_SEVERITY_WORDS):
            raise ConfigError(f"{source}: rule value for {code} must be 'off', 'error', or 'warning'")
        word = word.lower()
        overrides[code] = _OFF if word == _OFF else _SEVERITY_WORDS[word]
    max_suggestions = data.get("max_suggestions", 3)
    if not isinstance(max_suggestions, int):
        raise ConfigError(f"{source}: max_suggestions must be an integer")
    return LintConfig(mode=mode, severity_overrides=overrides, max_suggestions=max_suggestions)


@dataclass(frozen=True)
class LintReport:
    diagnostics: list[Diagnostic]
    error_count: int
    warning_count: int
    verdict: Verdict

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS


def rule_catalog() -> list[tuple[str, Severity, str]]:
    """The published rules: (code, default severity, description)."""
    return list(rules.CATALOG)


def _zero_span_at(span: SourceSpan) -> SourceSpan:
    return SourceSpan(span.end_byte, span.end_byte, span.start_line, span.start_col)


def _model_findings(statement: AidStatement, config: LintConfig) -> Iterable[tuple[str, SourceSpan, str, str | None]]:
    """(code, span, message, suggestion) findings derivable from the model.

    Mirrors the parser's spans for codes both sides can emit, so merging
    never double-reports.
    """
    pairs = statement.pairs
    if not statement.terminated:
        yield (
            rules.MISSING_TERMINATOR,
            _zero_span_at(pairs[-1].statement_span),
            "the last statement must end with a period",
            None,
        )

    first = resolve(pairs[0].heading_raw)
    if first.outcome is not MatchOutcome.NONE and first.id.ordinal != 1:
        yield (
            rules.TOOL_SECTION_NOT_FIRST,
            pairs[0].heading_span,
            "the first pair must be the Artificial Intelligence Tool section",
            None,
        )

    seen: dict[int, int] = {}
    previous_ordinal = None
    for index, pair in enumerate(pairs):
        match = resolve(pair.heading_raw)
        if match.outcome is MatchOutcome.ALIAS:
            yield (
                rules.ALIAS_SPELLING,
                pair.heading_span,
                f"non-canonical heading spelling {pair.heading_raw!r}",
                entry_for(match.id).display,
            )
        elif match.outcome is MatchOutcome.NONE:
            candidates = suggest(pair.heading_raw, config.max_suggestions)
            hint = ", ".join(entry.display for entry, _ in candidates) or None
            yield (
                rules.UNKNOWN_HEADING,
                pair.heading_span,
                f"unknown heading {pair.heading_raw!r}",
                hint,
            )
            continue

        ordinal = match.id.ordinal
        if ordinal in seen:
            yield (
                rules.DUPLICATE_HEADING,
                pair.heading_span,
                f"heading {entry_for(match.id).display!r} already appeared as pair {seen[ordinal] + 1}",
                None,
            )
        else:
            seen[ordinal] = index

        # Ordering is judged over the stage pairs only; pair 0's position
        # is the tool-first rule's business (AID-E002).
        if index > 0:
            if previous_ordinal is not None and ordinal < previous_ordinal:
                yield (
                    rules.OUT_OF_ORDER,
                    pair.heading_span,
                    f"heading {entry_for(match.id).display!r} is out of taxonomy order",
                    None,
                )
            previous_ordinal = ordinal

    for pair in pairs:
        if len(pair.statement.strip()) < 3:
            yield (
                rules.PLACEHOLDER_TEXT,
                pair.statement_span,
                f"statement text {pair.statement!r} looks like a placeholder",
                None,
            )
        found = [ch for ch in CONFUSABLES if ch in pair.statement]
        if found:
            listing = ", ".join(f"U+{ord(ch):04X}" for ch in found)
            yield (
                rules.CONFUSABLE_PUNCTUATION,
                pair.statement_span,
                f"statement text contains confusable punctuation ({listing})",
                None,
            )


def lint(
    statement: AidStatement | None,
    parse_diagnostics: Iterable[Diagnostic] = (),
    config: LintConfig | None = None,
) -> LintReport:
    """Evaluate the rule catalog; always returns a report.

    ``statement`` may be None (a failed strict parse); the report is then
    built from the parse diagnostics alone.
    """
    config = config or LintConfig()
    strict = config.mode is ParseMode.STRICT

    # Resolution-class findings (tool-first, unknown heading, alias
    # spelling) are recomputed from the model whenever a statement exists,
    # so config (mode, max_suggestions) governs them; the parser remains
    # authoritative for grammar-shape findings it alone can see.
    resolution = (rules.TOOL_SECTION_NOT_FIRST, rules.UNKNOWN_HEADING, rules.ALIAS_SPELLING)
    merged: list[Diagnostic] = [
        d for d in parse_diagnostics if statement is None or d.code not in resolution
    ]
    statement_level = {d.code for d in merged if d.code in (rules.MISSING_LABEL, rules.MISSING_TERMINATOR)}

    if statement is not None:
        for code, span, message, suggestion in _model_findings(statement, config):
            if code in (rules.MISSING_LABEL, rules.MISSING_TERMINATOR) and code in statement_level:
                continue
            merged.append(Diagnostic(code, rules.default_severity(code, strict), message, span, suggestion))

    final: list[Diagnostic] = []
    for diagnostic in merged:
        override = config.severity_overrides.get(diagnostic.code)
        if override == _OFF:
            continue
        severity = override if isinstance(override, Severity) else rules.default_severity(diagnostic.code, strict)
        if severity is not diagnostic.severity:
            diagnostic = Diagnostic(
                diagnostic.code, severity, diagnostic.message, diagnostic.span, diagnostic.suggestion
            )
        final.append(diagnostic)

    final.sort(key=lambda d: (d.span.start_byte, d.span.end_byte, d.code))
    errors = sum(1 for d in final if d.severity is Severity.ERROR)
    warnings = len(final) - errors
    return LintReport(
        diagnostics=final,
        error_count=errors,
        warning_count=warnings,
        verdict=Verdict.FAIL if errors else Verdict.PASS,
    )
