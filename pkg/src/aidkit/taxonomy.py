"""Registry of the 14 AID disclosure headings.

The taxonomy is closed: fourteen headings, numbered 1 through 14, each with
a canonical display form, a definition, and a small set of tolerated alias
spellings (plural forms, dash variants, "&"/"and"). Matching happens on two
levels:

* surface normalization (emphasis markers stripped, whitespace collapsed,
  lowercased) decides whether an input is the canonical spelling;
* deep normalization (additionally folding en/em dashes and hyphens to one
  dash token and "&" to "and") decides whether it is a tolerated alias.

The registry is built once at import time and is immutable afterwards, so
it is safe for unrestricted concurrent reads.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum


class Heading(Enum):
    """Identifier for one of the 14 disclosure headings.

    The enum value is the heading's ordinal (1..14); ``slug`` is the stable
    lowercase identifier used in machine-readable output.
    """

    ARTIFICIAL_INTELLIGENCE_TOOL = 1
    CONCEPTUALIZATION = 2
    METHODOLOGY = 3
    INFORMATION_COLLECTION = 4
    DATA_COLLECTION_METHOD = 5
    EXECUTION = 6
    DATA_CURATION = 7
    DATA_ANALYSIS = 8
    PRIVACY_AND_SECURITY = 9
    INTERPRETATION = 10
    VISUALIZATION = 11
    WRITING_REVIEW_EDITING = 12
    WRITING_TRANSLATION = 13
    PROJECT_ADMINISTRATION = 14

    @property
    def ordinal(self) -> int:
        return self.value

    @property
    def slug(self) -> str:
        return self.name.lower()

    @property
    def display(self) -> str:
        return _ENTRIES[self.value - 1].display

    def __repr__(self) -> str:  # pragma: no cover - debugging nicety
        return f"<Heading {self.value}:{self.slug}>"


@dataclass(frozen=True)
class HeadingEntry:
    """One taxonomy row: identity, canonical spelling, definition, aliases.

    ``aliases`` holds tolerated non-canonical surface spellings in surface-
    normalized form. Dash and ampersand variants not listed here still
    resolve, via deep normalization.
    """

    id: Heading
    display: str
    definition: str
    aliases: frozenset[str] = field(default_factory=frozenset)

    @property
    def ordinal(self) -> int:
        return self.id.ordinal

    @property
    def slug(self) -> str:
        return self.id.slug


class MatchOutcome(Enum):
    EXACT = "exact"
    ALIAS = "alias"
    NONE = "none"


@dataclass(frozen=True)
class MatchResult:
    """Result of resolving raw heading text against the registry."""

    outcome: MatchOutcome
    id: Heading | None
    normalized_input: str

    def __bool__(self) -> bool:
        return self.outcome is not MatchOutcome.NONE


# Canonical displays and definitions. Display forms are byte-exact,
# including the en dash in headings 12-13; heading 1 is the singular form
# used in practice, with the "(s)" spelling registered as an alias.
_TABLE: list[tuple[Heading, str, str, tuple[str, ...]]] = [
    (
        Heading.ARTIFICIAL_INTELLIGENCE_TOOL,
        "Artificial Intelligence Tool",
        "The selection of tool or tools and versions of those tools used and "
        "dates of use. May also include note of any known biases or "
        "limitations of the models or data sets.",
        ("Artificial Intelligence Tool(s)", "Artificial Intelligence Tools"),
    ),
    (
        Heading.CONCEPTUALIZATION,
        "Conceptualization",
        "The development of the research idea or hypothesis including framing "
        "or revision of research questions and hypotheses.",
        (),
    ),
    (
        Heading.METHODOLOGY,
        "Methodology",
        "The planning for the execution of the study including all direct "
        "contributions to the study design.",
        (),
    ),
    (
        Heading.INFORMATION_COLLECTION,
        "Information Collection",
        "The use of artificial intelligence to surface patterns in existing "
        "literature and identify information relevant to the framing, "
        "development, or design of the study.",
        (),
    ),
    (
        Heading.DATA_COLLECTION_METHOD,
        "Data Collection Method",
        "The development or design of software or instruments used in the "
        "study.",
        ("Data Collection Methods",),
    ),
    (
        Heading.EXECUTION,
        "Execution",
        "The direct conduct of research procedures or tasks (e.g. AI web "
        "scraping, synthetic surveys, etc.)",
        (),
    ),
    (
        Heading.DATA_CURATION,
        "Data Curation",
        "The management and organization of those data.",
        (),
    ),
    (
        Heading.DATA_ANALYSIS,
        "Data Analysis",
        "The performance of statistical or mathematical analysis, "
        "regressions, text analysis, and more using artificial intelligence "
        "tools.",
        (),
    ),
    (
        Heading.PRIVACY_AND_SECURITY,
        "Privacy and Security",
        "The ways in which data privacy and security were upheld in alignment "
        "with the expectations of ethical conduct of research, disciplinary "
        "guidelines, and institutional policies.",
        ("Privacy & Security",),
    ),
    (
        Heading.INTERPRETATION,
        "Interpretation",
        "The use of artificial intelligence tools to categorize, summarize, "
        "or manipulate data and suggest associated conclusions.",
        (),
    ),
    (
        Heading.VISUALIZATION,
        "Visualization",
        "The creation of visualizations or other graphical representations "
        "of the data.",
        (),
    ),
    (
        Heading.WRITING_REVIEW_EDITING,
        "Writing – Review & Editing",
        "The revision and editing of the manuscript.",
        (
            "Writing - Review & Editing",
            "Writing — Review & Editing",
            "Writing – Review and Editing",
        ),
    ),
    (
        Heading.WRITING_TRANSLATION,
        "Writing – Translation",
        "The use of artificial intelligence to translate text across "
        "languages at any point in the drafting process.",
        ("Writing - Translation", "Writing — Translation"),
    ),
    (
        Heading.PROJECT_ADMINISTRATION,
        "Project Administration",
        "Any administrative tasks related to the study, including managing "
        "budgets, timelines, and communications.",
        (),
    ),
]

_EMPHASIS_CHARS = "*_"
_DASH_RE = re.compile(r"\s*[-‐‑‒–—]\s*")
_AMP_RE = re.compile(r"\s*&\s*")


def normalize_surface(text: str) -> str:
    """Strip emphasis markers, collapse whitespace, lowercase."""
    stripped = text.strip().strip(_EMPHASIS_CHARS).strip()
    return " ".join(stripped.split()).lower()


def normalize_deep(text: str) -> str:
    """Surface normalization plus dash folding and "&" -> "and"."""
    s = normalize_surface(text)
    s = _DASH_RE.sub(" - ", s)
    s = _AMP_RE.sub(" and ", s)
    return " ".join(s.split())


def _plural_strips(key: str) -> list[str]:
    """Candidate keys with a trailing "(s)" or plural "s" removed."""
    candidates = []
    if key.endswith("(s)"):
        candidates.append(key[:-3].rstrip())
    words = key.rsplit(" ", 1)
    last = words[-1]
    if last.endswith("s") and len(last) > 1 and not last.endswith("(s)"):
        candidates.append(key[:-1])
    return candidates


def _build_registry() -> tuple[tuple[HeadingEntry, ...], dict[str, Heading], dict[str, Heading]]:
    entries = []
    by_surface: dict[str, Heading] = {}
    by_deep: dict[str, Heading] = {}
    for heading, display, definition, aliases in _TABLE:
        entry = HeadingEntry(
            id=heading,
            display=display,
            definition=definition,
            aliases=frozenset(normalize_surface(a) for a in aliases),
        )
        entries.append(entry)
        surface = normalize_surface(display)
        if surface in by_surface:
            raise AssertionError(f"duplicate canonical form: {surface!r}")
        by_surface[surface] = heading
        for key in {normalize_deep(display), *(normalize_deep(a) for a in aliases)}:
            owner = by_deep.setdefault(key, heading)
            if owner is not heading:
                raise AssertionError(f"alias {key!r} claimed by {owner} and {heading}")
    return tuple(entries), by_surface, by_deep


_ENTRIES, _BY_SURFACE, _BY_DEEP = _build_registry()


def all_headings() -> list[HeadingEntry]:
    """All 14 entries in taxonomy order (ordinal 1 first)."""
    return list(_ENTRIES)


def entry_for(heading: Heading) -> HeadingEntry:
    return _ENTRIES[heading.ordinal - 1]


def resolve(raw: str) -> MatchResult:
    """Resolve raw heading text to a taxonomy heading.

    Exact means the input is the canonical spelling (up to emphasis,
    whitespace, and case); Alias means a tolerated variant matched,
    possibly after stripping a trailing "(s)" or plural "s"; None means
    no match. Never raises.
    """
    surface = normalize_surface(raw)
    deep = normalize_deep(raw)
    heading = _BY_SURFACE.get(surface)
    if heading is not None:
        return MatchResult(MatchOutcome.EXACT, heading, deep)
    heading = _BY_DEEP.get(deep)
    if heading is not None:
        return MatchResult(MatchOutcome.ALIAS, heading, deep)
    for candidate in _plural_strips(deep):
        heading = _BY_DEEP.get(candidate)
        if heading is not None:
            return MatchResult(MatchOutcome.ALIAS, heading, candidate)
    return MatchResult(MatchOutcome.NONE, None, deep)


def levenshtein(a: str, b: str) -> int:
    """Edit distance (insert/delete/substitute, all cost 1)."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a):
        current = [i + 1]
        for j, cb in enumerate(b):
            current.append(
                min(previous[j + 1] + 1, current[j] + 1, previous[j] + (ca != cb))
            )
        previous = current
    return previous[-1]


def suggest(raw: str, limit: int) -> list[tuple[HeadingEntry, int]]:
    """Nearest headings by edit distance over deep-normalized text.

    Returns up to ``limit`` (entry, distance) pairs sorted by distance then
    ordinal. Entries farther than max(3, ceil(len/3)) are excluded, so the
    list may be empty.
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    query = normalize_deep(raw)
    cutoff = max(3, math.ceil(len(query) / 3))
    ranked = []
    for entry in _ENTRIES:
        distance = levenshtein(query, normalize_deep(entry.display))
        if distance <= cutoff:
            ranked.append((entry, distance))
    ranked.sort(key=lambda pair: (pair[1], pair[0].ordinal))
    return ranked[:limit]
