"""JSON interchange format for statements (format version 1.0).

The document shape::

    {"aid_version": "1.0",
     "pairs": [{"ordinal": 1,
                "slug": "artificial_intelligence_tool",
                "display": "Artificial Intelligence Tool",
                "raw": "Artificial Intelligence Tool",
                "text": "ChatGPT v.4o"}, ...]}

Unresolved headings carry null ordinal/slug/display with ``raw``
preserved. ``include_spans`` adds ``heading_span``/``statement_span`` per
pair and a top-level ``label_span``. Key order is fixed and output is
byte-deterministic. ``ordinal`` and ``slug`` are emitted redundantly;
slug is the stable join key for consumers.

Deserialization validates against the same shape and reports violations
with JSON-pointer paths. The schema itself is published as a repo
artifact (schema/aid-statement.schema.json) and returned by
:func:`json_schema`.
"""

from __future__ import annotations

import json

from .model import AidStatement, DisclosurePair, Origin, SourceSpan
from .taxonomy import Heading, entry_for

FORMAT_VERSION = "1.0"


class InterchangeError(ValueError):
    """Document rejected; ``path`` is a JSON pointer to the offender."""

    def __init__(self, path: str, message: str) -> None:
        self.path = path
        super().__init__(f"{path}: {message}")


class UnsupportedVersion(InterchangeError):
    def __init__(self, found: object) -> None:
        super().__init__("/aid_version", f"unsupported version {found!r} (expected {FORMAT_VERSION!r})")


class EmptyPairs(InterchangeError):
    def __init__(self) -> None:
        super().__init__("/pairs", "a statement needs at least one pair")


def _span_dict(span: SourceSpan) -> dict:
    return {
        "start_byte": span.start_byte,
        "end_byte": span.end_byte,
        "start_line": span.start_line,
        "start_col": span.start_col,
    }


def to_json(statement: AidStatement, include_spans: bool = False) -> str:
    """Serialize; no trailing newline (file writers append exactly one)."""
    pairs = []
    for pair in statement.pairs:
        entry = entry_for(pair.heading) if pair.heading is not None else None
        obj = {
            "ordinal": entry.ordinal if entry else None,
            "slug": entry.slug if entry else None,
            "display": entry.display if entry else None,
            "raw": pair.heading_raw,
            "text": pair.statement,
        }
        if include_spans:
            obj["heading_span"] = _span_dict(pair.heading_span)
            obj["statement_span"] = _span_dict(pair.statement_span)
        pairs.append(obj)
    document: dict = {"aid_version": FORMAT_VERSION, "pairs": pairs}
    if include_spans:
        document["label_span"] = _span_dict(statement.label_span)
    return json.dumps(document, ensure_ascii=False, separators=(",", ":"))


def _expect(condition: bool, path: str, message: str) -> None:
    if not condition:
        raise InterchangeError(path, message)


def from_json(document: str) -> AidStatement:
    """Parse and validate an interchange document into a built statement.

    Spans in the document are ignored; the result carries synthetic spans
    and origin "built". Raises :class:`InterchangeError` (with a JSON
    pointer) on any schema violation, :class:`UnsupportedVersion` or
    :class:`EmptyPairs` for those specific cases.
    """
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise InterchangeError("", f"not valid JSON: {exc}") from exc
    _expect(isinstance(data, dict), "", "top level must be an object")
    for key in data:
        _expect(key in ("aid_version", "pairs", "label_span"), f"/{key}", "unknown key")
    if data.get("aid_version") != FORMAT_VERSION:
        raise UnsupportedVersion(data.get("aid_version"))
    _expect("pairs" in data, "/pairs", "missing required key")
    raw_pairs = data["pairs"]
    _expect(isinstance(raw_pairs, list), "/pairs", "must be an array")
    if not raw_pairs:
        raise EmptyPairs()

    pairs = []
    for i, item in enumerate(raw_pairs):
        path = f"/pairs/{i}"
        _expect(isinstance(item, dict), path, "must be an object")
        for key in item:
            _expect(
                key in ("ordinal", "slug", "display", "raw", "text", "heading_span", "statement_span"),
                f"{path}/{key}",
                "unknown key",
            )
        for key in ("ordinal", "slug", "display", "raw", "text"):
            _expect(key in item, f"{path}/{key}", "missing required key")

        ordinal = item["ordinal"]
        heading = None
        if ordinal is not None:
            _expect(
                isinstance(ordinal, int) and not isinstance(ordinal, bool) and 1 <= ordinal <= 14,
                f"{path}/ordinal",
                "must be an integer in 1..14 or null",
            )
            heading = Heading(ordinal)
            entry = entry_for(heading)
            _expect(item["slug"] == entry.slug, f"{path}/slug", f"must be {entry.slug!r} for ordinal {ordinal}")
            _expect(
                item["display"] in (None, entry.display),
                f"{path}/display",
                f"must be {entry.display!r} for ordinal {ordinal}",
            )
        else:
            _expect(item["slug"] is None, f"{path}/slug", "must be null when ordinal is null")
            _expect(item["display"] is None, f"{path}/display", "must be null when ordinal is null")

        raw = item["raw"]
        _expect(isinstance(raw, str) and raw.strip() != "", f"{path}/raw", "must be a nonempty string")
        text = item["text"]
        _expect(isinstance(text, str) and text.strip() != "", f"{path}/text", "must be a nonempty string")
        for char in ":;":
            _expect(char not in text, f"{path}/text", f"may not contain {char!r}")
            _expect(char not in raw, f"{path}/raw", f"may not contain {char!r}")

        pairs.append(DisclosurePair(heading_raw=raw, heading=heading, statement=text))

    return AidStatement(pairs=tuple(pairs), origin=Origin.BUILT)


_SPAN_SCHEMA = {
    "type": "object",
    "required": ["start_byte", "end_byte", "start_line", "start_col"],
    "additionalProperties": False,
    "properties": {
        "start_byte": {"type": "integer", "minimum": 0},
        "end_byte": {"type": "integer", "minimum": 0},
        "start_line": {"type": "integer", "minimum": 1},
        "start_col": {"type": "integer", "minimum": 1},
    },
}

_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "aid-statement.schema.json",
    "title": "AID Statement interchange document, version 1.0",
    "type": "object",
    "required": ["aid_version", "pairs"],
    "additionalProperties": False,
    "properties": {
        "aid_version": {"const": "1.0"},
        "pairs": {
            "type": "array",
            "minItems": 1,
            "items": {"$ref": "#/$defs/pair"},
        },
        "label_span": {"$ref": "#/$defs/span"},
    },
    "$defs": {
        "pair": {
            "type": "object",
            "required": ["ordinal", "slug", "display", "raw", "text"],
            "additionalProperties": False,
            "properties": {
                "ordinal": {"type": ["integer", "null"], "minimum": 1, "maximum": 14},
                "slug": {"type": ["string", "null"], "pattern": "^[a-z][a-z_]*$"},
                "display": {"type": ["string", "null"]},
                "raw": {"type": "string", "minLength": 1, "pattern": "^[^:;]+$"},
                "text": {"type": "string", "minLength": 1, "pattern": "^[^:;]+$"},
                "heading_span": {"$ref": "#/$defs/span"},
                "statement_span": {"$ref": "#/$defs/span"},
            },
        },
        "span": _SPAN_SCHEMA,
    },
}


def json_schema() -> str:
    """The published JSON Schema, exactly as shipped in the repo."""
    return json.dumps(_SCHEMA, indent=2, ensure_ascii=False) + "\n"
