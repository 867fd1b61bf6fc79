"""The ``aid`` command line tool.

Subcommands: lint, fmt, extract, convert, new, headings. Exit codes
follow one contract everywhere: 0 success/pass, 1 content failure (lint
errors, unparseable input, no statements with --fail-if-none), 2 usage or
I/O failure. Data goes to stdout; diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import interchange
from .extractor import DocumentFormat, extract
from .formatter import Style, canonicalize, format_text
from .linter import ConfigError, LintConfig, LintReport, Verdict, lint, load_config, rule_catalog
from .model import BuildError, Diagnostic, Severity, StatementBuilder
from .parser import ParseMode, parse_statement
from .taxonomy import MatchOutcome, all_headings, resolve, suggest

PASS = 0
FAIL = 1
USAGE = 2


def _use_color(stream) -> bool:
    return os.environ.get("NO_COLOR") is None and hasattr(stream, "isatty") and stream.isatty()


def _severity_word(diagnostic: Diagnostic, color: bool) -> str:
    word = diagnostic.severity.value
    if not color:
        return word
    code = "31" if diagnostic.severity is Severity.ERROR else "33"
    return f"\x1b[{code}m{word}\x1b[0m"


def _print_diagnostics(diagnostics, where: str) -> None:
    color = _use_color(sys.stderr)
    for d in diagnostics:
        location = f"{where}:{d.span.start_line}:{d.span.start_col}"
        line = f"{location}: {_severity_word(d, color)} {d.code}: {d.message}"
        if d.suggestion:
            line += f" (suggestion: {d.suggestion})"
        print(line, file=sys.stderr)


def _read_input(path: str) -> str:
    """Read a file or stdin ("-"), rejecting invalid UTF-8."""
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as handle:
            data = handle.read()
    return data.decode("utf-8")


def _fail_usage(message: str) -> int:
    print(f"aid: error: {message}", file=sys.stderr)
    return USAGE


def _mode_from_args(args) -> ParseMode | None:
    if getattr(args, "strict", False):
        return ParseMode.STRICT
    if getattr(args, "lenient", False):
        return ParseMode.LENIENT
    return None


def _lint_config(args) -> LintConfig:
    mode = _mode_from_args(args)
    config_path = getattr(args, "config", None) or os.environ.get("AID_CONFIG")
    if config_path:
        return load_config(config_path, mode=mode)
    return LintConfig(mode=mode or ParseMode.LENIENT)


def _report_dict(report: LintReport, where: str) -> dict:
    return {
        "verdict": report.verdict.value,
        "error_count": report.error_count,
        "warning_count": report.warning_count,
        "diagnostics": [
            {
                "code": d.code,
                "severity": d.severity.value,
                "message": d.message,
                "path": where,
                "line": d.span.start_line,
                "col": d.span.start_col,
                "start_byte": d.span.start_byte,
                "end_byte": d.span.end_byte,
                "suggestion": d.suggestion,
            }
            for d in report.diagnostics
        ],
    }


def cmd_lint(args) -> int:
    try:
        config = _lint_config(args)
    except (OSError, ConfigError) as exc:
        return _fail_usage(str(exc))
    try:
        text = _read_input(args.path)
    except OSError as exc:
        return _fail_usage(str(exc))
    except UnicodeDecodeError as exc:
        return _fail_usage(f"{args.path}: not valid UTF-8 ({exc})")

    outcome = parse_statement(text, config.mode)
    report = lint(outcome.statement, outcome.diagnostics, config)
    where = "<stdin>" if args.path == "-" else args.path
    if args.format == "json":
        print(json.dumps(_report_dict(report, where), ensure_ascii=False))
    else:
        _print_diagnostics(report.diagnostics, where)
        summary = f"{where}: {report.error_count} error(s), {report.warning_count} warning(s)"
        print(f"{summary}: {report.verdict.value}", file=sys.stderr)
    return PASS if report.verdict is Verdict.PASS else FAIL


def cmd_fmt(args) -> int:
    try:
        text = _read_input(args.path)
    except OSError as exc:
        return _fail_usage(str(exc))
    except UnicodeDecodeError as exc:
        return _fail_usage(f"{args.path}: not valid UTF-8 ({exc})")

    where = "<stdin>" if args.path == "-" else args.path
    outcome = parse_statement(text, ParseMode.LENIENT)
    if outcome.statement is None or outcome.errors:
        _print_diagnostics(outcome.diagnostics, where)
        return FAIL
    statement = canonicalize(outcome.statement, reorder=args.reorder)
    style = Style.MARKDOWN if args.markdown else Style.PLAIN
    rendered = format_text(statement, style)
    if args.check:
        return PASS if text.rstrip("\n") == rendered else FAIL
    print(rendered)
    return PASS


def _extraction_dict(result) -> dict:
    statement = result.outcome.statement
    if statement is not None:
        obj = json.loads(interchange.to_json(statement))
    else:
        obj = {"aid_version": interchange.FORMAT_VERSION, "pairs": []}
    obj["block_index"] = result.block_index
    obj["document_span"] = {
        "start_byte": result.document_span.start_byte,
        "end_byte": result.document_span.end_byte,
        "start_line": result.document_span.start_line,
        "start_col": result.document_span.start_col,
    }
    return obj


def cmd_extract(args) -> int:
    fmt = DocumentFormat.MARKDOWN if args.markdown_input else DocumentFormat.PLAIN_TEXT
    all_results = []
    for path in sorted(args.paths):
        try:
            text = _read_input(path)
        except OSError as exc:
            return _fail_usage(str(exc))
        except UnicodeDecodeError as exc:
            return _fail_usage(f"{path}: not valid UTF-8 ({exc})")
        for result in extract(text, fmt):
            all_results.append((path, result))

    if args.format == "json":
        print(json.dumps([_extraction_dict(r) for _, r in all_results], ensure_ascii=False))
    else:
        for path, result in all_results:
            where = "<stdin>" if path == "-" else path
            span = result.document_span
            statement = result.outcome.statement
            pairs = len(statement.pairs) if statement else 0
            print(
                f"{where}:{span.start_line}:{span.start_col}: "
                f"statement {result.block_index}: {pairs} pair(s), "
                f"{len(result.outcome.errors)} error(s)"
            )
            _print_diagnostics(result.outcome.diagnostics, where)
    if args.fail_if_none and not all_results:
        return FAIL
    return PASS


def cmd_convert(args) -> int:
    try:
        text = _read_input(args.path)
    except OSError as exc:
        return _fail_usage(str(exc))
    except UnicodeDecodeError as exc:
        return _fail_usage(f"{args.path}: not valid UTF-8 ({exc})")

    where = "<stdin>" if args.path == "-" else args.path
    if args.to == "json":
        outcome = parse_statement(text, ParseMode.LENIENT)
        if outcome.statement is None or outcome.errors:
            _print_diagnostics(outcome.diagnostics, where)
            return FAIL
        print(interchange.to_json(outcome.statement))
        return PASS
    try:
        statement = interchange.from_json(text)
    except interchange.InterchangeError as exc:
        print(f"{where}: {exc}", file=sys.stderr)
        return FAIL
    print(format_text(statement))
    return PASS


def cmd_new(args) -> int:
    try:
        builder = StatementBuilder(args.tool)
        for pair_arg in args.pair or []:
            name, sep, text = pair_arg.partition("=")
            if not sep:
                return _fail_usage(f"--pair needs HEADING=TEXT, got {pair_arg!r}")
            match = resolve(name)
            if match.outcome is MatchOutcome.NONE:
                candidates = ", ".join(e.display for e, _ in suggest(name, 3))
                hint = f" (did you mean: {candidates}?)" if candidates else ""
                print(f"aid: unknown heading {name.strip()!r}{hint}", file=sys.stderr)
                return FAIL
            builder.add(match.id, text)
    except BuildError as exc:
        print(f"aid: {exc}", file=sys.stderr)
        return FAIL
    statement = canonicalize(builder.finish())
    style = Style.MARKDOWN if args.markdown else Style.PLAIN
    print(format_text(statement, style))
    return PASS


def cmd_headings(args) -> int:
    entries = all_headings()
    if args.format == "json":
        payload = [
            {
                "ordinal": e.ordinal,
                "slug": e.slug,
                "display": e.display,
                "definition": e.definition,
                "aliases": sorted(e.aliases),
            }
            for e in entries
        ]
        print(json.dumps(payload, ensure_ascii=False))
        return PASS
    for e in entries:
        print(f"{e.ordinal:2d}. {e.display}")
        print(f"    {e.definition}")
        if e.aliases:
            print(f"    aliases: {', '.join(sorted(e.aliases))}")
    return PASS


def cmd_rules(args) -> int:
    if args.format == "json":
        payload = [
            {"code": code, "severity": severity.value, "description": description}
            for code, severity, description in rule_catalog()
        ]
        print(json.dumps(payload, ensure_ascii=False))
        return PASS
    for code, severity, description in rule_catalog():
        print(f"{code}  {severity.value:7s}  {description}")
    return PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aid",
        description="Lint, format, extract, and convert AID disclosure statements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lint", help="check a statement against the rule catalog")
    p.add_argument("path", nargs="?", default="-", help="statement file, or - for stdin")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--strict", action="store_true", help="errors on unknown headings")
    group.add_argument("--lenient", action="store_true", help="best-effort mode (default)")
    p.add_argument("--config", help="TOML config file (also $AID_CONFIG)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_lint)

    p = sub.add_parser("fmt", help="print the canonical form of a statement")
    p.add_argument("path", nargs="?", default="-", help="statement file, or - for stdin")
    p.add_argument("--markdown", action="store_true", help="emphasize headings")
    p.add_argument("--reorder", action="store_true", help="sort pairs into taxonomy order")
    p.add_argument("--check", action="store_true", help="exit 1 if input is not canonical")
    p.set_defaults(func=cmd_fmt)

    p = sub.add_parser("extract", help="find statements inside documents")
    p.add_argument("paths", nargs="+", metavar="path", help="document files")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--markdown-input", action="store_true", help="treat documents as Markdown")
    p.add_argument("--fail-if-none", action="store_true", help="exit 1 when nothing is found")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("convert", help="convert between text and JSON representations")
    p.add_argument("path", nargs="?", default="-", help="input file, or - for stdin")
    p.add_argument("--to", choices=("json", "text"), required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("new", help="compose a statement from flags")
    p.add_argument("--tool", required=True, help="tool description (the mandatory first pair)")
    p.add_argument(
        "--pair",
        action="append",
        metavar="HEADING=TEXT",
        help="additional disclosure pair; repeatable",
    )
    p.add_argument("--markdown", action="store_true", help="emphasize headings")
    p.set_defaults(func=cmd_new)

    p = sub.add_parser("headings", help="list the 14 disclosure headings")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_headings)

    p = sub.add_parser("rules", help="list the lint rule catalog")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_rules)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def entrypoint() -> None:  # pragma: no cover - thin wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    entrypoint()
