import io
import json
import subprocess
import sys

import pytest

from aidkit.cli import main

GOOD = "AID Statement: Artificial Intelligence Tool: ToolX.\n"
BAD_FIRST = "AID Statement: Conceptualization: help.\n"


@pytest.fixture()
def feed_stdin(monkeypatch):
    def feed(data):
        if isinstance(data, str):
            data = data.encode("utf-8")
        monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(data), encoding="utf-8"))

    return feed


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_lint_pass_prints_warning_to_stderr(tmp_path, capsys, research_text):
    path = write(tmp_path, "research.txt", research_text)
    assert main(["lint", path, "--lenient"]) == 0
    out, err = capsys.readouterr()
    assert out == ""
    assert "AID-W103" in err
    assert "Data Collection Method" in err


def test_lint_failure_exit_code(tmp_path, capsys):
    path = write(tmp_path, "bad.txt", BAD_FIRST)
    assert main(["lint", path]) == 1
    _, err = capsys.readouterr()
    assert "AID-E002" in err


def test_lint_missing_file_is_usage_error(capsys):
    assert main(["lint", "/nonexistent/statement.txt"]) == 2
    _, err = capsys.readouterr()
    assert "aid: error" in err


def test_lint_stdin(feed_stdin, capsys):
    feed_stdin(GOOD)
    assert main(["lint", "-"]) == 0
    out, err = capsys.readouterr()
    assert "0 error(s)" in err


def test_lint_json_report_on_stdout(tmp_path, capsys, research_text):
    path = write(tmp_path, "research.txt", research_text)
    assert main(["lint", path, "--format", "json"]) == 0
    out, err = capsys.readouterr()
    report = json.loads(out)
    assert report["verdict"] == "pass"
    assert report["warning_count"] == 1
    assert report["diagnostics"][0]["code"] == "AID-W103"
    assert err == ""


def test_lint_strict_flags_unknown_heading(tmp_path, capsys):
    path = write(tmp_path, "s.txt", "AID Statement: Artificial Intelligence Tool: T; Visualisation: c.\n")
    assert main(["lint", path, "--lenient"]) == 0
    assert main(["lint", path, "--strict"]) == 1
    _, err = capsys.readouterr()
    assert "AID-E008" in err


def test_lint_config_file_overrides(tmp_path, capsys, research_text):
    path = write(tmp_path, "research.txt", research_text)
    config = write(tmp_path, "aid.toml", '[rules]\nAID-W103 = "error"\n')
    assert main(["lint", path, "--config", config]) == 1


def test_lint_config_via_environment(tmp_path, capsys, research_text, monkeypatch):
    path = write(tmp_path, "research.txt", research_text)
    config = write(tmp_path, "aid.toml", '[rules]\nAID-W103 = "off"\n')
    monkeypatch.setenv("AID_CONFIG", config)
    assert main(["lint", path]) == 0
    _, err = capsys.readouterr()
    assert "AID-W103" not in err


def test_lint_bad_config_is_usage_error(tmp_path, capsys):
    path = write(tmp_path, "x.txt", GOOD)
    config = write(tmp_path, "aid.toml", '[rules]\nAID-X999 = "off"\n')
    assert main(["lint", path, "--config", config]) == 2


def test_fmt_canonicalizes(tmp_path, capsys, research_text):
    path = write(tmp_path, "research.txt", research_text)
    assert main(["fmt", path]) == 0
    out, _ = capsys.readouterr()
    assert out.startswith("AID Statement: Artificial Intelligence Tool: ChatGPT v.4o")
    assert "Data Collection Method:" in out
    assert out.endswith(".\n")


def test_fmt_check_pipeline_idempotent(tmp_path, capsys, research_text, feed_stdin):
    path = write(tmp_path, "research.txt", research_text)
    assert main(["fmt", path]) == 0
    out, _ = capsys.readouterr()
    feed_stdin(out)
    assert main(["fmt", "-", "--check"]) == 0
    checked_out, _ = capsys.readouterr()
    assert checked_out == ""


def test_fmt_check_detects_divergence(tmp_path, capsys, research_text):
    path = write(tmp_path, "research.txt", research_text)
    assert main(["fmt", path, "--check"]) == 1  # alias spelling is not canonical
    out, _ = capsys.readouterr()
    assert out == ""


def test_fmt_markdown(tmp_path, capsys, education_text):
    path = write(tmp_path, "education.txt", education_text)
    assert main(["fmt", path, "--markdown"]) == 0
    out, _ = capsys.readouterr()
    assert "*Artificial Intelligence Tool*:" in out


def test_fmt_reorder(tmp_path, capsys):
    text = "AID Statement: Artificial Intelligence Tool: T; Visualization: chart; Conceptualization: idea.\n"
    path = write(tmp_path, "s.txt", text)
    assert main(["fmt", path, "--reorder"]) == 0
    out, _ = capsys.readouterr()
    assert out.index("Conceptualization") < out.index("Visualization")


def test_fmt_unparseable_exits_one(tmp_path, capsys):
    path = write(tmp_path, "bad.txt", "no label here\n")
    assert main(["fmt", path]) == 1
    out, err = capsys.readouterr()
    assert out == ""
    assert "AID-E001" in err


def test_extract_json(tmp_path, capsys, education_text):
    doc = "Intro paragraph.\n\n" + education_text + "\n"
    path = write(tmp_path, "paper.txt", doc)
    assert main(["extract", path, "--format", "json"]) == 0
    out, _ = capsys.readouterr()
    found = json.loads(out)
    assert len(found) == 1
    assert found[0]["block_index"] == 0
    assert len(found[0]["pairs"]) == 5
    assert found[0]["document_span"]["start_byte"] == len("Intro paragraph.\n\n")


def test_extract_empty_file_is_success(tmp_path, capsys):
    path = write(tmp_path, "empty.txt", "")
    assert main(["extract", path, "--format", "json"]) == 0
    out, _ = capsys.readouterr()
    assert json.loads(out) == []


def test_extract_fail_if_none(tmp_path):
    path = write(tmp_path, "empty.txt", "")
    assert main(["extract", path, "--fail-if-none"]) == 1


def test_extract_missing_file(tmp_path):
    assert main(["extract", str(tmp_path / "missing.txt")]) == 2


def test_extract_multiple_paths_sorted(tmp_path, capsys, research_text, education_text):
    b = write(tmp_path, "b.txt", research_text + "\n")
    a = write(tmp_path, "a.txt", education_text + "\n")
    assert main(["extract", b, a]) == 0
    out, _ = capsys.readouterr()
    assert out.index("a.txt") < out.index("b.txt")


def test_extract_markdown_input(tmp_path, capsys):
    doc = "AID Statement: Artificial Intelligence Tool: ToolX.\n## Next section\n"
    path = write(tmp_path, "paper.md", doc)
    assert main(["extract", path, "--markdown-input", "--format", "json"]) == 0
    out, _ = capsys.readouterr()
    assert len(json.loads(out)) == 1


def test_convert_text_to_json_to_text(tmp_path, capsys, research_text, feed_stdin):
    path = write(tmp_path, "research.txt", research_text)
    assert main(["convert", path, "--to", "json"]) == 0
    as_json, _ = capsys.readouterr()
    assert len(json.loads(as_json)["pairs"]) == 7
    feed_stdin(as_json)
    assert main(["convert", "-", "--to", "text"]) == 0
    as_text, _ = capsys.readouterr()
    assert as_text.startswith("AID Statement: Artificial Intelligence Tool:")


def test_convert_malformed_json_exits_one(feed_stdin, capsys):
    feed_stdin("{not json")
    assert main(["convert", "-", "--to", "text"]) == 1
    out, err = capsys.readouterr()
    assert out == ""
    assert "not valid JSON" in err


def test_convert_unparseable_text_exits_one(feed_stdin):
    feed_stdin("no label\n")
    assert main(["convert", "-", "--to", "json"]) == 1


def test_convert_invalid_utf8_is_usage_error(feed_stdin):
    feed_stdin(b"AID Statement: \xff\xfe broken.")
    assert main(["convert", "-", "--to", "json"]) == 2


def test_new_minimal(capsys):
    assert main(["new", "--tool", "ToolX"]) == 0
    out, _ = capsys.readouterr()
    assert out == "AID Statement: Artificial Intelligence Tool: ToolX.\n"


def test_new_with_pairs(capsys):
    assert main(["new", "--tool", "ToolX", "--pair", "Conceptualization=revised questions"]) == 0
    out, _ = capsys.readouterr()
    assert "Conceptualization: revised questions." in out


def test_new_accepts_alias_headings(capsys):
    assert main(["new", "--tool", "T", "--pair", "Data Collection Methods=drafted the survey"]) == 0
    out, _ = capsys.readouterr()
    assert "Data Collection Method: drafted the survey." in out


def test_new_unknown_heading_suggests(capsys):
    assert main(["new", "--tool", "T", "--pair", "Vibes=stuff"]) == 1
    out, err = capsys.readouterr()
    assert out == ""
    assert "unknown heading" in err


def test_new_rejects_forbidden_characters(capsys):
    assert main(["new", "--tool", "Tool: X"]) == 1
    _, err = capsys.readouterr()
    assert "reserved" in err


def test_new_markdown(capsys):
    assert main(["new", "--tool", "ToolX", "--markdown"]) == 0
    out, _ = capsys.readouterr()
    assert out.startswith("AID Statement: *Artificial Intelligence Tool*:")


def test_headings_text(capsys):
    assert main(["headings"]) == 0
    out, _ = capsys.readouterr()
    assert " 1. Artificial Intelligence Tool" in out
    assert "14. Project Administration" in out
    assert "categorize, summarize, or manipulate data" in out


def test_headings_json(capsys):
    assert main(["headings", "--format", "json"]) == 0
    out, _ = capsys.readouterr()
    entries = json.loads(out)
    assert len(entries) == 14
    assert entries[0]["display"] == "Artificial Intelligence Tool"
    assert entries[9]["definition"].count("categorize, summarize, or manipulate data") == 1


def test_rules_listing(capsys):
    assert main(["rules"]) == 0
    out, _ = capsys.readouterr()
    assert "AID-E002" in out
    assert "AID-W107" in out


def test_stdout_is_valid_utf8(tmp_path, capsys, research_text):
    path = write(tmp_path, "research.txt", research_text)
    main(["fmt", path, "--markdown"])
    out, _ = capsys.readouterr()
    out.encode("utf-8")  # must not raise


def test_installed_entry_point_smoke(tmp_path, research_text):
    path = write(tmp_path, "research.txt", research_text)
    proc = subprocess.run(
        [sys.executable, "-m", "aidkit.cli", "lint", path],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "AID-W103" in proc.stderr
    assert proc.stdout == ""
