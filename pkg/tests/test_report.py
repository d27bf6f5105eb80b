"""Report determinism, CLI behaviour and exit codes."""

import json

import pytest

from nullcone.cli import main
from nullcone.report import (
    DEFAULT_TYPES,
    RunConfig,
    run,
    structured_lines,
    text_lines,
)


def test_structured_reports_are_byte_identical():
    config = RunConfig(suites=("roots", "shifts"), types=("A2", "B2"))
    lines_a = structured_lines(config, run(config)[1])
    lines_b = structured_lines(config, run(config)[1])
    assert "\n".join(lines_a) == "\n".join(lines_b)


def test_structured_schema_and_ordering():
    config = RunConfig(suites=("roots",), types=("A2",))
    code, results = run(config)
    assert code == 0
    lines = structured_lines(config, results)
    header = json.loads(lines[0])
    assert header["schema"] == "nullcone-report/1"
    assert header["config"]["types"] == ["A2"]
    records = [json.loads(line) for line in lines[1:]]
    ids = [r["check_id"] for r in records]
    assert ids == sorted(ids)
    for r in records:
        assert set(r) == {"check_id", "claim", "status", "witness"}
        assert r["status"] in ("pass", "fail", "undecided", "skipped")
        if r["status"] in ("fail", "undecided"):
            assert r["witness"] is not None


def test_exit_code_one_on_any_failure():
    code, results = run(RunConfig(suites=("shifts",), types=("C3",)))
    assert code == 1
    assert any(c.status == "fail" for c in results)


def test_invalid_types_reported_per_entry_not_fatal():
    code, results = run(RunConfig(suites=("roots",), types=("C2", "A2")))
    assert code == 0
    skipped = [c for c in results if c.status == "skipped"]
    assert any("C2" in c.check_id for c in skipped)
    assert any(c.check_id.startswith("roots/A2/") and c.status == "pass" for c in results)


def test_empty_types_runs_clean():
    code, results = run(RunConfig(suites=("roots",), types=()))
    assert code == 0 and results == []


def test_weyl_cap_skips_enumeration_checks():
    code, results = run(
        RunConfig(suites=("roots",), types=("B3",), max_weyl_order=10)
    )
    assert code == 0
    by_id = {c.check_id: c for c in results}
    assert by_id["roots/B3/weyl-order"].status == "skipped"
    assert "48" in str(by_id["roots/B3/weyl-order"].witness)


def test_text_format_summary():
    config = RunConfig(suites=("roots",), types=("A1",))
    _, results = run(config)
    lines = text_lines(config, results)
    assert lines[-1].startswith("summary:")


def test_cli_roundtrip(tmp_path, capsys):
    out = tmp_path / "report.jsonl"
    code = main(
        ["roots", "--type", "A2", "--format", "structured", "--out", str(out)]
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert json.loads(lines[0])["schema"] == "nullcone-report/1"
    code = main(["shifts", "--type", "G2"])
    captured = capsys.readouterr()
    assert code == 0
    assert "summary:" in captured.out


def test_cli_exit_codes():
    assert main(["shifts", "--type", "C3"]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["bogus-suite"])
    assert exc.value.code == 2


def test_default_types_cover_the_standard_list():
    assert "E8" in DEFAULT_TYPES and "G2" in DEFAULT_TYPES and "D4" in DEFAULT_TYPES
