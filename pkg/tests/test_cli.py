import json

import pytest

from wellfound import __version__
from wellfound.cli import EXIT_OK, EXIT_USAGE, format_report, main
from wellfound.report import Report
from wellfound.suites import SUITES

INCONSISTENT = {
    "atoms": ["a"],
    "clauses": [{"antecedent": [], "succedent": ["a"]}, {"antecedent": ["a"]}],
}
CONSISTENT = {"atoms": ["a", "b"], "clauses": [{"succedent": ["a", "b"]}]}


def json_lines(capsys):
    out = capsys.readouterr().out
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_solve_inconsistent(theory_file, capsys):
    assert main(["solve", theory_file(INCONSISTENT)]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("[PASS] entailment/solve")
    assert "INCONSISTENT" in out


def test_solve_consistent_json(theory_file, capsys):
    code = main(["--format", "json-lines", "solve", theory_file(CONSISTENT)])
    assert code == EXIT_OK
    (report,) = json_lines(capsys)
    assert report["note"] == "CONSISTENT"
    assert report["witness"]["a"] == 1


def test_sat_unsat(theory_file, capsys):
    assert main(["--format", "json-lines", "sat", theory_file(INCONSISTENT)]) == 0
    (report,) = json_lines(capsys)
    assert report["note"] == "UNSAT"
    assert report["witness"]["rule"] == "CUT"


def test_classify(predicate_file, capsys):
    path = predicate_file("ε\n1\n11\n")
    code = main(["--format", "json-lines", "classify", path, "--depth", "2"])
    assert code == EXIT_OK
    (report,) = json_lines(capsys)
    assert report["witness"]["productive"] == {"holds": True, "witness": "11"}


def test_check_suite(capsys):
    argv = ["--format", "json-lines", "check", "dc-bi", "--alphabet", "2"]
    argv += ["--depth", "2", "--samples", "10"]
    assert main(argv) == EXIT_OK
    reports = json_lines(capsys)
    assert len(reports) == len(SUITES["dc-bi"])
    assert {r["suite"] for r in reports} == {"dc-bi"}


def test_output_flags_after_subcommand(capsys):
    argv = ["check", "dc-bi", "--alphabet", "2", "--depth", "2", "--samples", "5"]
    argv += ["--format", "json-lines", "--log-level", "warning"]
    assert main(argv) == EXIT_OK
    reports = json_lines(capsys)
    assert len(reports) == len(SUITES["dc-bi"])


def test_global_format_kept_when_subcommand_omits_it(theory_file, capsys):
    path = theory_file(CONSISTENT)
    assert main(["--format", "json-lines", "sat", path, "--heuristic"]) == EXIT_OK
    (report,) = json_lines(capsys)
    assert report["note"] == "SAT"


def test_unknown_suite(capsys):
    assert main(["check", "bogus"]) == EXIT_USAGE
    assert "bogus" in capsys.readouterr().err


def test_demo_pigeonhole(capsys):
    code = main(
        ["--format", "json-lines", "demo", "pigeonhole", "--m", "3", "--n", "2"]
    )
    assert code == EXIT_OK
    (report,) = json_lines(capsys)
    assert report["witness"]["max_size"] == 2
    assert report["witness"]["choice_function"] is None


def test_unknown_demo():
    assert main(["demo", "fantasma"]) == EXIT_USAGE


def test_canon(capsys):
    assert main(["--format", "json-lines", "canon", "a & b"]) == EXIT_OK
    (report,) = json_lines(capsys)
    assert report["witness"] == {"generators": ["a", "b"], "bits": "0001"}


def test_canon_parse_error(capsys):
    assert main(["canon", "a &"]) == EXIT_USAGE
    assert "posição 3" in capsys.readouterr().err


def test_missing_input_file(tmp_path):
    assert main(["solve", str(tmp_path / "ausente.json")]) == EXIT_USAGE


def test_invalid_environment(monkeypatch, theory_file):
    monkeypatch.setenv("WELLFOUND_FORMAT", "xml")
    assert main(["solve", theory_file(CONSISTENT)]) == EXIT_USAGE


def test_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_human_format_lists_counterexample():
    report = Report(
        check_id="x",
        suite="s",
        universe="U(B=2, d=2)",
        verdict="fail",
        instances=2,
        failures=1,
        counterexample=["ε"],
    )
    text = format_report(report, "human")
    assert text.startswith("[FAIL] s/x U(B=2, d=2): 2 instâncias, 1 falhas")
    assert 'contraexemplo: ["ε"]' in text
