from wellfound.report import Report, Tally


def test_tally_keeps_first_counterexample():
    tally = Tally("demo", "suite", "U(B=2, d=2)")
    tally.record(True, witness="primeira")
    tally.record(False, "a")
    tally.record(False, "b")
    tally.record(True, witness="segunda")
    report = tally.report("nota")
    assert report.verdict == "fail"
    assert not report.passed
    assert (report.instances, report.failures) == (4, 2)
    assert report.counterexample == "a"
    assert report.witness == "primeira"
    assert report.note == "nota"


def test_tally_pass_and_skip():
    tally = Tally("demo", "suite", "u")
    assert tally.record(True)
    assert tally.report().verdict == "pass"
    skipped = tally.skip("motivo")
    assert skipped.verdict == "skip"
    assert skipped.passed
    assert skipped.instances == 0


def test_report_serializes():
    report = Report(check_id="x", suite="s", universe="u", verdict="pass")
    data = report.model_dump()
    assert data["witness"] is None
    assert Report.model_validate_json(report.model_dump_json()) == report
