from unittest.mock import patch

from wellfound.report import Report
from wellfound.runner import SuiteRunner
from wellfound.suites import SUITES


class InlineExecutor:
    """Substitui o pool de processos executando no próprio processo"""

    def __init__(self, max_workers):
        self.max_workers = max_workers

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False

    def map(self, fn, *iterables):
        return map(fn, *iterables)


def failing_check(config):
    return Report(
        check_id="quebrada",
        suite="teste",
        universe="u",
        verdict="fail",
        instances=3,
        failures=1,
        counterexample=["ε"],
    )


def test_run_suite_in_registration_order(small_config):
    runner = SuiteRunner(small_config)
    reports = list(runner.run_suite("dc-bi"))
    assert len(reports) == len(SUITES["dc-bi"])
    assert [r.check_id for r in reports][:2] == ["relation-predicates", "dc-serial"]
    assert runner.stats["checks_failed"] == 0
    assert runner.stats["instances"] == sum(r.instances for r in reports)


def test_run_generates_report(small_config):
    runner = SuiteRunner(small_config)
    summary = runner.run(["kl-ft"])
    assert summary["success"]
    assert summary["execution_id"].startswith("check_")
    assert summary["statistics"]["total_runs"] == 1
    assert summary["statistics"]["checks_passed"] == len(SUITES["kl-ft"])
    assert len(summary["reports"]) == len(SUITES["kl-ft"])


def test_parallel_run_keeps_order(small_config):
    config = small_config.model_copy(update={"workers": 3})
    with patch("wellfound.runner.ProcessPoolExecutor", InlineExecutor):
        parallel = [r.check_id for r in SuiteRunner(config).run_suite("cc-ac")]
    serial = [r.check_id for r in SuiteRunner(small_config).run_suite("cc-ac")]
    assert parallel == serial


def test_failures_are_counted(small_config):
    with patch("wellfound.runner.suite_checks", return_value=[failing_check]):
        runner = SuiteRunner(small_config)
        summary = runner.run(["qualquer"])
    assert not summary["success"]
    assert runner.stats["checks_failed"] == 1
    assert summary["reports"][0]["counterexample"] == ["ε"]
