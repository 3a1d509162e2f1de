import pytest

from wellfound.commands import (
    canon_expression,
    classify_predicate,
    run_demo,
    sat,
    solve,
)
from wellfound.errors import GeneratorLimitError, UnknownDemoError
from wellfound.foundkit import Boundary


def test_solve_reports(inconsistent_theory, consistent_theory):
    assert solve(inconsistent_theory).note == "INCONSISTENT"
    report = solve(consistent_theory, heuristic=True, unit_propagation=True)
    assert report.note == "CONSISTENT"
    assert report.verdict == "pass"
    assert report.universe == "2 átomos, 1 cláusulas"


def test_sat_reports(inconsistent_theory, consistent_theory):
    assert sat(inconsistent_theory).note == "UNSAT"
    assert sat(consistent_theory).witness == {"a": 1, "b": 1}


def test_classify_closed_boundary(spread_pred):
    report = classify_predicate(spread_pred, Boundary.CLOSED)
    assert report.passed
    assert report.note == "fronteira closed"
    assert not report.witness["productive"]["holds"]
    assert report.instances == 10


def test_realiser_demo(small_config):
    report = run_demo("realiser", small_config)
    assert report.check_id == "realisers"
    assert report.passed


def test_unknown_demo(small_config):
    with pytest.raises(UnknownDemoError):
        run_demo("fantasma", small_config)


def test_canon_with_explicit_generators():
    report = canon_expression("b", ["a", "b"])
    assert report.witness == {"generators": ["a", "b"], "bits": "0011"}
    with pytest.raises(GeneratorLimitError):
        canon_expression("a | b", max_generators=1)
