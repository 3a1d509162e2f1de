import pytest

from wellfound.config import RunConfig
from wellfound.errors import UnknownSuiteError
from wellfound.foundkit import Boundary
from wellfound.suites import (
    PROVER_SAMPLE_SCALE,
    SUITE_NAMES,
    SUITES,
    check_pigeonhole,
    check_ordered_transport,
    check_prover,
    check_realisers,
    check_spread_productive,
    disjoint_sequents,
    small_theories,
    suite_checks,
)

ALL_CHECKS = [check for checks in SUITES.values() for check in checks]
CLOSED_CHECKS = SUITES["foundedness"] + SUITES["kl-ft"] + SUITES["dc-bi"]


@pytest.mark.parametrize("check", ALL_CHECKS, ids=lambda c: c.__name__)
def test_every_check_passes_on_small_universe(check, small_config):
    report = check(small_config)
    assert report.verdict == "pass", report.counterexample
    assert report.instances > 0


@pytest.mark.parametrize("check", CLOSED_CHECKS, ids=lambda c: c.__name__)
def test_closed_boundary_never_fails(check, small_config):
    config = small_config.model_copy(update={"boundary": Boundary.CLOSED})
    assert check(config).verdict in ("pass", "skip")


def test_closed_boundary_skips_open_identities(small_config):
    config = small_config.model_copy(update={"boundary": Boundary.CLOSED})
    report = check_spread_productive(config)
    assert report.verdict == "skip"
    assert "OPEN" in report.note


def test_sampled_universe():
    config = RunConfig(alphabet=2, depth=4, samples=40, seed=1)
    report = SUITES["foundedness"][0](config)
    assert report.instances == 40
    assert "semente 1" in report.note


def test_ternary_universe():
    config = RunConfig(alphabet=3, depth=1, samples=10)
    assert all(check(config).passed for check in SUITES["kl-ft"])


def test_pigeonhole_check():
    report = check_pigeonhole(RunConfig())
    assert report.verdict == "pass"
    assert report.instances == 3


def test_realisers_count(small_config):
    # alturas 0..2 sobre B = 2: 5 árvores
    assert check_realisers(small_config).instances == 5


def test_instance_generators():
    assert len(list(disjoint_sequents(2))) == 9
    assert sum(1 for _ in small_theories(1)) == 2 + 8


def test_suite_registry():
    assert SUITE_NAMES[-1] == "all"
    assert len(suite_checks("all")) == len(ALL_CHECKS)
    with pytest.raises(UnknownSuiteError):
        suite_checks("bogus")


def test_prover_draws_scaled_sample(small_config):
    report = check_prover(small_config)
    exhaustive = sum(1 for _ in small_theories(1))
    assert report.instances == exhaustive + small_config.samples * PROVER_SAMPLE_SCALE
    assert "amostra de 250" in report.note


def test_ordered_transport_exhaustive_on_small_universe(small_config):
    # 9 funções parciais {0, 1} ⇀ {0, 1}: 2^9 conjuntos geradores
    report = check_ordered_transport(small_config)
    assert report.verdict == "pass"
    assert report.instances == 512
    assert report.note == "exaustivo"


def test_ordered_transport_sampled_on_deeper_universe():
    config = RunConfig(alphabet=2, depth=3, samples=60, seed=3)
    report = check_ordered_transport(config)
    assert report.verdict == "pass"
    assert report.instances == 60


SAMPLED_FLOORS = {
    "ordered-encodings": 10_000,
    "ordered-transport": 10_000,
    "similarity-invariance": 10_000,
    "completeness": 10_000,
    "sequents": 10_000,
    "prover": 100_000,
}


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["dc-bi", "completeness", "gdc-gbi"])
def test_suites_at_full_sample_size(suite):
    config = RunConfig(alphabet=2, depth=3)
    for check in SUITES[suite]:
        report = check(config)
        assert report.verdict == "pass", (report.check_id, report.counterexample)
        assert report.instances >= SAMPLED_FLOORS.get(report.check_id, 1)
