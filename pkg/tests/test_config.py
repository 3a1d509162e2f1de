import pytest

from wellfound.config import RunConfig, get_config, merge_config
from wellfound.errors import ConfigurationError
from wellfound.foundkit import Boundary


def test_defaults():
    config = get_config()
    assert config.alphabet == 2
    assert config.depth == 3
    assert config.boundary is Boundary.OPEN
    assert config.output_format == "human"
    assert config.workers == 1


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("WELLFOUND_DEPTH", "4")
    monkeypatch.setenv("WELLFOUND_BOUNDARY", "CLOSED")
    monkeypatch.setenv("WELLFOUND_LOG_LEVEL", "debug")
    config = get_config()
    assert config.depth == 4
    assert config.boundary is Boundary.CLOSED
    assert config.log_level == "DEBUG"


def test_arguments_win_over_environment(monkeypatch):
    monkeypatch.setenv("WELLFOUND_SAMPLES", "10")
    assert get_config(samples=99).samples == 99
    assert get_config(samples=None).samples == 10


@pytest.mark.parametrize(
    "overrides",
    [
        {"output_format": "xml"},
        {"alphabet": 0},
        {"log_level": "barulhento"},
        {"boundary": "half-open"},
    ],
)
def test_invalid_values(overrides):
    with pytest.raises(ConfigurationError):
        get_config(**overrides)


def test_invalid_environment(monkeypatch):
    monkeypatch.setenv("WELLFOUND_WORKERS", "muitos")
    with pytest.raises(ConfigurationError, match="workers"):
        get_config()


def test_merge_config():
    base = RunConfig(depth=2, seed=5)
    merged = merge_config(base, depth=4, samples=None)
    assert merged.depth == 4
    assert merged.seed == 5
    assert merged.samples == base.samples
    with pytest.raises(ConfigurationError):
        merge_config(base, workers=0)
