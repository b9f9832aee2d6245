"""
Tests for settings loading and logging setup.
"""

import logging

import pytest

from src.exceptions import InvalidConfigError
from src.models.base import Algorithm
from src.utils.logging_config import setup_logging
from src.utils.settings import LoggingSettings, Settings, load_settings


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ("PCMAX_CONFIG", "PCMAX_LOG_LEVEL", "PCMAX_THREADS"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def yaml_file(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(
        "search:\n"
        "  algorithm: cpc\n"
        "  alpha: 0.01\n"
        "regimes:\n"
        "  tiny:\n"
        "    alpha: 0.2\n"
        "    nodes: 5\n"
        "logging:\n"
        "  level: debug\n"
    )
    return path


def test_defaults():
    """Test built-in defaults without any file."""
    settings = Settings()
    assert settings.search.algorithm == Algorithm.PC_MAX
    assert settings.search.alpha == 0.001
    assert settings.regime("large").alpha == 0.00001
    assert settings.benchmark.algorithms == list(Algorithm)


def test_yaml_values(yaml_file):
    """Test that YAML values replace defaults."""
    settings = load_settings(yaml_file)
    assert settings.search.algorithm == Algorithm.CPC
    assert settings.search.alpha == 0.01
    assert settings.search.penalty == 4.0
    assert settings.regime("tiny").nodes == 5
    assert settings.logging.level == "DEBUG"


def test_config_path_from_environment(yaml_file, monkeypatch):
    """Test the PCMAX_CONFIG lookup."""
    monkeypatch.setenv("PCMAX_CONFIG", str(yaml_file))
    assert load_settings().search.algorithm == Algorithm.CPC


def test_environment_overrides_yaml(yaml_file, monkeypatch):
    """Test that environment variables beat the file."""
    monkeypatch.setenv("PCMAX_LOG_LEVEL", "error")
    monkeypatch.setenv("PCMAX_THREADS", "6")
    settings = load_settings(yaml_file)
    assert settings.logging.level == "ERROR"
    assert settings.search.threads == 6
    assert settings.benchmark.threads == 6


def test_bad_thread_count(yaml_file, monkeypatch):
    """Test a non-integer thread override."""
    monkeypatch.setenv("PCMAX_THREADS", "many")
    with pytest.raises(InvalidConfigError):
        load_settings(yaml_file)


def test_invalid_values(tmp_path):
    """Test that out-of-range values are config errors."""
    path = tmp_path / "bad.yaml"
    path.write_text("search:\n  alpha: 2.0\n")
    with pytest.raises(InvalidConfigError) as excinfo:
        load_settings(path)
    assert excinfo.value.exit_code == 1


def test_bad_log_level(tmp_path):
    """Test that unknown log levels are rejected."""
    path = tmp_path / "bad.yaml"
    path.write_text("logging:\n  level: LOUD\n")
    with pytest.raises(InvalidConfigError):
        load_settings(path)


def test_missing_explicit_file(tmp_path):
    """Test that a named but absent file is an error."""
    with pytest.raises(InvalidConfigError):
        load_settings(tmp_path / "absent.yaml")


def test_unparsable_yaml(tmp_path):
    """Test a YAML syntax error."""
    path = tmp_path / "broken.yaml"
    path.write_text("search: [unclosed\n")
    with pytest.raises(InvalidConfigError):
        load_settings(path)


def test_unknown_regime():
    """Test regime lookup failure."""
    with pytest.raises(InvalidConfigError):
        Settings().regime("huge")


def test_setup_logging_level():
    """Test that the root logger takes the configured level."""
    setup_logging(LoggingSettings(level="warning"))
    assert logging.getLogger().level == logging.WARNING
