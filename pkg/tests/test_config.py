import pytest

from src.config import Config, config


@pytest.fixture
def env(monkeypatch):
    yield monkeypatch
    monkeypatch.undo()
    Config.reload()


def test_defaults_are_valid():
    assert config.validate() == []


def test_reload_reads_environment(env):
    env.setenv("ACKKIT_LIMIT_N", "12")
    env.setenv("ACKKIT_WORKERS", "4")
    env.setenv("ACKKIT_CATALOG_CHECKS", "off")

    Config.reload()

    assert config.ACKKIT_LIMIT_N == 12
    assert config.ACKKIT_WORKERS == 4
    assert config.ACKKIT_CATALOG_CHECKS is False


def test_bad_integer_falls_back_to_default(env):
    env.setenv("ACKKIT_ORACLE_LIMIT_N", "many")

    Config.reload()

    assert config.ACKKIT_ORACLE_LIMIT_N == 16


def test_validate_reports_problems(env):
    env.setenv("ACKKIT_WORKERS", "0")
    env.setenv("LOG_LEVEL", "loud")

    Config.reload()
    problems = config.validate()

    assert any(p.startswith("ACKKIT_WORKERS") for p in problems)
    assert any(p.startswith("LOG_LEVEL") for p in problems)


def test_main_refuses_invalid_config(env):
    from main import main

    env.setenv("ACKKIT_LIMIT_N", "0")
    Config.reload()

    assert main(["verify", "catalog:NUT7"]) == 2
