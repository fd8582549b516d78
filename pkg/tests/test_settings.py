# tests/test_settings.py
from fractions import Fraction

import pytest

from config.settings import CheckParams, ConfigError, RiordanConfig


def test_defaults():
    config = RiordanConfig()
    assert config.max_n == 6
    assert config.get_beta_grid()[0] == -2
    assert Fraction(1, 2) in config.get_beta_grid()


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("RIORDAN_MAX_N", "3")
    monkeypatch.setenv("RIORDAN_BETA_GRID", "1, -1/2")
    config = RiordanConfig()
    assert config.max_n == 3
    assert config.get_beta_grid() == (Fraction(1), Fraction(-1, 2))


@pytest.mark.parametrize("name,value", [
    ("RIORDAN_MAX_N", "many"),
    ("RIORDAN_GUARD", "0"),
    ("RIORDAN_BETA_GRID", "1,x"),
])
def test_bad_environment(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        RiordanConfig()


def test_yaml_file(tmp_path):
    path = tmp_path / "riordan.yaml"
    path.write_text("max_n: 4\nbeta_grid: ['1/2', '2']\nmax_workers: 2\n")
    config = RiordanConfig.from_file(str(path))
    assert config.max_n == 4
    assert config.max_workers == 2
    assert config.get_beta_grid() == (Fraction(1, 2), Fraction(2))


def test_unknown_keys_rejected(tmp_path):
    path = tmp_path / "riordan.json"
    path.write_text('{"max_n": 4, "regions": ["eu"]}')
    with pytest.raises(ConfigError):
        RiordanConfig.from_file(str(path))


def test_missing_file_gives_defaults(tmp_path):
    assert RiordanConfig.from_file(str(tmp_path / "absent.json")) == RiordanConfig()


@pytest.mark.parametrize("suffix", [".json", ".yaml"])
def test_save_and_reload(tmp_path, suffix):
    path = tmp_path / f"riordan{suffix}"
    config = RiordanConfig(max_n=5, guard=6)
    config.save_to_file(str(path))
    assert RiordanConfig.from_file(str(path)) == config


def test_check_params_overrides():
    config = RiordanConfig()
    params = config.to_check_params(max_n=2, guard=None, beta_grid=("1", "-1"))
    assert params.max_n == 2
    assert params.max_n_override == 2
    assert config.to_check_params().max_n_override is None
    assert params.guard == config.guard
    assert params.beta_grid == (Fraction(1), Fraction(-1))
    with pytest.raises(ConfigError):
        config.to_check_params(guard=0)


def test_limits():
    config = RiordanConfig()
    assert config.within_limits(CheckParams())
    assert not config.within_limits(CheckParams(max_n=50))
    assert not config.within_limits(CheckParams(series_order=100))
