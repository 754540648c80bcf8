"""
Tests for the configuration module.
"""

import json

import pytest

from cliquebound.config import *
from cliquebound.types import Eigensolver
from cliquebound.exceptions import ConfigLoadError, InvalidConfiguration


class MockConfig(BaseConfig):

    DEFAULTS = {
        "color": "red",
        "size": "large",
    }

    REQUIRED = ["color", "name"]


def test_config_base():
    """
    Test the base functionality of the config object.
    """
    with pytest.raises(InvalidConfiguration):
        _ = MockConfig()

    config = MockConfig({"name": "test", "color": "blue"})
    assert config["name"] == "test"
    assert config["color"] == "blue"
    assert config["size"] == "large"

    other = config.copy(size="small")
    assert other["size"] == "small"
    assert config["size"] == "large"


def test_defaults():
    config = Config()
    assert config["tolerances"]["numeric_tol"] == 1e-6
    assert config["tolerances"].solver == Eigensolver.JACOBI
    assert config["solver"]["with_chi"] is False
    assert config["campaign"]["workers"] == 1
    assert config.to_dict()["campaign"]["chunk_size"] == 4096


@pytest.mark.parametrize(
    "n,m,zero,identity",
    [
        (1, 0, 1e-8, 1e-6),
        (10, 15, 1e-7, 3e-5),
        (100, 2500, 1e-6, 5e-3),
    ],
)
def test_scaled_tolerances(n, m, zero, identity):
    """
    Unset tolerances scale with the size of the graph.
    """
    tol = ToleranceConfig()
    assert tol.zero_eig(n) == pytest.approx(zero)
    assert tol.identity(m) == pytest.approx(identity)


def test_fixed_tolerances():
    tol = ToleranceConfig({"zero_eig_tol": 1e-9, "identity_tol": 1e-5})
    assert tol.zero_eig(1000) == 1e-9
    assert tol.identity(1000) == 1e-5
    assert tol.tightened(1000).zero_eig(1000) == pytest.approx(1e-11)


@pytest.mark.parametrize(
    "data",
    [
        {"zero_eig_tol": -1.0},
        {"zero_eig_tol": 0.5},
        {"identity_tol": 0},
        {"numeric_tol": "small"},
        {"solver_sweep_limit": 0},
        {"eigensolver": "power"},
    ],
)
def test_invalid_tolerances(data):
    with pytest.raises(InvalidConfiguration):
        ToleranceConfig(data)


@pytest.mark.parametrize(
    "cls,data",
    [
        (SolverConfig, {"node_budget": 0}),
        (SolverConfig, {"time_budget": -1}),
        (CampaignConfig, {"workers": 0}),
        (CampaignConfig, {"chunk_size": 0}),
        (CampaignConfig, {"keep": "some"}),
    ],
)
def test_invalid_options(cls, data):
    with pytest.raises(InvalidConfiguration):
        cls(data)


def test_nested_update():
    config = Config({"tolerances": {"eigensolver": "lapack"}, "campaign": {"workers": 4}})
    assert config["tolerances"].solver == Eigensolver.LAPACK
    assert config["tolerances"]["numeric_tol"] == 1e-6
    assert config["campaign"]["workers"] == 4


@pytest.mark.parametrize("ext", [".yaml", ".yml", ".json"])
def test_load(tmp_path, ext):
    data = {"solver": {"node_budget": 1000, "with_chi": True}, "campaign": {"workers": 2}}
    path = tmp_path / f"config{ext}"
    path.write_text(json.dumps(data))

    config = Config.load(str(path))
    assert config["solver"]["node_budget"] == 1000
    assert config["solver"]["with_chi"] is True
    assert config["campaign"]["workers"] == 2


def test_load_errors(tmp_path):
    with pytest.raises(ConfigLoadError):
        Config.load(str(tmp_path / "missing.yaml"))

    with pytest.raises(ConfigLoadError):
        Config.load(str(tmp_path / "config.toml"))

    path = tmp_path / "bad.yaml"
    path.write_text("tolerances: [unclosed\n")
    with pytest.raises(ConfigLoadError):
        Config.load(str(path))

    path = tmp_path / "invalid.yaml"
    path.write_text("campaign:\n  workers: 0\n")
    with pytest.raises(InvalidConfiguration):
        Config.load(str(path))
