"""
Configure tolerances, exact solvers and verification campaigns.
"""

import os
import abc
import copy
import json
import yaml
import inspect

from typing import Any
from collections.abc import Mapping

from .types import Eigensolver, Keep
from .exceptions import ConfigLoadError, InvalidConfiguration


class BaseConfig(Mapping):
    """
    Base configuration object and ABC to define configuration handling.
    """

    @classmethod
    @abc.abstractmethod
    def DEFAULTS(cls) -> dict:
        raise NotImplementedError

    @classmethod
    @abc.abstractmethod
    def REQUIRED(cls) -> list:
        raise NotImplementedError

    def __init__(self, data=None):
        self._config = copy.deepcopy(self.DEFAULTS)
        for key, value in self._config.items():
            if inspect.isclass(value):
                self._config[key] = value()

        if data:
            self.update(data)
        self.validate()

    def update(self, conf: dict):
        """
        Update the configuration object with new values.
        NOTE: this is the only way to mutate the configuration object.
        """
        for key, value in conf.items():
            if key in self._config:
                orig = self[key]
                if isinstance(orig, dict):
                    orig.update(value)
                elif hasattr(orig, "update"):
                    orig.update(value)
                else:
                    self._config[key] = value
            else:
                self._config[key] = value

    def validate(self):
        """
        Check that any required configuration is present.
        """
        for key in self.REQUIRED:
            if key not in self or self[key] is None:
                raise InvalidConfiguration(f"missing required configuration: {key}")

            if hasattr(self[key], "validate"):
                self[key].validate()

    def copy(self, **overrides) -> "BaseConfig":
        """
        Returns a validated deep copy with the specified keys replaced.
        """
        data = copy.deepcopy(dict(self._config))
        data.update(overrides)
        return self.__class__(data)

    def to_dict(self) -> dict:
        return {
            key: value.to_dict() if isinstance(value, BaseConfig) else value
            for key, value in self._config.items()
        }

    def __getitem__(self, key: str) -> Any:
        return self._config[key]

    def __iter__(self):
        return iter(self._config)

    def __len__(self) -> int:
        return len(self._config)

    def __repr__(self):
        return f"{self.__class__.__name__}({self.to_dict()!r})"


class ToleranceConfig(BaseConfig):
    """
    Numerical tolerances for the eigensolver and the identity self-checks. When
    zero_eig_tol or identity_tol are None they scale with the graph being checked:
    zero_eig_tol = 1e-8 * n and identity_tol = 1e-6 * max(1, 2m).
    """

    DEFAULTS = {
        "zero_eig_tol": None,
        "identity_tol": None,
        "solver_sweep_limit": 100,
        "numeric_tol": 1e-6,
        "eigensolver": "jacobi",
    }
    REQUIRED = ["solver_sweep_limit", "numeric_tol", "eigensolver"]

    ZERO_EIG_SCALE = 1e-8
    IDENTITY_SCALE = 1e-6

    def validate(self):
        super(ToleranceConfig, self).validate()
        for key in ("zero_eig_tol", "identity_tol", "numeric_tol"):
            value = self[key]
            if value is None:
                continue
            if not isinstance(value, (int, float)) or value <= 0:
                raise InvalidConfiguration(f"{key} must be a positive number, got {value!r}")

        if self["zero_eig_tol"] is not None and self["zero_eig_tol"] >= 0.5:
            raise InvalidConfiguration("zero_eig_tol must be smaller than 0.5")

        limit = self["solver_sweep_limit"]
        if not isinstance(limit, int) or limit < 1:
            raise InvalidConfiguration(f"solver_sweep_limit must be a positive integer, got {limit!r}")

        if str(self["eigensolver"]).lower() not in set(Eigensolver):
            raise InvalidConfiguration(f"unknown eigensolver: {self['eigensolver']}")

    def zero_eig(self, n: int) -> float:
        if self["zero_eig_tol"] is not None:
            return float(self["zero_eig_tol"])
        return self.ZERO_EIG_SCALE * max(1, n)

    def identity(self, m: int) -> float:
        if self["identity_tol"] is not None:
            return float(self["identity_tol"])
        return self.IDENTITY_SCALE * max(1, 2 * m)

    @property
    def numeric(self) -> float:
        return float(self["numeric_tol"])

    @property
    def solver(self) -> Eigensolver:
        return Eigensolver(str(self["eigensolver"]).lower())

    def tightened(self, n: int, factor: float = 100.0) -> "ToleranceConfig":
        """
        Returns a copy that classifies zeros at zero_eig(n) / factor, used to re-verify
        counterexample candidates before they are reported.
        """
        return self.copy(zero_eig_tol=self.zero_eig(n) / factor)


class SolverConfig(BaseConfig):
    """
    Budgets for the exact clique and chromatic number solvers. A budget of None is
    unbounded; time_budget is in seconds per solve.
    """

    DEFAULTS = {
        "node_budget": None,
        "time_budget": None,
        "with_chi": False,
    }
    REQUIRED = []

    def validate(self):
        super(SolverConfig, self).validate()
        if self["node_budget"] is not None and int(self["node_budget"]) < 1:
            raise InvalidConfiguration("node_budget must be at least 1")
        if self["time_budget"] is not None and float(self["time_budget"]) <= 0:
            raise InvalidConfiguration("time_budget must be positive")


class CampaignConfig(BaseConfig):
    """
    Execution options shared by all verification campaigns.
    """

    DEFAULTS = {
        "workers": 1,
        "chunk_size": 4096,
        "keep": None,
        "progress": False,
        "reverify": True,
    }
    REQUIRED = ["workers", "chunk_size"]

    def validate(self):
        super(CampaignConfig, self).validate()
        if int(self["workers"]) < 1:
            raise InvalidConfiguration("workers must be at least 1")
        if int(self["chunk_size"]) < 1:
            raise InvalidConfiguration("chunk_size must be at least 1")
        if self["keep"] is not None and str(self["keep"]).lower() not in set(Keep):
            raise InvalidConfiguration(f"invalid keep policy: {self['keep']}")


class Config(BaseConfig):

    DEFAULTS = {
        "tolerances": ToleranceConfig,
        "solver": SolverConfig,
        "campaign": CampaignConfig,
    }

    REQUIRED = [
        "tolerances",
        "solver",
        "campaign",
    ]

    @classmethod
    def load(cls, path: str) -> "Config":
        """
        Load a configuration file.
        """
        loader = None
        _, ext = os.path.splitext(os.path.basename(path))

        if ext == ".json":
            loader = json.load
        elif ext == ".yaml" or ext == ".yml":
            loader = yaml.safe_load
        else:
            raise ConfigLoadError(
                f"unsupported config file type: {ext}: supported types are .json and .yaml"
            )

        try:
            with open(path, "r") as f:
                data = loader(f)
                return cls(data)
        except FileNotFoundError as e:
            raise ConfigLoadError(f"config file not found: {path}") from e
        except InvalidConfiguration:
            raise
        except Exception as e:
            raise ConfigLoadError("failed to load config file") from e
