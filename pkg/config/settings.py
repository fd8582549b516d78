# config/settings.py
import json
import os
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml

from algebra.exact_core import ArgumentError, RiordanError, as_rational


class ConfigError(RiordanError):
    """Configurazione non valida"""


@dataclass(frozen=True)
class CheckParams:
    """Parametri immutabili passati ai verificatori"""
    max_n: int = 6
    matrix_max_n: int = 8
    beta_grid: Tuple[Fraction, ...] = tuple(
        Fraction(b) for b in ("-2", "-1", "-1/2", "0", "1/2", "1", "2", "3")
    )
    guard: int = 4
    series_order: int = 12
    max_n_override: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "max_n": self.max_n,
            "matrix_max_n": self.matrix_max_n,
            "beta_grid": [str(b) for b in self.beta_grid],
            "guard": self.guard,
            "series_order": self.series_order,
            "max_n_override": self.max_n_override,
        }


@dataclass
class RiordanConfig:
    """Configurazione centralizzata del toolkit"""
    max_n: int = 6
    matrix_max_n: int = 8
    beta_grid: List[str] = field(
        default_factory=lambda: ["-2", "-1", "-1/2", "0", "1/2", "1", "2", "3"]
    )
    guard: int = 4
    series_order: int = 12
    max_workers: int = 4
    report_dir: str = "reports"
    output_formats: List[str] = field(default_factory=lambda: ["json", "md"])

    # Limiti oltre i quali un check viene marcato not_run
    limits: Dict[str, int] = field(default_factory=lambda: {
        "max_n": 12,
        "series_order": 40,
    })

    def __post_init__(self):
        """Carica configurazione da environment variables se disponibili"""
        if env_max_n := os.getenv("RIORDAN_MAX_N"):
            self.max_n = self._as_int("RIORDAN_MAX_N", env_max_n)

        if env_grid := os.getenv("RIORDAN_BETA_GRID"):
            self.beta_grid = [item.strip() for item in env_grid.split(",") if item.strip()]

        if env_guard := os.getenv("RIORDAN_GUARD"):
            self.guard = self._as_int("RIORDAN_GUARD", env_guard)

        if env_workers := os.getenv("RIORDAN_MAX_WORKERS"):
            self.max_workers = self._as_int("RIORDAN_MAX_WORKERS", env_workers)

        if env_order := os.getenv("RIORDAN_SERIES_ORDER"):
            self.series_order = self._as_int("RIORDAN_SERIES_ORDER", env_order)

        self.validate()

    @staticmethod
    def _as_int(name: str, raw: str) -> int:
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"{name} must be an integer, got {raw!r}") from None

    def validate(self):
        """Verifica i vincoli sui valori"""
        if self.max_n < 0 or self.matrix_max_n < 0:
            raise ConfigError("max_n and matrix_max_n must be >= 0")
        if self.guard < 1:
            raise ConfigError(f"guard must be >= 1, got {self.guard}")
        if self.series_order < 1:
            raise ConfigError(f"series_order must be >= 1, got {self.series_order}")
        if self.max_workers < 1:
            raise ConfigError(f"max_workers must be >= 1, got {self.max_workers}")
        self.get_beta_grid()

    def get_beta_grid(self) -> Tuple[Fraction, ...]:
        """Ritorna la griglia beta come Fraction"""
        try:
            return tuple(as_rational(str(item)) for item in self.beta_grid)
        except ArgumentError as e:
            raise ConfigError(f"invalid beta grid: {e}") from e

    @classmethod
    def from_file(cls, config_path: str = "config.json") -> "RiordanConfig":
        """Carica configurazione da file JSON o YAML"""
        path = Path(config_path)
        if not path.exists():
            return cls()
        with open(path) as f:
            if path.suffix in (".yaml", ".yml"):
                data = yaml.safe_load(f) or {}
            else:
                data = json.load(f)
        if not isinstance(data, dict):
            raise ConfigError(f"{config_path}: top level must be a mapping")
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ConfigError(f"{config_path}: unknown keys {sorted(unknown)}")
        return cls(**data)

    def save_to_file(self, config_path: str = "config.json"):
        """Salva configurazione su file JSON o YAML"""
        config_dict = {k: v for k, v in asdict(self).items() if v is not None}
        with open(config_path, "w") as f:
            if Path(config_path).suffix in (".yaml", ".yml"):
                yaml.safe_dump(config_dict, f, sort_keys=False)
            else:
                json.dump(config_dict, f, indent=2)

    def within_limits(self, params: CheckParams) -> bool:
        """Verifica se i parametri rientrano nei limiti di risorse"""
        return (
            max(params.max_n, params.matrix_max_n) <= self.limits.get("max_n", 12)
            and params.series_order <= self.limits.get("series_order", 40)
        )

    def to_check_params(self, **overrides: Any) -> CheckParams:
        """Parametri per il verificatore, con override da CLI"""
        values = {
            "max_n": self.max_n,
            "matrix_max_n": self.matrix_max_n,
            "beta_grid": self.get_beta_grid(),
            "guard": self.guard,
            "series_order": self.series_order,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        if overrides.get("max_n") is not None:
            values["max_n_override"] = overrides["max_n"]
        if values["max_n"] < 0 or values["guard"] < 1:
            raise ConfigError("max_n must be >= 0 and guard >= 1")
        values["beta_grid"] = tuple(Fraction(b) for b in values["beta_grid"])
        return CheckParams(**values)
