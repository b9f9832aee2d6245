"""
Run defaults loaded from config.yaml, with environment overrides.

Precedence: command-line flag > environment > YAML > model defaults. The
command-line layer is applied by the CLI on top of what `load_settings`
returns.
"""

import logging
import os
from pathlib import Path
from typing import Dict, List, Optional, Union

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from src.exceptions import InvalidConfigError
from src.models.base import Algorithm, SemConfig, TestKind

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path("config.yaml")
CONFIG_ENV = "PCMAX_CONFIG"
LOG_LEVEL_ENV = "PCMAX_LOG_LEVEL"
THREADS_ENV = "PCMAX_THREADS"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Regime(BaseModel):
    """Named parameter preset."""
    alpha: float = Field(..., gt=0.0, lt=1.0)
    nodes: Optional[int] = Field(None, gt=0, description="Benchmark graph size")


class SearchDefaults(BaseModel):
    algorithm: Algorithm = Algorithm.PC_MAX
    test: TestKind = TestKind.FISHER_Z
    alpha: float = Field(0.001, gt=0.0, lt=1.0)
    penalty: float = Field(4.0, gt=0.0)
    max_depth: Optional[int] = Field(None, ge=0)
    threads: int = Field(1, ge=1)


class SimulationDefaults(BaseModel):
    nodes: int = Field(1000, gt=0)
    avg_degree: float = Field(2.0, ge=0.0)
    samples: int = Field(1000, ge=2)
    graph_seed: int = Field(1, ge=0)
    param_seed: int = Field(2, ge=0)
    data_seed: int = Field(3, ge=0)
    sem: SemConfig = Field(default_factory=SemConfig)


class BenchmarkDefaults(BaseModel):
    nodes: int = Field(1000, gt=0)
    avg_degrees: List[float] = Field(default_factory=lambda: [2.0, 4.0])
    reps: int = Field(10, ge=1)
    samples: int = Field(1000, ge=2)
    algorithms: List[Algorithm] = Field(default_factory=lambda: list(Algorithm))
    seed_base: int = Field(1, ge=0)
    threads: int = Field(1, ge=1)


class LoggingSettings(BaseModel):
    level: str = "INFO"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    @field_validator("level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in LOG_LEVELS:
            raise ValueError(f"Unknown log level '{value}'")
        return value


class Settings(BaseModel):
    """Everything config.yaml can set."""
    search: SearchDefaults = Field(default_factory=SearchDefaults)
    simulation: SimulationDefaults = Field(default_factory=SimulationDefaults)
    benchmark: BenchmarkDefaults = Field(default_factory=BenchmarkDefaults)
    regimes: Dict[str, Regime] = Field(
        default_factory=lambda: {
            "standard": Regime(alpha=0.001, nodes=1000),
            "large": Regime(alpha=0.00001),
        }
    )
    logging: LoggingSettings = Field(default_factory=LoggingSettings)

    def regime(self, name: str) -> Regime:
        """Look up a regime by name.

        Raises:
            InvalidConfigError: If no such regime is defined
        """
        if name not in self.regimes:
            raise InvalidConfigError(
                f"Unknown regime '{name}', expected one of {sorted(self.regimes)}"
            )
        return self.regimes[name]


def _read_yaml(path: Path) -> dict:
    try:
        with path.open("r") as f:
            loaded = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise InvalidConfigError(f"Cannot parse {path}: {e}")
    if loaded is None:
        return {}
    if not isinstance(loaded, dict):
        raise InvalidConfigError(f"{path} must contain a mapping at the top level")
    return loaded


def _apply_environment(raw: dict) -> dict:
    level = os.getenv(LOG_LEVEL_ENV)
    if level:
        raw.setdefault("logging", {})["level"] = level.upper()
    threads = os.getenv(THREADS_ENV)
    if threads:
        try:
            count = int(threads)
        except ValueError:
            raise InvalidConfigError(f"{THREADS_ENV} must be an integer, got '{threads}'")
        raw.setdefault("search", {})["threads"] = count
        raw.setdefault("benchmark", {})["threads"] = count
    return raw


def load_settings(path: Union[str, Path, None] = None) -> Settings:
    """Load settings from YAML and the environment.

    A `.env` file is honoured if present. Without an explicit path the file
    named by PCMAX_CONFIG is used, then ./config.yaml; a missing default
    file just means built-in defaults.

    Raises:
        InvalidConfigError: If the file is unreadable or a value is invalid
    """
    load_dotenv()
    explicit = path or os.getenv(CONFIG_ENV)
    config_path = Path(explicit) if explicit else DEFAULT_CONFIG_PATH

    raw: dict = {}
    if config_path.exists():
        raw = _read_yaml(config_path)
    elif explicit:
        raise InvalidConfigError(f"Config file not found: {config_path}")

    try:
        settings = Settings.model_validate(_apply_environment(raw))
    except ValidationError as e:
        raise InvalidConfigError(f"Invalid configuration in {config_path}: {e}")
    logger.debug("Loaded settings from %s", config_path if config_path.exists() else "defaults")
    return settings
