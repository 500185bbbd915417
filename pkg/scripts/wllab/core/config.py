"""Configuration loading and capacity limits."""

import json
import logging
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)

LIMIT_ENV_VAR = "WLLAB_LIMIT_N"

DEFAULT_CONFIG_PATH = (
    Path(__file__).resolve().parent.parent / "config" / "default.json"
)


@dataclass(frozen=True)
class Limits:
    """Vertex-count and budget limits for the exponential kernels."""

    canonical_max_vertices: int = 24
    circumference_max_vertices: int = 20
    enumeration_max_uniform: int = 8
    enumeration_max_featured: int = 7
    sampling_budget: int = 100_000

    @classmethod
    def from_config(cls, block: Optional[Dict[str, Any]]) -> "Limits":
        known = {f.name for f in fields(cls)}
        values = {k: int(v) for k, v in (block or {}).items() if k in known}
        unknown = set(block or {}) - known
        if unknown:
            logger.warning(f"Ignoring unknown limit keys: {sorted(unknown)}")
        return cls(**values)

    def with_env_override(self) -> "Limits":
        """Raise every vertex-count limit to at least ``WLLAB_LIMIT_N``."""
        raw = os.environ.get(LIMIT_ENV_VAR)
        if not raw:
            return self
        try:
            floor = int(raw)
        except ValueError:
            logger.warning(f"Ignoring non-integer {LIMIT_ENV_VAR}={raw!r}")
            return self
        return replace(
            self,
            canonical_max_vertices=max(self.canonical_max_vertices, floor),
            circumference_max_vertices=max(self.circumference_max_vertices, floor),
            enumeration_max_uniform=max(self.enumeration_max_uniform, floor),
            enumeration_max_featured=max(self.enumeration_max_featured, floor),
        )

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


_configured = Limits()


def configure_limits(limits: Limits) -> None:
    """Install limits (normally from the ``limits`` config block)."""
    global _configured
    _configured = limits


def active_limits() -> Limits:
    """Return the configured limits with the environment override applied."""
    return _configured.with_env_override()


def default_config() -> Dict[str, Any]:
    return {
        "logging": {"level": "INFO", "console": True, "file": None},
        "limits": Limits().to_dict(),
        "checks": {},
        "seed": 0,
    }


def load_config(config_path: Optional[Path]) -> Dict[str, Any]:
    """Load configuration from a JSON or YAML file, or fall back to defaults.

    Args:
        config_path: Path to a ``.json``, ``.yaml`` or ``.yml`` file

    Returns:
        Configuration dictionary
    """
    if config_path and config_path.exists():
        with open(config_path, "r", encoding="utf-8") as f:
            if config_path.suffix in (".yaml", ".yml"):
                loaded = yaml.safe_load(f) or {}
            else:
                loaded = json.load(f)
        config = default_config()
        config.update(loaded)
        return config

    return default_config()
