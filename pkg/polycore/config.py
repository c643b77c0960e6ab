"""
Simple configuration management
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

DEFAULT_CONFIG_DIR = Path.home() / ".polybalance"

DEFAULTS: Dict[str, Any] = {
    "coordinate_cap": 1_000_000,
    "enumeration_cap": 10,
    "max_nodes": 10_000_000,
    "max_abs": 1,
    "log_dir": str(DEFAULT_CONFIG_DIR),
    "log_level": "INFO",
}

CAP_ENV_VAR = "POLYOMINO_CAP"

logger = logging.getLogger(__name__)


class Config:
    """Minimal configuration storage backed by a JSON file"""

    def __init__(self, path: Optional[Union[str, Path]] = None):
        self._config_file = Path(path) if path else DEFAULT_CONFIG_DIR / "config.json"
        self._config_dir = self._config_file.parent
        self._data: Dict[str, Any] = {}
        self._load()

    def _load(self):
        """Load configuration from file"""
        if self._config_file.exists():
            try:
                with open(self._config_file, "r") as f:
                    data = json.load(f)
                if isinstance(data, dict):
                    self._data = data
            except (json.JSONDecodeError, IOError):
                self._data = {}

    def save(self):
        """Save configuration to file"""
        self._config_dir.mkdir(parents=True, exist_ok=True)
        with open(self._config_file, "w") as f:
            json.dump(self._data, f, indent=2, sort_keys=True)

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value, falling back to the built-in default"""
        if key in self._data:
            return self._data[key]
        if default is not None:
            return default
        return DEFAULTS.get(key)

    def set(self, key: str, value: Any):
        """Set configuration value"""
        self._data[key] = value

    @property
    def enumeration_cap(self) -> int:
        """Enumeration cap, with POLYOMINO_CAP taking precedence"""
        raw = os.environ.get(CAP_ENV_VAR)
        if raw is not None:
            try:
                return int(raw)
            except ValueError:
                logger.warning(f"Ignoring non-integer {CAP_ENV_VAR}={raw!r}")
        return int(self.get("enumeration_cap"))
