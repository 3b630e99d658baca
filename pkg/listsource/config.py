"""
Configuration loaded from the environment (and an optional .env file).
"""

import logging
import os
import sys
from dataclasses import dataclass

from dotenv import load_dotenv

from listsource.errors import ConfigError

DEFAULT_DATABASE_URL = "sqlite:///data/reports.db"
DEFAULT_CAP = 1_000_000
LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


def _int_from_env(name, default):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Config:
    """Runtime settings for the services and the command line."""

    database_url: str = DEFAULT_DATABASE_URL
    enumeration_cap: int = DEFAULT_CAP
    list_cap: int = DEFAULT_CAP
    mds_subset_cap: int = DEFAULT_CAP
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls, dotenv_path=None):
        """Build a Config from LSC_* environment variables."""
        load_dotenv(dotenv_path)
        level = os.environ.get("LSC_LOG_LEVEL", "WARNING").upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ConfigError(f"LSC_LOG_LEVEL is not a logging level: {level!r}")
        return cls(
            database_url=os.environ.get("LSC_DATABASE_URL", DEFAULT_DATABASE_URL),
            enumeration_cap=_int_from_env("LSC_ENUMERATION_CAP", DEFAULT_CAP),
            list_cap=_int_from_env("LSC_LIST_CAP", DEFAULT_CAP),
            mds_subset_cap=_int_from_env("LSC_MDS_SUBSET_CAP", DEFAULT_CAP),
            log_level=level,
        )


def configure_logging(level="WARNING"):
    """Send package logs to stderr; stdout stays reserved for command output."""
    root = logging.getLogger("listsource")
    if not any(getattr(h, "_listsource", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._listsource = True
        root.addHandler(handler)
    root.setLevel(level)
    return root
