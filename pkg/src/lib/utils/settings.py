"""
Runtime configuration.

Values are read from the environment, with .env.local loaded first so a local
file can pin threads, seeds and trial counts for reproducible runs.

Usage:
    from lib.utils.settings import get_settings

    settings = get_settings()
    print(settings.threads)
"""

import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import load_dotenv, find_dotenv

from .errors import ConfigError

# Load environment variables from .env.local
load_dotenv(find_dotenv('.env.local'))


@dataclass(frozen=True)
class Settings:
    threads: int
    seed: int
    trials: int
    oracle_max_vertices: int
    log_level: str


def _int_from_env(name, default, minimum=None):
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if minimum is not None and value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def load_settings():
    """
    Build a Settings object from the current environment.

    Expected env vars (all optional):
        - SURPLUS_LAB_THREADS
        - SURPLUS_LAB_SEED
        - SURPLUS_LAB_TRIALS
        - SURPLUS_LAB_ORACLE_MAX_N
        - SURPLUS_LAB_LOG_LEVEL

    Returns:
        Settings: validated configuration

    Raises:
        ConfigError: If a variable holds an invalid value
    """
    return Settings(
        threads=_int_from_env('SURPLUS_LAB_THREADS', os.cpu_count() or 1, minimum=1),
        seed=_int_from_env('SURPLUS_LAB_SEED', 0, minimum=0),
        trials=_int_from_env('SURPLUS_LAB_TRIALS', 64, minimum=1),
        oracle_max_vertices=_int_from_env('SURPLUS_LAB_ORACLE_MAX_N', 24, minimum=1),
        log_level=os.getenv('SURPLUS_LAB_LOG_LEVEL', 'WARNING').upper(),
    )


@lru_cache(maxsize=1)
def get_settings():
    """Cached process-wide settings."""
    return load_settings()
