"""
Runtime configuration for affine_kschur

- Values come from the environment (optionally a .env file)
- Nothing is required; command-line flags override every default
- Logging goes to stderr so rendered output on stdout stays exact
"""

import os
import logging
from typing import Optional

from dotenv import load_dotenv

from .errors import ConfigurationError

load_dotenv()

LOG_LEVEL = os.getenv("KSCHUR_LOG_LEVEL", "WARNING").upper()
LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"

INT_SETTINGS = {
    "KSCHUR_SEED": "42",
    "KSCHUR_MAX_LEN": "8",
    "KSCHUR_RANDOM_WORDS": "500",
    "KSCHUR_COMMUTATION_SAMPLES": "100",
    "KSCHUR_WALK_BOUND": "3",
}


def get_int(name: str) -> int:
    """
    Read one integer setting.

    Args:
        name (str): one of INT_SETTINGS

    Returns:
        int: parsed value, or the default when unset
    """
    raw = os.getenv(name, INT_SETTINGS[name])
    try:
        return int(raw)
    except (TypeError, ValueError):
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}")


def validate_env():
    bad = []
    for name in INT_SETTINGS:
        try:
            value = get_int(name)
        except ConfigurationError:
            bad.append(name)
            continue
        if value < 0:
            bad.append(name)
    if bad:
        raise ConfigurationError("Invalid settings: " + ", ".join(bad))


def default_seed() -> int:
    return get_int("KSCHUR_SEED")


def default_max_len() -> int:
    return get_int("KSCHUR_MAX_LEN")


def random_word_count() -> int:
    return get_int("KSCHUR_RANDOM_WORDS")


def commutation_samples() -> int:
    return get_int("KSCHUR_COMMUTATION_SAMPLES")


def walk_bound() -> int:
    return get_int("KSCHUR_WALK_BOUND")


def configure_logging(level: Optional[str] = None):
    name = (level or LOG_LEVEL).upper()
    logging.basicConfig(
        level=getattr(logging, name, logging.WARNING),
        format=LOG_FORMAT,
        datefmt=LOG_DATEFMT,
    )
