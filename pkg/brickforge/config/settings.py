"""
Runtime settings for brickforge.

Values come from the environment (a ``.env`` file in the working directory
is loaded first) and fall back to the defaults below.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

BASE_DIR = Path(__file__).resolve().parent.parent

# Enumeration beyond ~16 vertices is out of reach; the cap may only lower it.
HARD_CAP = 16
CAP = min(int(os.environ.get("BRICKFORGE_CAP", 12)), HARD_CAP)

JOBS = int(os.environ.get("BRICKFORGE_JOBS", 0)) or (os.cpu_count() or 1)
SEED = int(os.environ.get("BRICKFORGE_SEED", 0))
SLOW_TESTS = os.environ.get("BRICKFORGE_SLOW_TESTS", "") == "1"

LOG_LEVEL = os.environ.get("BRICKFORGE_LOG_LEVEL", "INFO")

PROFILES_DIR = BASE_DIR / "config" / "profiles"

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {name} {module} {process:d} {thread:d} {message}",
            "style": "{",
        },
        "simple": {
            "format": "{levelname} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "level": LOG_LEVEL,
            "class": "logging.StreamHandler",
            "formatter": "simple",
        },
    },
    "loggers": {
        "brickforge": {
            "handlers": ["console"],
            "level": LOG_LEVEL,
            "propagate": False,
        },
    },
}


def logging_config(level: str | None = None) -> dict:
    """Return ``LOGGING`` with every handler and logger set to ``level``."""
    if not level:
        return LOGGING
    config = {
        **LOGGING,
        "handlers": {
            name: {**handler, "level": level}
            for name, handler in LOGGING["handlers"].items()
        },
        "loggers": {
            name: {**logger, "level": level}
            for name, logger in LOGGING["loggers"].items()
        },
    }
    return config
