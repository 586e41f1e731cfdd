"""
Environment variable utilities.

Settings in config.yaml can be overridden per process through a small set
of SALLYKIT_* variables; LOG_LEVEL controls logging verbosity.
"""

import logging
import os

logger = logging.getLogger(__name__)

# Variables read by sallykit when present
KNOWN_ENV_VARS = [
    "LOG_LEVEL",
    "SALLYKIT_DEGREE_CAP",
    "SALLYKIT_N_MAX",
    "SALLYKIT_TRACKING_URI",
]


def env_str(name: str, default: str | None = None) -> str | None:
    """Get a string override from the environment."""
    value = os.getenv(name)
    return value if value else default


def env_int(name: str, default: int) -> int:
    """
    Get an integer override from the environment.

    Args:
        name: Variable name.
        default: Value used when the variable is unset or malformed.

    Returns:
        The parsed integer or the default.
    """
    value = os.getenv(name)
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer", name, value)
        return default


def get_log_level() -> str:
    """Get the logging level name from environment."""
    return os.getenv("LOG_LEVEL", "INFO").upper()


def describe_environment() -> dict[str, str]:
    """Return the sallykit-related variables that are currently set."""
    return {var: os.environ[var] for var in KNOWN_ENV_VARS if os.getenv(var)}
