"""
Utility modules for sallykit.
"""

from .environment import (
    KNOWN_ENV_VARS,
    describe_environment,
    env_int,
    env_str,
    get_log_level,
)
from .tracking import log_verification_run, setup_mlflow_tracking

__all__ = [
    # Environment
    "KNOWN_ENV_VARS",
    "describe_environment",
    "env_int",
    "env_str",
    "get_log_level",
    # Tracking
    "log_verification_run",
    "setup_mlflow_tracking",
]
