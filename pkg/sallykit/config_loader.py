"""
Centralized configuration loading for sallykit.

This module provides a single source of truth for loading configuration
from sallykit/config.yaml. A few settings can be overridden from the
environment (see sallykit.utils.environment).
"""

from functools import lru_cache
from pathlib import Path
from typing import Any

import yaml

from sallykit.utils.environment import env_int, env_str

CONFIG_PATH = Path(__file__).parent / "config.yaml"


@lru_cache(maxsize=1)
def load_config() -> dict[str, Any]:
    """
    Load configuration from sallykit/config.yaml.

    Returns:
        Configuration dictionary with all settings.

    Raises:
        FileNotFoundError: If config.yaml doesn't exist.
        yaml.YAMLError: If config.yaml is invalid.
    """
    with open(CONFIG_PATH) as f:
        return yaml.safe_load(f)


def reset_config() -> None:
    """Drop the cached configuration (tests and env overrides)."""
    load_config.cache_clear()


def get_degree_cap() -> int:
    """Get the Buchberger degree ceiling from config."""
    return env_int("SALLYKIT_DEGREE_CAP", load_config()["degree_cap"])


def get_default_order() -> str:
    """Get the default global monomial order from config."""
    return load_config()["default_order"]


def get_default_prime() -> int:
    """Get the default prime modulus from config."""
    return load_config()["default_prime"]


def get_truncation_slack() -> int:
    """Get the slack added to the first truncation level."""
    return load_config()["truncation_slack"]


def get_truncation_step() -> int:
    """Get the increment between truncation levels."""
    return load_config()["truncation_step"]


def get_truncation_cap() -> int:
    """Get the highest truncation level tried before giving up."""
    return load_config()["truncation_cap"]


def get_dimension_probe_degree() -> int:
    """Get the maximal-ideal power used when detecting Krull dimension."""
    return load_config()["dimension_probe_degree"]


def get_stabilization_window() -> int:
    """Get the stabilization window W from config."""
    return load_config()["stabilization_window"]


def get_numerator_cap() -> int:
    """Get the series-numerator search cap from config."""
    return load_config()["numerator_cap"]


def get_n_max() -> int:
    """Get the default table length / reduction-number cap."""
    return env_int("SALLYKIT_N_MAX", load_config()["n_max"])


def get_ratliff_rush_cap() -> int:
    """Get the Ratliff-Rush chain cap from config."""
    return load_config()["ratliff_rush_cap"]


def get_tracking_config() -> dict[str, Any]:
    """Get experiment tracking configuration for `verify --track`."""
    tracking = dict(load_config().get("tracking", {}))
    tracking["tracking_uri"] = env_str("SALLYKIT_TRACKING_URI", tracking.get("tracking_uri"))
    return tracking


def get_verify_config() -> dict[str, int]:
    """Get the degrees used by the `verify` command."""
    return dict(load_config()["verify"])
