"""
MLflow utilities for tracking verification runs.

MLflow is optional: it is imported only when `verify --track` is used.
"""

import logging
from typing import Any

logger = logging.getLogger(__name__)


def setup_mlflow_tracking(tracking: dict[str, Any]) -> Any:
    """
    Configure MLflow from the `tracking` section of config.yaml.

    Args:
        tracking: Mapping with `tracking_uri` and `experiment_name`.

    Returns:
        The imported mlflow module.

    Raises:
        ImportError: If mlflow is not installed.
    """
    import mlflow

    if tracking.get("tracking_uri"):
        mlflow.set_tracking_uri(tracking["tracking_uri"])
    mlflow.set_experiment(tracking.get("experiment_name", "sallykit-verify"))
    return mlflow


def log_verification_run(
    tracking: dict[str, Any],
    params: dict[str, Any],
    checks: list[dict[str, Any]],
) -> str | None:
    """
    Log one family verification as an MLflow run.

    Args:
        tracking: Tracking configuration.
        params: Family parameters (m, d, c, field).
        checks: Check records produced by the verify command.

    Returns:
        The MLflow run id, or None if mlflow is unavailable.
    """
    try:
        mlflow = setup_mlflow_tracking(tracking)
    except ImportError:
        logger.warning("mlflow is not installed; skipping run tracking")
        return None

    with mlflow.start_run() as run:
        mlflow.log_params(params)
        mlflow.log_metric("checks_total", len(checks))
        mlflow.log_metric("checks_passed", sum(1 for check in checks if check["pass"]))
        for check in checks:
            computed = check.get("computed")
            if isinstance(computed, int) and not isinstance(computed, bool):
                mlflow.log_metric(check["name"], computed)
        logger.info("Logged verification run %s", run.info.run_id)
        return run.info.run_id
