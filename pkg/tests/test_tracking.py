import sys

import pytest

from sallykit.reports import check_record
from sallykit.utils.tracking import log_verification_run

CHECKS = [check_record("e0", 6, 6), check_record("classification_match", True, True)]


def test_missing_mlflow_is_skipped(monkeypatch):
    monkeypatch.setitem(sys.modules, "mlflow", None)
    assert log_verification_run({"experiment_name": "t"}, {"m": 0, "d": 2}, CHECKS) is None


def test_run_is_logged(tmp_path):
    pytest.importorskip("mlflow")
    tracking = {"experiment_name": "sallykit-test", "tracking_uri": f"file:{tmp_path / 'mlruns'}"}
    run_id = log_verification_run(tracking, {"m": 0, "d": 2, "c": 2, "field": "rational"}, CHECKS)
    assert isinstance(run_id, str) and run_id
