"""
Report shapes and rendering for the command line.

Every command produces one report dict. Reports are rendered as JSON with
sorted keys (byte-identical for identical input) or as an aligned table.
"""

import json
import logging
from typing import Any, Optional, TypedDict

from sallykit.algebra.hilbert import HilbertData
from sallykit.algebra.ideals import RingPresentation
from sallykit.algebra.sally import ClassificationReport, DepthProbe, RatliffRushPowers, SallyTable
from sallykit.errors import ParseError, SallyKitError

logger = logging.getLogger(__name__)

PRIME_FIELD_CAVEAT = (
    "Computed over a prime field; claims that depend on a generic choice of "
    "superficial elements are checked numerically, not re-proved"
)


class Report(TypedDict, total=False):
    """Base report type for all commands."""
    success: bool
    message: str
    error: Optional[str]
    status: str
    command: str
    ring: str
    ideal: str
    values: list[int]
    coefficients: list[int]
    numerator: list[int]
    sally: dict[str, Any]
    classification: dict[str, Any]
    certified_up_to: int
    warnings: list[str]


class SallySection(TypedDict):
    """Sally module data: ℓ(S_n), ℓ(L_n) for n >= 1 and ℓ(C_n) for n >= 2."""
    S: list[int]
    L: list[int]
    C: list[int]
    c: int
    flags: dict[str, bool]
    q_cap_i2: bool
    reduction_number: int


# "pass" is a keyword, hence the functional form
CheckRecord = TypedDict(
    "CheckRecord",
    {"name": str, "expected": Any, "computed": Any, "pass": bool},
)


class VerifyReport(Report):
    """Report of the `verify` command."""
    family: dict[str, Any]
    checks: list[CheckRecord]


def success_response(message: str, **kwargs: Any) -> dict[str, Any]:
    """
    Create a standardized success report.

    Args:
        message: Human-readable summary.
        **kwargs: Additional report fields.

    Returns:
        A dict with success=True and the provided message and fields.
    """
    return {
        "success": True,
        "message": message,
        **kwargs,
    }


def error_response(
    operation: str,
    error: Exception,
    identifier: Optional[str] = None,
    log_error: bool = True,
    **kwargs: Any,
) -> dict[str, Any]:
    """
    Create a standardized error report.

    Args:
        operation: The operation that failed (e.g., "compute coefficients").
        error: The exception that was caught.
        identifier: Optional context (e.g., the ideal name).
        log_error: Whether to log the error (default True).
        **kwargs: Additional report fields.

    Returns:
        A dict with success=False, the error kind, and a formatted message.
    """
    error_str = str(error)

    if identifier:
        message = f"Failed to {operation} for {identifier}: {error_str}"
    else:
        message = f"Failed to {operation}: {error_str}"

    if log_error:
        logger.error(message, exc_info=True)

    details: dict[str, Any] = {"kind": type(error).__name__}
    if isinstance(error, ParseError):
        details["line"] = error.line
        details["column"] = error.column
    if isinstance(error, SallyKitError):
        details["exit_code"] = error.exit_code

    return {
        "success": False,
        "error": error_str,
        "message": message,
        "error_details": details,
        **kwargs,
    }


def check_record(name: str, expected: Any, computed: Any) -> CheckRecord:
    """One verification claim; passes on exact equality."""
    return {"name": name, "expected": expected, "computed": computed, "pass": expected == computed}


def field_warnings(ring: RingPresentation) -> list[str]:
    if ring.is_prime_field:
        logger.warning(PRIME_FIELD_CAVEAT)
        return [PRIME_FIELD_CAVEAT]
    return []


def hilbert_fields(data: HilbertData) -> dict[str, Any]:
    return {
        "values": list(data.values),
        "hilbert_function": list(data.function),
        "coefficients": list(data.coefficients),
        "numerator": list(data.numerator),
        "postulation": data.postulation,
        "dimension": data.dimension,
        "certified_up_to": data.certified_up_to,
    }


def sally_section(table: SallyTable) -> SallySection:
    top = table.certified_up_to
    section: SallySection = {
        "S": [table.sally[n] for n in range(1, top + 1)],
        "L": [table.lower[n] for n in range(1, top + 1)],
        "C": [table.upper[n] for n in range(2, top + 1)],
        "c": table.c,
        "flags": dict(table.flags),
        "q_cap_i2": table.q_cap_i2,
        "reduction_number": table.reduction_number,
    }
    return section


def classification_section(report: ClassificationReport) -> dict[str, Any]:
    return {
        "branch": report.branch,
        "case": report.case,
        "case_label": report.case_label,
        "match": report.match,
        "postulation": report.postulation,
        "predicted_postulation": report.predicted_postulation,
        "colength": report.colength,
        "sally_first": report.sally_first,
        "c": report.c,
        "northcott_gap": report.northcott_gap,
        "predicted_coefficients": list(report.predicted_coefficients),
        "predicted_numerator": list(report.predicted_numerator),
        "assumptions": list(report.assumptions),
        "checks": dict(report.checks),
        "refinements": [
            {
                "name": r.name,
                "predicted_numerator": list(r.predicted_numerator),
                "predicted_coefficients": list(r.predicted_coefficients),
                "match": r.match,
            }
            for r in report.refinements
        ],
    }


def depth_section(probe: DepthProbe) -> dict[str, Any]:
    return {
        "positive_depth": probe.positive_depth,
        "vv_depth_lower_bound": probe.vv_depth_lower_bound,
        "first_gap": probe.first_gap,
        "certified_up_to": probe.certified_up_to,
    }


def ratliff_rush_section(powers: RatliffRushPowers) -> dict[str, Any]:
    return {
        "gaps": {str(n): gap for n, gap in sorted(powers.gaps.items())},
        "reduction_condition": {str(n): ok for n, ok in sorted(powers.reduction_condition.items())},
        "certified_up_to": powers.certified_up_to,
    }


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    return str(value)


def _flatten(prefix: str, value: Any, rows: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten(f"{prefix}.{key}" if prefix else str(key), value[key], rows)
    elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        for k, item in enumerate(value):
            _flatten(f"{prefix}[{k}]", item, rows)
    else:
        rows.append((prefix, _scalar(value)))


def _checks_table(checks: list[CheckRecord]) -> list[str]:
    header = ("check", "expected", "computed", "pass")
    rows = [(c["name"], _scalar(c["expected"]), _scalar(c["computed"]), _scalar(c["pass"])) for c in checks]
    widths = [max(len(row[k]) for row in [header, *rows]) for k in range(4)]
    return ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in [header, *rows]]


def render(report: dict[str, Any], fmt: str = "json") -> str:
    """
    Render a report.

    Args:
        report: Report dict.
        fmt: "json" (sorted keys, two-space indent) or "table".
    """
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    if fmt != "table":
        raise ValueError(f"Unknown format {fmt!r}")

    body = {k: v for k, v in report.items() if k != "checks"}
    rows: list[tuple[str, str]] = []
    _flatten("", body, rows)
    width = max((len(key) for key, _ in rows), default=0)
    lines = [f"{key.ljust(width)}  {value}" for key, value in rows]
    if report.get("checks"):
        lines += ["", *_checks_table(report["checks"])]
    return "\n".join(lines)
