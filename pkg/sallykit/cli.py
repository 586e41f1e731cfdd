"""
Command line interface.

    python main.py coeffs --ring ring.json --ideal I --reduction Q
    python main.py verify --m 0 --d 2
    python main.py family-emit --m 1 --d 2 > family.json

Every command prints one report on stdout (JSON by default) and returns an
exit code: 0 success, 1 verification mismatch, 2 input error, 3 resource or
stabilization failure. Logging goes to stderr.
"""

import argparse
import logging
from dataclasses import dataclass
from typing import Any, Callable, Optional

from sallykit.algebra.hilbert import expand_numerator, hilbert_data, hilbert_samuel_values
from sallykit.algebra.ideals import (
    IdealHandle,
    RingPresentation,
    artinian_length,
    ideal_equal,
    ideal_power,
    ideal_product,
    quotient_length,
)
from sallykit.algebra.poly import format_poly
from sallykit.algebra.sally import (
    check_cohen_macaulay,
    check_intersection_identities,
    classify,
    decomposition_check,
    depth_probe,
    e1_formula_check,
    family_filtration,
    ratliff_rush,
    ratliff_rush_powers,
    sally_table,
)
from sallykit.config_loader import get_default_prime, get_n_max, get_tracking_config, get_verify_config
from sallykit.documents import RingDocument, document_ideal, document_ring, load_ring_document, print_ring_document
from sallykit.errors import InputError, SallyKitError
from sallykit.family import build_family, expected_invariants, family_spec
from sallykit.reports import (
    check_record,
    classification_section,
    depth_section,
    error_response,
    field_warnings,
    hilbert_fields,
    ratliff_rush_section,
    render,
    sally_section,
    success_response,
)
from sallykit.utils.tracking import log_verification_run

logger = logging.getLogger(__name__)

# Handlers return (report, exit code); "raw" reports are printed verbatim
Handler = Callable[[argparse.Namespace], tuple[Any, int]]


@dataclass
class _Inputs:
    doc: RingDocument
    ring: RingPresentation
    ideal: IdealHandle
    reduction: Optional[IdealHandle]


def _field(value: Optional[str]) -> Optional[str]:
    if value == "prime":
        return f"prime:{get_default_prime()}"
    return value


def _ring_label(ring: RingPresentation) -> str:
    return f"{ring.field} [{', '.join(ring.variables)}] / {len(ring.relations)} relations"


def _load(args: argparse.Namespace, need_reduction: bool = False) -> _Inputs:
    if not args.ring:
        raise InputError(f"{args.command} needs --ring <path>")
    doc = load_ring_document(args.ring)
    ring = document_ring(doc, field=_field(args.field), name=args.ring)
    ideal = document_ideal(ring, doc, args.ideal)
    reduction = None
    if args.reduction:
        reduction = document_ideal(ring, doc, args.reduction)
    elif need_reduction:
        raise InputError(f"{args.command} needs --reduction <name>")
    return _Inputs(doc, ring, ideal, reduction)


def _base(inputs: _Inputs, command: str, message: str, **kwargs: Any) -> dict[str, Any]:
    return success_response(
        message,
        command=command,
        ring=_ring_label(inputs.ring),
        ideal=inputs.ideal.describe(),
        warnings=field_warnings(inputs.ring),
        **kwargs,
    )


def _n_max(args: argparse.Namespace) -> int:
    return get_n_max() if args.n_max is None else args.n_max


def cmd_length(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    inputs = _load(args)
    values = hilbert_samuel_values(inputs.ring, inputs.ideal, args.power)
    report = _base(
        inputs,
        "length",
        f"ℓ(A/{args.ideal}^{args.power + 1}) = {values[-1].value}",
        values=[v.value for v in values],
        length=values[-1].value,
        certified_at=[v.certified_at for v in values],
        certified_up_to=args.power,
    )
    return report, 0


def cmd_coeffs(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    inputs = _load(args)
    data = hilbert_data(inputs.ring, inputs.ideal, _n_max(args))
    extra: dict[str, Any] = {}
    colength = data.values[0]
    extra["northcott_gap"] = data.e(1) - data.e(0) + colength
    if inputs.reduction is not None:
        extra["reduction_colength"] = artinian_length(inputs.ring, inputs.reduction).value
    report = _base(inputs, "coeffs", f"e = {list(data.coefficients)}", **hilbert_fields(data), **extra)
    return report, 0


def cmd_series(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    inputs = _load(args)
    data = hilbert_data(inputs.ring, inputs.ideal, _n_max(args))
    expansion = expand_numerator(data.numerator, data.dimension, len(data.function))
    report = _base(
        inputs,
        "series",
        f"h(z) = {list(data.numerator)}",
        **hilbert_fields(data),
        series_matches_values=expansion == list(data.function),
    )
    return report, 0


def cmd_sally_report(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    inputs = _load(args, need_reduction=True)
    N = _n_max(args)
    table = sally_table(inputs.ring, inputs.ideal, inputs.reduction, N, vaz_pinto=tuple(args.vaz_pinto))
    extra: dict[str, Any] = {}
    if table.vaz_pinto:
        extra["vaz_pinto"] = {
            str(i): {str(n): v for n, v in sorted(row.items())} for i, row in sorted(table.vaz_pinto.items())
        }
    if table.q_cap_i2:
        result = decomposition_check(inputs.ring, inputs.ideal, inputs.reduction, N)
        extra["decomposition"] = {"passed": result.passed, "checked_up_to": result.checked_up_to}
    report = _base(
        inputs,
        "sally-report",
        f"ℓ(S_n) = {list(table.sally.values())}",
        sally=sally_section(table),
        certified_up_to=table.certified_up_to,
        **extra,
    )
    return report, 0


def cmd_rr(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    inputs = _load(args)
    closure = ratliff_rush(inputs.ring, inputs.ideal)
    powers = ratliff_rush_powers(inputs.ring, inputs.ideal, _n_max(args), inputs.reduction)
    report = _base(
        inputs,
        "rr",
        f"closure gaps {powers.gaps}",
        closure=[format_poly(g) for g in closure.explicit_generators()],
        closure_is_ideal=ideal_equal(closure, inputs.ideal),
        ratliff_rush=ratliff_rush_section(powers),
        certified_up_to=powers.certified_up_to,
    )
    return report, 0


def cmd_depth_probe(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    inputs = _load(args, need_reduction=True)
    probe = depth_probe(inputs.ring, inputs.ideal, inputs.reduction, _n_max(args))
    report = _base(
        inputs,
        "depth-probe",
        "positive depth" if probe.positive_depth else f"closure gap at n = {probe.first_gap}",
        depth=depth_section(probe),
        certified_up_to=probe.certified_up_to,
    )
    return report, 0


def cmd_classify(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    inputs = _load(args, need_reduction=True)
    N = max(_n_max(args), 4)
    data = hilbert_data(inputs.ring, inputs.ideal, N)
    table = sally_table(inputs.ring, inputs.ideal, inputs.reduction, N)
    result = classify(inputs.ring, inputs.ideal, inputs.reduction, N, hilbert=data, table=table)
    report = _base(
        inputs,
        "classify",
        f"{result.branch}" + (f" ({result.case})" if result.case else ""),
        coefficients=list(data.coefficients),
        numerator=list(data.numerator),
        values=list(data.values),
        sally=sally_section(table),
        classification=classification_section(result),
        certified_up_to=min(data.certified_up_to, table.certified_up_to),
    )
    return report, 0


def _family_checks(args: argparse.Namespace) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    spec = family_spec(args.m, args.d, args.c, _field(args.field) or "rational")
    doc = build_family(spec)
    ring = document_ring(doc, expected_dimension=spec.d, name=spec.label)
    m = document_ideal(ring, doc, "I")
    Q = document_ideal(ring, doc, "Q")
    expected = expected_invariants(spec)
    degrees = get_verify_config()
    N = degrees["table_degree"] if args.n_max is None else args.n_max
    probe_degree = degrees["probe_degree"]
    d, c = spec.d, spec.c

    checks = [
        check_record("dimension", d, ring.dimension),
        check_record("length_A_over_m", 1, artinian_length(ring, m).value),
        check_record("length_A_over_Q", expected["colength_Q"], artinian_length(ring, Q).value),
        check_record("cohen_macaulay", True, check_cohen_macaulay(ring, Q)),
    ]

    data = hilbert_data(ring, m, N, d)
    checks += [
        check_record("e0", expected["e0"], data.e(0)),
        check_record("e1", expected["e1"], data.e(1)),
        check_record("coefficients", expected["coefficients"], list(data.coefficients)),
        check_record("numerator", expected["numerator"], list(data.numerator)),
        check_record("postulation", expected["postulation"], data.postulation),
    ]

    table = sally_table(ring, m, Q, N)
    checks += [
        check_record("sally_first", expected["sally_first"], table.sally_first),
        check_record("c", expected["c"], table.c),
        check_record("Q_cap_m2=Qm", True, table.q_cap_i2),
        check_record("m^3=Qm^2", False, table.flags["I^3=QI^2"]),
        check_record("m^4=Qm^3", True, table.flags["I^4=QI^3"]),
        check_record("reduction_number", 3, table.reduction_number),
    ]

    decomposition = decomposition_check(ring, m, Q, N)
    checks.append(check_record("decomposition", True, decomposition.passed))
    e1_check = e1_formula_check(ring, m, Q, hilbert=data, N=N)
    checks.append(check_record("e1_excess", 1, e1_check.excess))
    identities = check_intersection_identities(ring, m, Q)
    checks.append(check_record("intersection_identities", True, all(identities.values())))

    result = classify(ring, m, Q, N, hilbert=data, table=table)
    checks += [
        check_record("branch", "linear-sally-quotient", result.branch),
        check_record("case", expected["case"], result.case),
        check_record("case_label", expected["case_label"], result.case_label),
        check_record("classification_match", True, result.match),
        check_record("sally_quotient_formula", True, result.checks.get("sally_quotient_formula")),
    ]

    # Adjoining w's makes depth G(m) = d - c, so closures only differ for c = d
    powers = ratliff_rush_powers(ring, m, probe_degree)
    probe = depth_probe(ring, m, Q, probe_degree)
    checks += [
        check_record("rr_gap_2", 1 if c == d else 0, powers.gaps[2]),
        check_record("positive_depth", c < d, probe.positive_depth),
    ]

    if c == d:
        K = family_filtration(ring)
        checks.append(check_record("K2_over_m2", 1, quotient_length(ring, K[2], ideal_power(m, 2)).value))
        checks.append(
            check_record(
                "K_reduction",
                True,
                all(ideal_equal(K[n + 1], ideal_product(Q, K[n])) for n in range(2, probe_degree)),
            )
        )

    context = {
        "spec": spec,
        "ring": ring,
        "data": data,
        "table": table,
        "classification": result,
        "N": N,
    }
    return context, checks


def cmd_verify(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    context, checks = _family_checks(args)
    spec = context["spec"]
    failed = [check["name"] for check in checks if not check["pass"]]
    status = "fail" if failed else "pass"
    report = success_response(
        f"{spec.label}: {len(checks) - len(failed)}/{len(checks)} checks passed",
        command="verify",
        status=status,
        ring=spec.label,
        ideal="m",
        family={"m": spec.m, "d": spec.d, "c": spec.c, "field": spec.field},
        values=list(context["data"].values),
        coefficients=list(context["data"].coefficients),
        numerator=list(context["data"].numerator),
        sally=sally_section(context["table"]),
        classification=classification_section(context["classification"]),
        certified_up_to=context["N"],
        warnings=field_warnings(context["ring"]),
        checks=checks,
    )
    if failed:
        logger.warning("Verification of %s failed: %s", spec.label, ", ".join(failed))
    if args.track:
        params = {"m": spec.m, "d": spec.d, "c": spec.c, "field": spec.field}
        run_id = log_verification_run(get_tracking_config(), params, checks)
        if run_id:
            report["mlflow_run_id"] = run_id
    return report, 1 if failed else 0


def cmd_family_emit(args: argparse.Namespace) -> tuple[str, int]:
    spec = family_spec(args.m, args.d, args.c, _field(args.field) or "rational")
    return print_ring_document(build_family(spec)), 0


COMMANDS: dict[str, tuple[Handler, str]] = {
    "length": (cmd_length, "compute lengths"),
    "coeffs": (cmd_coeffs, "compute Hilbert coefficients"),
    "series": (cmd_series, "compute the Hilbert series"),
    "sally-report": (cmd_sally_report, "compute the Sally table"),
    "rr": (cmd_rr, "compute the Ratliff-Rush closure"),
    "depth-probe": (cmd_depth_probe, "probe depth"),
    "classify": (cmd_classify, "classify"),
    "verify": (cmd_verify, "verify the family"),
    "family-emit": (cmd_family_emit, "emit the family document"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", help="Path to a ring document (JSON)")
    common.add_argument("--ideal", default="I", help="Name of the ideal in the document (default: I)")
    common.add_argument("--reduction", help="Name of the reduction ideal in the document")
    common.add_argument("--n-max", type=int, default=None, help="Table length (default: n_max from config)")
    common.add_argument("--format", choices=["json", "table"], default="json", help="Report format")
    common.add_argument("--field", help='Override the field: "rational", "prime" or "prime:<p>"')
    common.add_argument("--log-level", help="Logging level (default: LOG_LEVEL or INFO)")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--m", type=int, required=True, help="Number of x variables")
    family.add_argument("--d", type=int, required=True, help="Krull dimension")
    family.add_argument("--c", type=int, default=None, help="ℓ(m^3/Qm^2), 1 <= c <= d (default: d)")

    parser = argparse.ArgumentParser(
        prog="sallykit",
        description="Hilbert coefficients, Sally modules and the example family",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    length = sub.add_parser("length", parents=[common], help="ℓ(A/I^{n+1}) for n = 0..power")
    length.add_argument("--power", type=int, default=0, help="Last n (default: 0)")
    sub.add_parser("coeffs", parents=[common], help="Hilbert coefficients e_0..e_d")
    sub.add_parser("series", parents=[common], help="Hilbert series numerator")
    sally = sub.add_parser("sally-report", parents=[common], help="Sally module lengths")
    sally.add_argument(
        "--vaz-pinto", type=int, nargs="*", default=[], help="Filtration indices i >= 2 to tabulate"
    )
    sub.add_parser("rr", parents=[common], help="Ratliff-Rush closures of the powers of I")
    sub.add_parser("depth-probe", parents=[common], help="Bounded depth evidence for G(I)")
    sub.add_parser("classify", parents=[common], help="Match I against the known Hilbert series")
    verify = sub.add_parser("verify", parents=[common, family], help="Check the example family")
    verify.add_argument("--track", action="store_true", help="Log the run to MLflow")
    sub.add_parser("family-emit", parents=[common, family], help="Print a family ring document")
    return parser


def run_command(argv: list[str]) -> int:
    """
    Parse ``argv``, run one command and print its report.

    Returns:
        The process exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    if args.log_level:
        logging.getLogger().setLevel(args.log_level.upper())

    handler, operation = COMMANDS[args.command]
    try:
        report, code = handler(args)
    except SallyKitError as e:
        identifier = getattr(args, "ideal", None) if args.command not in ("verify", "family-emit") else None
        report = error_response(operation, e, identifier=identifier, command=args.command)
        code = e.exit_code

    print(report if isinstance(report, str) else render(report, args.format))
    return code
