import json

import pytest

from sallykit.algebra.hilbert import binomial
from sallykit.cli import run_command


def run(capsys, *argv):
    code = run_command(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_family_emit(capsys):
    code, doc = run_json(capsys, "family-emit", "--m", "0", "--d", "2", "--c", "1")
    assert code == 0
    assert doc["variables"] == ["y", "v1", "z1", "w1"]
    assert doc["ideals"]["Q"] == ["z1", "w1"]


def test_coeffs_of_regular_maximal_ideal(capsys, plane_document):
    code, report = run_json(capsys, "coeffs", "--ring", plane_document)
    assert code == 0
    assert report["success"] is True
    assert report["coefficients"] == [1, 0, 0]
    assert report["numerator"] == [1]
    assert report["northcott_gap"] == 0
    assert report["warnings"] == []


def test_length_table(capsys, plane_document):
    code, report = run_json(capsys, "length", "--ring", plane_document, "--power", "3")
    assert code == 0
    assert report["values"] == [1, 3, 6, 10]
    assert report["length"] == 10


def test_length_of_family_member(capsys, tmp_path):
    _, emitted = run(capsys, "family-emit", "--m", "0", "--d", "2")
    path = tmp_path / "family.json"
    path.write_text(emitted)
    code, report = run_json(capsys, "length", "--ring", str(path), "--power", "3")
    assert code == 0
    assert report["values"] == [1, 6, 15, 31]


def test_series(capsys, plane_document):
    code, report = run_json(capsys, "series", "--ring", plane_document, "--ideal", "M2")
    assert code == 0
    assert report["numerator"] == [3, 1]
    assert report["series_matches_values"] is True


def test_classify(capsys, plane_document):
    code, report = run_json(
        capsys, "classify", "--ring", plane_document, "--ideal", "M2", "--reduction", "P", "--n-max", "4"
    )
    assert code == 0
    assert report["classification"]["branch"] == "northcott-equality"
    assert report["classification"]["match"] is True
    assert report["sally"]["reduction_number"] == 1


def test_prime_field_warning(capsys, plane_document):
    code, report = run_json(capsys, "coeffs", "--ring", plane_document, "--field", "prime")
    assert code == 0
    assert len(report["warnings"]) == 1


def test_table_format(capsys, plane_document):
    code, out = run(capsys, "coeffs", "--ring", plane_document, "--format", "table")
    assert code == 0
    rows = {line.split()[0]: line for line in out.splitlines() if line.strip()}
    assert rows["coefficients"].endswith("[1, 0, 0]")
    assert rows["success"].endswith("true")


def test_parse_error_position(capsys, write_document):
    path = write_document('{\n  "variables": ["x", "y"],\n  "ideals": {"I": ["x + w"]}\n}')
    code, report = run_json(capsys, "coeffs", "--ring", path)
    assert code == 2
    assert report["success"] is False
    assert report["error_details"] == {"kind": "ParseError", "line": 3, "column": 25, "exit_code": 2}


def test_missing_ring(capsys):
    code, report = run_json(capsys, "coeffs")
    assert code == 2
    assert report["error_details"]["kind"] == "InputError"


def test_missing_reduction(capsys, plane_document):
    code, report = run_json(capsys, "sally-report", "--ring", plane_document)
    assert code == 2
    assert "--reduction" in report["error"]


def test_invalid_family(capsys):
    code, report = run_json(capsys, "verify", "--m", "0", "--d", "1", "--c", "2")
    assert code == 2
    assert report["success"] is False


def test_unknown_command(capsys):
    assert run_command(["frobnicate"]) == 2


def test_verify_curve(capsys):
    code, report = run_json(capsys, "verify", "--m", "0", "--d", "1")
    failed = [check["name"] for check in report["checks"] if not check["pass"]]
    assert failed == []
    assert code == 0
    assert report["status"] == "pass"
    assert report["coefficients"] == [4, 5]


@pytest.mark.slow
def test_verify_is_deterministic(capsys):
    first_code, first = run(capsys, "verify", "--m", "0", "--d", "2")
    second_code, second = run(capsys, "verify", "--m", "0", "--d", "2")
    assert first_code == second_code == 0
    assert first == second
    assert json.loads(first)["status"] == "pass"


# e_2..e_d and h_3.. of the maximal ideal; neither depends on m
COEFFICIENT_TAILS = {(1, 1): [], (2, 2): [3], (3, 3): [4, 0], (2, 1): [3], (3, 1): [3, 1], (3, 2): [3, -1]}
NUMERATOR_TAILS = {1: [1], 2: [3, -1], 3: [6, -4, 1]}
# ℓ(C_n) for n >= 2
UPPER_LENGTHS = {
    (1, 1): lambda n: 1,
    (2, 2): lambda n: n,
    (3, 3): lambda n: n * (n + 1) // 2,
    (2, 1): lambda n: n - 1,
    (3, 1): lambda n: n * (n - 1) // 2,
    (3, 2): lambda n: n * (n + 1) // 2 - 1,
}
FAMILY_GRID = [(m, d, c) for m in (0, 1, 2) for d, c in COEFFICIENT_TAILS]


@pytest.mark.slow
@pytest.mark.parametrize("m, d, c", FAMILY_GRID)
def test_verify_family_grid(capsys, m, d, c):
    code, report = run_json(capsys, "verify", "--m", str(m), "--d", str(d), "--c", str(c))
    failed = [check["name"] for check in report["checks"] if not check["pass"]]
    assert failed == []
    assert code == 0
    assert report["coefficients"] == [m + 2 * c + 2, m + 3 * c + 2] + COEFFICIENT_TAILS[(d, c)]
    assert report["numerator"] == [1, m + c + 1, 0] + NUMERATOR_TAILS[c]

    top = report["certified_up_to"]
    lower = [c * binomial(n + d - 2, d - 1) for n in range(1, top + 1)]
    upper = [UPPER_LENGTHS[(d, c)](n) for n in range(2, top + 1)]
    sally = report["sally"]
    assert sally["L"] == lower
    assert sally["C"] == upper
    assert sally["S"] == [c] + [a + b for a, b in zip(lower[1:], upper)]
    assert sally["reduction_number"] == 3

    classification = report["classification"]
    assert classification["case_label"] == ("(v)" if c == d else "(iii)" if c == 1 else "(iv)")
    assert classification["postulation"] == max(0, c + 2 - d)

    computed = {check["name"]: check["computed"] for check in report["checks"]}
    assert computed["rr_gap_2"] == (1 if c == d else 0)
    assert computed["positive_depth"] is (c < d)
