import pytest

from sallykit.algebra.hilbert import (
    coefficients_from_numerator,
    predicted_coefficients_linear,
    predicted_numerator_linear,
)
from sallykit.errors import InputError
from sallykit.family import build_family, expected_invariants, family_spec


def test_two_dimensional_member():
    doc = build_family(family_spec(0, 2))
    assert doc.variables == ["y", "v1", "v2", "z1", "z2"]
    assert doc.relations == ["y^2", "y*v1", "y*v2", "v1*v2", "v1^3 - z1*y", "v2^3 - z2*y"]
    assert doc.ideals == {"I": ["y", "v1", "v2", "z1", "z2"], "Q": ["z1", "z2"]}


def test_x_variables_are_killed_by_the_maximal_ideal():
    doc = build_family(family_spec(1, 2))
    assert doc.variables == ["x1", "y", "v1", "v2", "z1", "z2"]
    assert len(doc.relations) == 10
    assert {"x1^2", "x1*y", "x1*v1", "x1*v2"} <= set(doc.relations)


def test_fresh_variables_join_both_ideals():
    doc = build_family(family_spec(0, 2, 1))
    assert doc.variables == ["y", "v1", "z1", "w1"]
    assert doc.relations == ["y^2", "y*v1", "v1^3 - z1*y"]
    assert doc.ideals["I"] == ["y", "v1", "z1", "w1"]
    assert doc.ideals["Q"] == ["z1", "w1"]


def test_c_defaults_to_d():
    spec = family_spec(2, 3)
    assert spec.c == 3
    assert spec.label == "family(m=2,d=3,c=3)"


@pytest.mark.parametrize("m, d, c", [(0, 2, 0), (0, 2, 3), (0, 0, None), (-1, 2, None)])
def test_invalid_parameters(m, d, c):
    with pytest.raises(InputError):
        family_spec(m, d, c)


def test_expected_invariants_two_dimensional():
    expected = expected_invariants(family_spec(0, 2))
    assert expected["e0"] == 6
    assert expected["e1"] == 8
    assert expected["coefficients"] == [6, 8, 3]
    assert expected["numerator"] == [1, 3, 0, 3, -1]
    assert expected["colength_Q"] == 6
    assert expected["case"] == "c=d"


def test_expected_invariants_three_dimensional():
    expected = expected_invariants(family_spec(1, 3))
    assert expected["coefficients"] == [9, 12, 4, 0]
    assert expected["numerator"] == [1, 5, 0, 6, -4, 1]


@pytest.mark.parametrize(
    "c, d, case",
    [(1, 2, "c=1<d"), (2, 3, "2<=c<d"), (3, 3, "c=d")],
)
def test_expected_case(c, d, case):
    assert expected_invariants(family_spec(0, d, c))["case"] == case


def test_expected_invariants_of_three_dimensional_member_with_two_extra_variables():
    expected = expected_invariants(family_spec(2, 3, 3))
    assert expected["coefficients"] == [10, 13, 4, 0]
    assert expected["numerator"] == [1, 6, 0, 6, -4, 1]


@pytest.mark.parametrize("m", [0, 1, 2])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_closed_form_matches_linear_predictions_when_c_equals_d(m, d):
    expected = expected_invariants(family_spec(m, d))
    e0, e1 = expected["e0"], expected["e1"]
    assert expected["numerator"] == predicted_numerator_linear(1, e0, d, d)
    assert tuple(expected["coefficients"]) == predicted_coefficients_linear(e0, e1, 1, d, d)
    assert expected["coefficients"][2:] == ([d + 1] + [0] * (d - 2) if d >= 2 else [])


@pytest.mark.parametrize("m", [0, 1])
@pytest.mark.parametrize("d, c", [(d, c) for d in range(2, 5) for c in range(1, d)])
def test_closed_form_matches_linear_predictions_below_d(m, d, c):
    expected = expected_invariants(family_spec(m, d, c))
    e0, e1 = expected["e0"], expected["e1"]
    assert expected["numerator"] == predicted_numerator_linear(1, e0, c, c)
    assert tuple(expected["coefficients"]) == predicted_coefficients_linear(e0, e1, 1, c, d)


@pytest.mark.parametrize("m", [0, 1])
@pytest.mark.parametrize("d, c", [(d, c) for d in range(1, 5) for c in range(1, d + 1)])
def test_numerator_and_coefficients_agree(m, d, c):
    expected = expected_invariants(family_spec(m, d, c))
    assert list(coefficients_from_numerator(expected["numerator"], d)) == expected["coefficients"]
    assert expected["coefficients"][:2] == [expected["e0"], expected["e1"]]


@pytest.mark.parametrize(
    "d, c, postulation, label",
    [(1, 1, 2, "(v)"), (2, 2, 2, "(v)"), (2, 1, 1, "(iii)"), (3, 1, 0, "(iii)"), (3, 2, 1, "(iv)"), (4, 2, 0, "(iv)")],
)
def test_postulation_and_case_label(d, c, postulation, label):
    expected = expected_invariants(family_spec(0, d, c))
    assert expected["postulation"] == postulation
    assert expected["case_label"] == label
