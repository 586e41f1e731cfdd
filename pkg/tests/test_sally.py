import pytest

from sallykit.algebra.hilbert import binomial, hilbert_data
from sallykit.algebra.ideals import RingPresentation, artinian_length, ideal_equal, ideal_power
from sallykit.algebra.sally import (
    check_cohen_macaulay,
    check_intersection_identities,
    check_Q_cap_I2,
    classify,
    decomposition_check,
    depth_probe,
    e1_formula_check,
    family_filtration,
    ratliff_rush,
    ratliff_rush_powers,
    reduction_number,
    sally_table,
    vaz_pinto_lengths,
)
from sallykit.errors import ContainmentError, InputError, NotAReductionError


@pytest.fixture
def non_closed(plane):
    """(x^4, x^3y, xy^3, y^4), whose Ratliff-Rush closure picks up x^2y^2."""
    return plane.ideal_from_strings(["x^4", "x^3*y", "x*y^3", "y^4"])


@pytest.fixture
def cusp():
    """k[x, y]/(y^3 - x^4) with Q = (x): m^2 ≠ Qm but m^3 = Qm^2."""
    ring = RingPresentation.from_strings(["x", "y"], ["y^3 - x^4"])
    return ring, ring.maximal_ideal(), ring.ideal_from_strings(["x"])


@pytest.fixture
def plane_square(plane, plane_m2, plane_q):
    return plane, plane_m2, plane_q


@pytest.fixture
def plane_regular(plane, plane_m):
    return plane, plane_m, plane_m


def _sally_quotient_length(n, d, c):
    return (
        binomial(n + d - 1, d - 1)
        - binomial(n + d - 2, d - 2)
        - binomial(n + d - c - 1, d - c - 1)
        + binomial(n + d - c - 2, d - c - 2)
    )


class TestPlane:
    def test_sally_table_of_square(self, plane, plane_m2, plane_q):
        table = sally_table(plane, plane_m2, plane_q, 3)
        assert list(table.sally.values()) == [0, 0, 0]
        assert list(table.upper.values()) == [0, 0]
        assert table.c == 0
        assert table.reduction_number == 1
        assert table.q_cap_i2
        assert table.flags == {"I^2=QI": True, "I^3=QI^2": True, "I^4=QI^3": True}

    def test_reduction_number(self, plane, plane_m, plane_m2, plane_q):
        assert reduction_number(plane, plane_m2, plane_q) == 1
        assert reduction_number(plane, plane_m, plane_m) == 0

    def test_not_a_reduction(self, plane, plane_m):
        Q = plane.ideal_from_strings(["x", "y^2"])
        with pytest.raises(NotAReductionError):
            reduction_number(plane, plane_m, Q, n_max=3)

    def test_reduction_must_be_contained(self, plane, plane_m, plane_q):
        with pytest.raises(ContainmentError):
            sally_table(plane, plane_q, plane_m, 3)

    @pytest.mark.parametrize("method", ["intersect", "length"])
    def test_q_cap_i2(self, plane, plane_m2, plane_q, method):
        assert check_Q_cap_I2(plane, plane_m2, plane_q, method=method)

    def test_q_cap_i2_rejects_unknown_method(self, plane, plane_m2, plane_q):
        with pytest.raises(InputError):
            check_Q_cap_I2(plane, plane_m2, plane_q, method="guess")

    def test_vaz_pinto_lengths_vanish(self, plane, plane_m2, plane_q):
        table, consistent = vaz_pinto_lengths(plane, plane_m2, plane_q, 2, 3)
        assert table == {2: 0, 3: 0}
        assert consistent

    def test_northcott_equality(self, plane, plane_m2, plane_q):
        report = classify(plane, plane_m2, plane_q, 4)
        assert report.branch == "northcott-equality"
        assert report.coefficients == (4, 1, 0)
        assert report.predicted_numerator == (3, 1)
        assert report.northcott_gap == 0
        assert report.match

    def test_regular_maximal_ideal(self, plane, plane_m):
        report = classify(plane, plane_m, plane_m, 4)
        assert report.branch == "northcott-equality"
        assert report.numerator == (1,)
        assert report.match
        assert report.assumptions == ()

    def test_decomposition(self, plane, plane_m2, plane_q):
        result = decomposition_check(plane, plane_m2, plane_q, 4)
        assert result.passed
        assert result.first_failure is None

    def test_e1_formula(self, plane, plane_m2, plane_q):
        check = e1_formula_check(plane, plane_m2, plane_q, N=4)
        assert check.excess == 0
        assert check.excess_nonnegative
        assert check.excess_zero_iff_cubic_reduction
        assert check.excess_one_in_linear_branch is None
        assert check.sally_first_identity

    def test_cohen_macaulay(self, plane, plane_q):
        assert check_cohen_macaulay(plane, plane_q)


class TestRatliffRush:
    def test_parameter_ideal_is_closed(self, plane, plane_q):
        assert ideal_equal(ratliff_rush(plane, plane_q), plane_q)

    def test_closure_adds_missing_monomial(self, plane, plane_m, non_closed):
        assert ideal_equal(ratliff_rush(plane, non_closed), ideal_power(plane_m, 4))

    def test_gap_lengths(self, plane, non_closed):
        assert ratliff_rush_powers(plane, non_closed, 1).gaps == {1: 1}

    def test_depth_of_regular_plane(self, plane, plane_m):
        probe = depth_probe(plane, plane_m, plane_m, 3)
        assert (probe.positive_depth, probe.vv_depth_lower_bound) == (True, 2)
        assert probe.first_gap is None

    def test_depth_of_square(self, plane, plane_m2, plane_q):
        probe = depth_probe(plane, plane_m2, plane_q, 3)
        assert probe.positive_depth
        assert probe.vv_depth_lower_bound == 2

    def test_depth_zero_detected(self, plane, non_closed):
        Q = plane.ideal_from_strings(["x^4", "y^4"])
        probe = depth_probe(plane, non_closed, Q, 2)
        assert not probe.positive_depth
        assert probe.first_gap == 1


class TestFamily:
    def test_one_dimensional_member(self, family01):
        ring, m, Q = family01
        table = sally_table(ring, m, Q, 4)
        assert table.sally_first == 1
        assert table.c == 1
        assert table.reduction_number == 3
        assert table.q_cap_i2
        assert table.flags == {"I^2=QI": False, "I^3=QI^2": False, "I^4=QI^3": True}

    def test_one_dimensional_classification(self, family01):
        ring, m, Q = family01
        report = classify(ring, m, Q, 4)
        assert report.branch == "linear-sally-quotient"
        assert report.case == "c=d"
        assert report.coefficients == (4, 5)
        assert report.northcott_gap == 2
        assert report.numerator == (1, 2, 0, 1)
        assert report.match
        refinements = {r.name: r.match for r in report.refinements}
        assert refinements == {"gap-two-cyclic": True}

    def test_one_dimensional_identities(self, family01):
        ring, m, Q = family01
        assert decomposition_check(ring, m, Q, 4).passed
        assert all(check_intersection_identities(ring, m, Q).values())
        assert check_cohen_macaulay(ring, Q)
        check = e1_formula_check(ring, m, Q, N=4)
        assert check.excess == 1
        assert check.excess_one_in_linear_branch
        assert check.sally_first_identity

    def test_filtration_is_multiplicative(self, family01):
        ring, _, _ = family01
        assert family_filtration(ring).spot_check(3) == {"unit": True, "decreasing": True, "multiplicative": True}

    def test_filtration_needs_named_variable(self, family01):
        ring, _, _ = family01
        with pytest.raises(InputError):
            family_filtration(ring, y="t")

    @pytest.mark.slow
    def test_two_dimensional_classification(self, family02):
        ring, m, Q = family02
        report = classify(ring, m, Q, 4)
        assert report.branch == "linear-sally-quotient"
        assert report.case == "c=d"
        assert report.coefficients == (6, 8, 3)
        assert report.numerator == (1, 3, 0, 3, -1)
        assert report.sally_first == 2
        assert report.c == 2
        assert report.match

    @pytest.mark.slow
    def test_adjoined_variable_classification(self, family021):
        ring, m, Q = family021
        report = classify(ring, m, Q, 4)
        assert report.branch == "linear-sally-quotient"
        assert report.case == "c=1<d"
        assert report.coefficients == (4, 5, 3)
        assert report.match


class TestCoefficientBounds:
    @pytest.mark.parametrize(
        "case, northcott_equal, boundary_equal",
        [
            ("plane_square", True, True),
            ("plane_regular", True, True),
            ("cusp", False, True),
            ("family01", False, False),
        ],
    )
    def test_first_coefficient_bounds(self, request, case, northcott_equal, boundary_equal):
        ring, I, Q = request.getfixturevalue(case)
        data = hilbert_data(ring, I, 6)
        table = sally_table(ring, I, Q, 4)
        e0, e1 = data.e(0), data.e(1)
        colength = artinian_length(ring, I).value

        assert e1 >= e0 - colength
        assert (e1 == e0 - colength) is northcott_equal
        assert table.flags["I^2=QI"] is northcott_equal

        assert table.q_cap_i2
        boundary = e0 - colength + table.sally_first
        assert e1 >= boundary
        assert (e1 == boundary) is boundary_equal
        assert table.flags["I^3=QI^2"] is boundary_equal

    def test_cusp_classification(self, cusp):
        ring, m, Q = cusp
        report = classify(ring, m, Q, 6)
        assert report.branch == "northcott-plus-one"
        assert report.coefficients == (3, 3)
        assert report.numerator == (1, 1, 1)
        assert report.case_label is None
        assert report.match


class TestPostulation:
    def test_plane_square(self, plane, plane_m2, plane_q):
        report = classify(plane, plane_m2, plane_q, 4)
        assert (report.postulation, report.predicted_postulation) == (0, 0)
        assert report.checks["postulation"]

    def test_one_dimensional_member(self, family01):
        ring, m, Q = family01
        report = classify(ring, m, Q, 4)
        assert report.postulation == report.predicted_postulation == 2
        assert report.checks["postulation"]
        assert report.case_label == "(v)"

    @pytest.mark.slow
    def test_adjoined_variable_starts_at_one(self, family021):
        # HP(0) = 4 - 5 + 3 = 2 while ℓ(A/m) = 1
        ring, m, Q = family021
        report = classify(ring, m, Q, 4)
        assert report.postulation == report.predicted_postulation == 1
        assert report.checks["postulation"]
        assert report.case_label == "(iii)"


@pytest.mark.slow
@pytest.mark.parametrize("member, d, c", [("family02", 2, 2), ("family133", 3, 3)])
def test_sally_quotient_lengths(request, member, d, c):
    ring, m, Q = request.getfixturevalue(member)
    table, consistent = vaz_pinto_lengths(ring, m, Q, 2, 6)
    assert table == {n: _sally_quotient_length(n, d, c) for n in range(2, 7)}
    assert consistent
