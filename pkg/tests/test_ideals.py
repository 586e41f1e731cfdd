import pytest
from hypothesis import given, settings, strategies as st

from sallykit.algebra.ideals import (
    Memo,
    RingPresentation,
    artinian_length,
    eliminate,
    ideal_colon,
    ideal_combine,
    ideal_contains,
    ideal_equal,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersection_length_identity,
    is_m_primary,
    monomial_length_oracle,
    quotient_length,
)
from sallykit.algebra.poly import NEGDEGLEX, format_poly, monomial_polynomial
from sallykit.errors import (
    ContainmentError,
    DimensionMismatchError,
    InputError,
    NegativeExponentError,
    NonMonomialError,
    NotZeroDimensionalError,
    RingMismatchError,
    ZeroIdealError,
)


def test_maximal_ideal_powers(plane, plane_m):
    assert artinian_length(plane, plane_m).value == 1
    assert [artinian_length(plane, ideal_power(plane_m, k)).value for k in range(4)] == [0, 1, 3, 6]


def test_lengths_of_small_ideals(plane):
    assert artinian_length(plane, plane.ideal_from_strings(["x^2", "y^2"])).value == 4
    assert artinian_length(plane, plane.ideal_from_strings(["x^3", "x*y^2", "y^4"])).value == 8
    assert artinian_length(plane, plane.ideal_from_strings(["x^2 - y^3", "x*y"])).value == 5


def test_non_primary_ideal_has_no_length(plane):
    J = plane.ideal_from_strings(["x"])
    assert not is_m_primary(J)
    with pytest.raises(NotZeroDimensionalError):
        artinian_length(plane, J)


def test_normalization(plane):
    x, y = plane.ring.gens
    assert plane.ideal([x, y]).mpower == 1
    assert plane.ideal([x + 1, y]).is_unit
    assert artinian_length(plane, plane.ideal([x + 1])).value == 0
    assert len(plane.ideal([x**2, x**3, x**2]).generators) == 1


def test_combine(plane, plane_m):
    P = plane.ideal_from_strings(["x^2", "y^2"])
    assert ideal_equal(ideal_combine("power", plane_m, 2), plane.ideal_from_strings(["x^2", "x*y", "y^2"]))
    assert ideal_equal(ideal_combine("product", P, plane_m), plane.ideal_from_strings(["x^3", "x^2*y", "x*y^2", "y^3"]))
    assert ideal_equal(ideal_combine("sum", P, plane.ideal_from_strings(["x*y"])), ideal_power(plane_m, 2))
    assert ideal_power(P, 0).is_unit
    with pytest.raises(NegativeExponentError):
        ideal_power(P, -1)
    with pytest.raises(InputError):
        ideal_combine("quotient", P, P)


def test_ideals_over_different_rings(plane):
    other = RingPresentation.from_strings(["x", "y"])
    with pytest.raises(RingMismatchError):
        ideal_sum(plane.maximal_ideal(), other.maximal_ideal())


def test_colon(plane, plane_m):
    P = plane.ideal_from_strings(["x^2", "y^2"])
    assert ideal_equal(ideal_colon(P, plane_m), plane.ideal_from_strings(["x^2", "x*y", "y^2"]))
    assert ideal_equal(ideal_colon(ideal_power(plane_m, 3), ideal_power(plane_m, 2)), plane_m)
    assert ideal_colon(P, plane.unit_ideal()) is P
    with pytest.raises(ZeroIdealError):
        ideal_colon(P, plane.ideal([]))


def test_colon_of_non_primary_ideal(plane):
    J = plane.ideal_from_strings(["x^2*y"])
    K = plane.ideal_from_strings(["x"])
    assert ideal_equal(ideal_colon(J, K), plane.ideal_from_strings(["x*y"]))


def test_intersections(plane):
    X = plane.ideal_from_strings(["x"])
    Y = plane.ideal_from_strings(["y"])
    assert ideal_equal(ideal_intersect(X, Y), plane.ideal_from_strings(["x*y"]))
    A = plane.ideal_from_strings(["x^2", "y"])
    B = plane.ideal_from_strings(["x", "y^2"])
    meet = ideal_intersect(A, B)
    assert ideal_equal(meet, plane.ideal_from_strings(["x^2", "x*y", "y^2"]))
    assert intersection_length_identity(plane, A, B) == artinian_length(plane, meet).value == 3


def test_containment_and_quotient_length(plane, plane_m, plane_m2):
    assert ideal_contains(plane_m, plane_m2)
    assert not ideal_contains(plane_m2, plane_m)
    assert quotient_length(plane, plane_m, plane_m2).value == 2
    x, _ = plane.ring.gens
    with pytest.raises(ContainmentError) as info:
        quotient_length(plane, plane.ideal_from_strings(["x^2"]), plane_m)
    assert info.value.witness == x


def test_length_certificate_is_first_empty_degree(plane, plane_m, plane_m2):
    # standard monomials 1, x, y, xy leave degree 3 empty
    length = artinian_length(plane, plane.ideal_from_strings(["x^2", "y^2"]))
    assert (length.value, length.certified_at, length.stable_count) == (4, 3, False)
    assert artinian_length(plane, plane_m2).certified_at == 2
    assert quotient_length(plane, plane_m, plane_m2).certified_at == 2
    assert monomial_length_oracle(["x", "y"], [(2, 0), (0, 2)]).stable_count


def test_local_membership_sees_units(plane):
    # 1 + y is a unit of the local ring
    J = plane.ideal_from_strings(["x + x*y", "y^3"])
    K = plane.ideal_from_strings(["x", "y^3"])
    assert ideal_equal(J, K)


def test_order_does_not_change_lengths(plane):
    J = plane.ideal_from_strings(["x^2 + y^3", "x*y^2", "y^5"])
    assert artinian_length(plane, J).value == artinian_length(plane, J, NEGDEGLEX).value


def test_relations_shrink_the_ring():
    node = RingPresentation.from_strings(["x", "y"], ["x*y"])
    assert node.dimension == 1
    assert artinian_length(node, ideal_power(node.maximal_ideal(), 3)).value == 5
    assert node.embedding_dimension() == 2


def test_dimension(plane):
    assert plane.dimension == 2
    assert RingPresentation.from_strings(["x", "y", "z"], ["x^2 - y*z"]).dimension == 2
    with pytest.raises(DimensionMismatchError):
        _ = RingPresentation.from_strings(["x", "y"], expected_dimension=1).dimension


def test_eliminate():
    ring = RingPresentation.from_strings(["x", "y", "z"])
    J = ring.ideal_from_strings(["x - y", "x - z"])
    eliminated = eliminate(J, ["x"])
    assert eliminated.ring.variables == ("y", "z")
    assert [format_poly(g) for g in eliminated.generators] == ["y - z"]


def test_oracle():
    assert monomial_length_oracle(["x", "y"], [(3, 0), (1, 2), (0, 4)]).value == 8
    assert monomial_length_oracle(["x", "y"], [(0, 0)]).value == 0
    with pytest.raises(NotZeroDimensionalError):
        monomial_length_oracle(["x", "y"], [(1, 0)])
    ring = RingPresentation.from_strings(["x", "y"])
    with pytest.raises(NonMonomialError):
        monomial_length_oracle(["x", "y"], [ring.polynomial("x + y")])


@st.composite
def monomial_ideals(draw):
    n = draw(st.integers(2, 3))
    pure = [tuple(draw(st.integers(1, 4)) if i == j else 0 for j in range(n)) for i in range(n)]
    extra = draw(
        st.lists(
            st.tuples(*[st.integers(0, 3)] * n).filter(any),
            max_size=3,
        )
    )
    return n, pure + extra


@settings(max_examples=25, deadline=None)
@given(monomial_ideals())
def test_lengths_agree_with_oracle(case):
    n, exponents = case
    names = ["x", "y", "z"][:n]
    ring = RingPresentation.from_strings(names)
    J = ring.ideal([monomial_polynomial(ring.ring, e) for e in exponents])
    assert artinian_length(ring, J).value == monomial_length_oracle(names, exponents).value


def test_memo_keeps_the_first_value():
    memo = Memo()
    assert memo.get("k", lambda: 1) == 1
    assert memo.get("k", lambda: 2) == 1
    memo.put("k", 3)
    assert memo.peek("k") == 1
    assert memo.peek("missing", 0) == 0
