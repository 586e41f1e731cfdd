"""
Polynomial, ideal and Hilbert function algebra over presented local rings.
"""

from .groebner import (
    GroebnerBasis,
    buchberger,
    eliminate_variables,
    groebner_basis,
    is_groebner,
    normal_form,
    reduce_basis,
    standard_basis,
    standard_monomials,
)
from .hilbert import (
    HilbertData,
    coefficients_from_numerator,
    hilbert_coefficients,
    hilbert_data,
    hilbert_function,
    hilbert_polynomial,
    hilbert_samuel_values,
    hilbert_series_numerator,
)
from .ideals import (
    IdealHandle,
    LengthValue,
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
    make_ideal,
    monomial_length_oracle,
    quotient_length,
)
from .parser import parse_polynomial
from .poly import (
    GREVLEX,
    LEX,
    NEGDEGLEX,
    NEGDEGREVLEX,
    MonomialOrder,
    Polynomial,
    adic_order,
    format_poly,
    initial_form,
    leading_term,
    poly_arith,
    polynomial_ring,
)
from .sally import (
    ClassificationReport,
    DepthProbe,
    FiltrationHandle,
    SallyTable,
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

__all__ = [
    "GREVLEX",
    "LEX",
    "NEGDEGLEX",
    "NEGDEGREVLEX",
    "ClassificationReport",
    "DepthProbe",
    "FiltrationHandle",
    "GroebnerBasis",
    "HilbertData",
    "IdealHandle",
    "LengthValue",
    "MonomialOrder",
    "Polynomial",
    "RingPresentation",
    "SallyTable",
    "adic_order",
    "artinian_length",
    "buchberger",
    "check_Q_cap_I2",
    "check_cohen_macaulay",
    "check_intersection_identities",
    "classify",
    "coefficients_from_numerator",
    "decomposition_check",
    "depth_probe",
    "e1_formula_check",
    "eliminate",
    "eliminate_variables",
    "family_filtration",
    "format_poly",
    "groebner_basis",
    "hilbert_coefficients",
    "hilbert_data",
    "hilbert_function",
    "hilbert_polynomial",
    "hilbert_samuel_values",
    "hilbert_series_numerator",
    "ideal_colon",
    "ideal_combine",
    "ideal_contains",
    "ideal_equal",
    "ideal_intersect",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "initial_form",
    "intersection_length_identity",
    "is_groebner",
    "is_m_primary",
    "leading_term",
    "make_ideal",
    "monomial_length_oracle",
    "normal_form",
    "parse_polynomial",
    "poly_arith",
    "polynomial_ring",
    "quotient_length",
    "ratliff_rush",
    "ratliff_rush_powers",
    "reduce_basis",
    "reduction_number",
    "sally_table",
    "standard_basis",
    "standard_monomials",
    "vaz_pinto_lengths",
]
