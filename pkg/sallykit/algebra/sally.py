"""
Sally module invariants of an m-primary ideal I with a minimal reduction Q.

All quantities are lengths of Artinian quotients, read off from
``artinian_length`` on products of powers of I and Q:

    S_n = I^{n+1}/Q^n I          (the Sally module, n >= 1)
    L_n = Q^{n-1} I^2 / Q^n I
    C_n = I^{n+1}/Q^{n-1} I^2    (n >= 2), so ℓ(S_n) = ℓ(L_n) + ℓ(C_n)

plus the Ratliff-Rush closure, a bounded depth probe for the associated
graded ring, and a classifier matching (e_0, e_1, e_2, ...) against the
closed forms known for small values of e_1 - e_0 + ℓ(A/I).
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Optional

from sallykit.algebra.hilbert import (
    HilbertData,
    binomial,
    coefficients_from_numerator,
    hilbert_coefficients,
    hilbert_data,
    hilbert_samuel_values,
    predicted_coefficients_linear,
    predicted_numerator_cm_boundary,
    predicted_numerator_gap_three,
    predicted_numerator_gap_two,
    predicted_numerator_linear,
    predicted_numerator_northcott,
)
from sallykit.algebra.ideals import (
    IdealHandle,
    RingPresentation,
    Memo,
    artinian_length,
    ideal_colon,
    ideal_contains,
    ideal_equal,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersection_length_identity,
    make_ideal,
)
from sallykit.config_loader import get_n_max, get_ratliff_rush_cap, get_stabilization_window
from sallykit.errors import ComputationError, ContainmentError, InputError, NoStabilizationError, NotAReductionError

logger = logging.getLogger(__name__)


class _Lengths:
    """Memoized ℓ(A/Q^a I^b) for one pair (I, Q)."""

    def __init__(self, ring: RingPresentation, I: IdealHandle, Q: IdealHandle):
        self.ring = ring
        self.I = I
        self.Q = Q
        self._memo = Memo()

    def ideal(self, a: int, b: int) -> IdealHandle:
        """Q^a I^b."""
        return ideal_product(ideal_power(self.Q, a), ideal_power(self.I, b))

    def colength(self, a: int, b: int) -> int:
        return self._memo.get((a, b), lambda: artinian_length(self.ring, self.ideal(a, b)).value)

    def sally(self, n: int) -> int:
        return self.colength(n, 1) - self.colength(0, n + 1)

    def reduction_gap(self, n: int) -> int:
        """ℓ(I^{n+1}/QI^n)."""
        return self.colength(1, n) - self.colength(0, n + 1)

    def lower(self, n: int) -> int:
        return self.colength(n, 1) - self.colength(n - 1, 2)

    def upper(self, n: int) -> int:
        return self.colength(n - 1, 2) - self.colength(0, n + 1)

    def vaz_pinto(self, i: int, n: int) -> int:
        """ℓ(I^{n+1}/Q^{n-i+1} I^i)."""
        return self.colength(n - i + 1, i) - self.colength(0, n + 1)


def _require_reduction_inputs(ring: RingPresentation, I: IdealHandle, Q: IdealHandle) -> None:
    if I.ring is not ring or Q.ring is not ring:
        raise InputError("Ideals do not belong to this ring presentation")
    if not ideal_contains(I, Q):
        raise ContainmentError(f"{Q.describe()} is not contained in {I.describe()}")


@dataclass(frozen=True)
class SallyTable:
    """
    Sally and Vaz Pinto lengths for n = 1..N.

    ``sally``, ``lower`` and ``upper`` map n to ℓ(S_n), ℓ(L_n), ℓ(C_n);
    ``upper`` starts at n = 2. ``c`` is ℓ(C_2) = ℓ(I^3/QI^2).
    """

    sally: dict[int, int]
    lower: dict[int, int]
    upper: dict[int, int]
    c: int
    q_cap_i2: bool
    flags: dict[str, bool]
    reduction_number: int
    certified_up_to: int
    vaz_pinto: dict[int, dict[int, int]] = field(default_factory=dict)

    @property
    def sally_first(self) -> int:
        """ℓ(I^2/QI)."""
        return self.sally[1]


def check_Q_cap_I2(ring: RingPresentation, I: IdealHandle, Q: IdealHandle, method: str = "intersect") -> bool:
    """
    Decide Q ∩ I^2 = QI.

    ``method="intersect"`` compares the ideals; ``method="length"`` uses
    QI ⊆ Q ∩ I^2 and ℓ(A/(Q ∩ I^2)) = ℓ(A/Q) + ℓ(A/I^2) - ℓ(A/(Q + I^2)).
    """
    square = ideal_power(I, 2)
    product = ideal_product(Q, I)
    if method == "intersect":
        return ideal_equal(ideal_intersect(Q, square), product)
    if method == "length":
        return intersection_length_identity(ring, Q, square) == artinian_length(ring, product).value
    raise InputError(f"Unknown method {method!r}")


def reduction_number(ring: RingPresentation, I: IdealHandle, Q: IdealHandle, n_max: Optional[int] = None) -> int:
    """
    Least r with I^{r+1} = QI^r.

    Raises:
        NotAReductionError: No such r <= n_max.
    """
    n_max = get_n_max() if n_max is None else n_max
    _require_reduction_inputs(ring, I, Q)
    return _reduction_number(_Lengths(ring, I, Q), n_max)


def _reduction_number(lengths: _Lengths, n_max: int) -> int:
    if ideal_equal(lengths.I, lengths.Q):
        return 0
    for r in range(1, n_max + 1):
        if lengths.reduction_gap(r) == 0:
            return r
    raise NotAReductionError(
        f"{lengths.Q.describe()} is not a reduction of {lengths.I.describe()} up to r = {n_max}", n_max
    )


def sally_table(
    ring: RingPresentation,
    I: IdealHandle,
    Q: IdealHandle,
    N: Optional[int] = None,
    vaz_pinto: tuple[int, ...] = (),
) -> SallyTable:
    """
    Sally module lengths of I with respect to Q for n = 1..N.

    Args:
        ring: Ambient ring.
        I: m-primary ideal.
        Q: Minimal reduction of I.
        N: Last degree (config ``n_max`` by default, at least 3).
        vaz_pinto: Filtration indices i >= 2 whose ℓ(C^(i)_n) are also tabulated.

    Raises:
        ContainmentError: Q is not contained in I.
        NotAReductionError: I^{r+1} = QI^r fails for every r <= N.
    """
    N = max(get_n_max() if N is None else N, 3)
    _require_reduction_inputs(ring, I, Q)
    lengths = _Lengths(ring, I, Q)
    r = _reduction_number(lengths, N)
    sally = {n: lengths.sally(n) for n in range(1, N + 1)}
    lower = {n: lengths.lower(n) for n in range(1, N + 1)}
    upper = {n: lengths.upper(n) for n in range(2, N + 1)}
    for n in range(2, N + 1):
        if sally[n] != lower[n] + upper[n]:
            raise ComputationError(f"ℓ(S_{n}) = {sally[n]} but ℓ(L_{n}) + ℓ(C_{n}) = {lower[n] + upper[n]}")
    gaps = {n: lengths.reduction_gap(n) for n in (1, 2, 3)}
    flags = {"I^2=QI": gaps[1] == 0, "I^3=QI^2": gaps[2] == 0, "I^4=QI^3": gaps[3] == 0}
    table = {i: {n: lengths.vaz_pinto(i, n) for n in range(i, N + 1)} for i in vaz_pinto}
    logger.info("Sally table: S=%s C=%s r=%d", list(sally.values()), list(upper.values()), r)
    return SallyTable(
        sally=sally,
        lower=lower,
        upper=upper,
        c=upper[2],
        q_cap_i2=check_Q_cap_I2(ring, I, Q, method="length"),
        flags=flags,
        reduction_number=r,
        certified_up_to=N,
        vaz_pinto=table,
    )


def vaz_pinto_lengths(
    ring: RingPresentation, I: IdealHandle, Q: IdealHandle, i: int, N: int
) -> tuple[dict[int, int], bool]:
    """
    ℓ(C^(i)_n) = ℓ(I^{n+1}/Q^{n-i+1} I^i) for i <= n <= N.

    Also checks ℓ(C^(i)_n) - ℓ(C^(i+1)_n) = ℓ(Q^{n-i} I^{i+1}/Q^{n-i+1} I^i) >= 0
    for n > i.

    Returns:
        The lengths and whether the successive differences agree.
    """
    if i < 1:
        raise InputError("Filtration index must be at least 1")
    _require_reduction_inputs(ring, I, Q)
    lengths = _Lengths(ring, I, Q)
    table = {n: lengths.vaz_pinto(i, n) for n in range(i, N + 1)}
    consistent = True
    for n in range(i + 1, N + 1):
        step = lengths.colength(n - i + 1, i) - lengths.colength(n - i, i + 1)
        if step < 0 or table[n] - lengths.vaz_pinto(i + 1, n) != step:
            consistent = False
    return table, consistent


def _sally_quotient_formula(n: int, d: int, c: int) -> int:
    """ℓ(C_n) when C is a rank-one linear ideal of c forms shifted by one."""
    return (
        binomial(n + d - 1, d - 1)
        - binomial(n + d - 2, d - 2)
        - binomial(n + d - c - 1, d - c - 1)
        + binomial(n + d - c - 2, d - c - 2)
    )


class FiltrationHandle:
    """
    A multiplicative filtration n -> K_n, evaluated lazily and cached.

    ``rule`` must return K_n for every n >= 0.
    """

    def __init__(self, ring: RingPresentation, rule: Callable[[int], IdealHandle], name: str = ""):
        self.ring = ring
        self.rule = rule
        self.name = name
        self._memo = Memo()

    def __getitem__(self, n: int) -> IdealHandle:
        if n < 0:
            raise InputError("Filtration degrees are nonnegative")
        return self._memo.get(n, lambda: self.rule(n))

    def spot_check(self, k: int) -> dict[str, bool]:
        """K_0 = A, K_n ⊇ K_{n+1} and K_a K_b ⊆ K_{a+b} for degrees up to k."""
        unit = ideal_equal(self[0], self.ring.unit_ideal())
        decreasing = all(ideal_contains(self[n], self[n + 1]) for n in range(k))
        multiplicative = all(
            ideal_contains(self[a + b], ideal_product(self[a], self[b]))
            for a in range(1, k)
            for b in range(a, k - a + 1)
        )
        return {"unit": unit, "decreasing": decreasing, "multiplicative": multiplicative}


def ratliff_rush(ring: RingPresentation, I: IdealHandle, cap: Optional[int] = None) -> IdealHandle:
    """
    Ratliff-Rush closure: the stable value of (I^{n+1} : I^n).

    Returns the colon once two consecutive n give equal ideals.

    Raises:
        NoStabilizationError: Still growing at n = cap.
    """
    cap = get_ratliff_rush_cap() if cap is None else cap
    if I.is_unit:
        return I
    previous: Optional[IdealHandle] = None
    for n in range(1, cap + 1):
        current = ideal_colon(ideal_power(I, n + 1), ideal_power(I, n))
        if previous is not None:
            if not ideal_contains(current, previous):
                raise ComputationError(f"Colon chain is not ascending at n = {n}")
            if ideal_contains(previous, current):
                logger.debug("Ratliff-Rush closure of %s stable at n = %d", I.describe(), n)
                return current
        previous = current
    raise NoStabilizationError(f"Ratliff-Rush chain of {I.describe()} still growing at n = {cap}")


def ratliff_rush_filtration(ring: RingPresentation, I: IdealHandle) -> FiltrationHandle:
    """n -> closure of I^n."""
    return FiltrationHandle(ring, lambda n: ratliff_rush(ring, ideal_power(I, n)), name="ratliff-rush")


@dataclass(frozen=True)
class RatliffRushPowers:
    gaps: dict[int, int]
    reduction_condition: dict[int, bool]
    certified_up_to: int


def ratliff_rush_powers(
    ring: RingPresentation,
    I: IdealHandle,
    n_max: int,
    Q: Optional[IdealHandle] = None,
) -> RatliffRushPowers:
    """
    ℓ(closure(I^n)/I^n) for 1 <= n <= n_max and, given Q, whether
    closure(I^{n+1}) = Q closure(I^n) for 2 <= n < n_max.
    """
    closures = ratliff_rush_filtration(ring, I)
    gaps = {
        n: artinian_length(ring, ideal_power(I, n)).value - artinian_length(ring, closures[n]).value
        for n in range(1, n_max + 1)
    }
    condition: dict[int, bool] = {}
    if Q is not None:
        for n in range(2, n_max):
            condition[n] = ideal_equal(closures[n + 1], ideal_product(Q, closures[n]))
    return RatliffRushPowers(gaps, condition, n_max)


@dataclass(frozen=True)
class DepthProbe:
    positive_depth: bool
    vv_depth_lower_bound: int
    certified_up_to: int
    first_gap: Optional[int] = None


def valabrega_valla_bound(ring: RingPresentation, I: IdealHandle, Q: IdealHandle, N: int) -> int:
    """Largest s with (a_1..a_s) ∩ I^n = (a_1..a_s) I^{n-1} for 2 <= n <= N."""
    generators = list(Q.explicit_generators())
    bound = 0
    for s in range(1, len(generators) + 1):
        prefix = make_ideal(ring, generators[:s])
        for n in range(2, N + 1):
            meet = ideal_intersect(prefix, ideal_power(I, n))
            if not ideal_contains(ideal_product(prefix, ideal_power(I, n - 1)), meet):
                logger.debug("Valabrega-Valla fails for s = %d at n = %d", s, n)
                return bound
        bound = s
    return bound


def depth_probe(ring: RingPresentation, I: IdealHandle, Q: IdealHandle, N: Optional[int] = None) -> DepthProbe:
    """
    Bounded evidence on depth G(I).

    ``positive_depth`` is false as soon as some closure(I^n) ≠ I^n with
    n <= N; ``vv_depth_lower_bound`` is certified only up to degree N.
    """
    N = get_n_max() if N is None else N
    closures = ratliff_rush_filtration(ring, I)
    first_gap = None
    for n in range(1, N + 1):
        if not ideal_contains(ideal_power(I, n), closures[n]):
            first_gap = n
            break
    bound = valabrega_valla_bound(ring, I, Q, N)
    return DepthProbe(first_gap is None, bound, N, first_gap)


@dataclass(frozen=True)
class Refinement:
    name: str
    predicted_numerator: tuple[int, ...]
    predicted_coefficients: tuple[int, ...]
    match: bool


@dataclass(frozen=True)
class ClassificationReport:
    """Outcome of matching I against the known closed forms."""

    coefficients: tuple[int, ...]
    numerator: tuple[int, ...]
    colength: int
    sally_first: int
    c: int
    northcott_gap: int
    branch: str
    case: Optional[str]
    case_label: Optional[str]
    predicted_coefficients: tuple[int, ...]
    predicted_numerator: tuple[int, ...]
    match: bool
    postulation: int
    predicted_postulation: int
    assumptions: tuple[str, ...]
    checks: dict[str, Any]
    refinements: tuple[Refinement, ...] = ()


def _pad(coeffs: tuple[int, ...], d: int) -> tuple[int, ...]:
    return tuple(coeffs) + (0,) * (d + 1 - len(coeffs))


def _coefficients_of(h: list[int], d: int) -> tuple[int, ...]:
    return coefficients_from_numerator(h, d)


def _linear_case(c: int, d: int) -> str:
    if c == d:
        return "c=d"
    if c == 1:
        return "c=1<d"
    return "2<=c<d"


def case_label(c: int, d: int) -> str:
    """Roman label of the linear Sally quotient case: (iii) c = 1 < d, (iv) 2 <= c < d, (v) c = d."""
    if c == d:
        return "(v)"
    if c == 1:
        return "(iii)"
    return "(iv)"


def _postulation_of(h: list[int], d: int) -> int:
    """First n with HP(n) = ℓ(A/I^{n+1}) onward, for Hilbert series numerator h."""
    return max(0, len(h) - 1 - d)


def classify(
    ring: RingPresentation,
    I: IdealHandle,
    Q: IdealHandle,
    N: Optional[int] = None,
    hilbert: Optional[HilbertData] = None,
    table: Optional[SallyTable] = None,
) -> ClassificationReport:
    """
    Match I against the closed-form Hilbert series known for small
    e_1 - e_0 + ℓ(A/I), by exact integer comparison.

    Integral closedness is never certified: the linear branch lists
    "integrally closed" in ``assumptions`` unless I is the maximal ideal.

    A match also needs the observed postulation index to equal the one the
    predicted numerator implies, max(0, deg h - d).
    """
    N = max(get_n_max() if N is None else N, 4)
    d = ring.dimension
    hilbert = hilbert or hilbert_data(ring, I, N, d)
    table = table or sally_table(ring, I, Q, N)
    e = _pad(hilbert.coefficients, d)
    e0, e1 = e[0], (e[1] if d >= 1 else 0)
    colength = artinian_length(ring, I).value
    s1 = table.sally_first
    c = table.c
    numerator = tuple(hilbert.numerator)
    gap = e1 - e0 + colength
    checks: dict[str, Any] = {"Q_cap_I2": table.q_cap_i2, **table.flags}
    assumptions: tuple[str, ...] = ()
    if not (I.mpower == 1 and not I.generators):
        assumptions = ("integrally closed",)

    def report(branch: str, case: Optional[str], predicted: list[int], refinements=()) -> ClassificationReport:
        predicted_e = _coefficients_of(predicted, d)
        predicted_postulation = _postulation_of(predicted, d)
        checks["postulation"] = hilbert.postulation == predicted_postulation
        return ClassificationReport(
            coefficients=e,
            numerator=numerator,
            colength=colength,
            sally_first=s1,
            c=c,
            northcott_gap=gap,
            branch=branch,
            case=case,
            case_label=case_label(c, d) if case is not None else None,
            predicted_coefficients=predicted_e,
            predicted_numerator=tuple(predicted),
            match=tuple(predicted) == numerator and predicted_e == e and checks["postulation"],
            postulation=hilbert.postulation,
            predicted_postulation=predicted_postulation,
            assumptions=assumptions if branch == "linear-sally-quotient" else (),
            checks=checks,
            refinements=tuple(refinements),
        )

    if ideal_equal(I, Q) or (gap == 0 and table.flags["I^2=QI"]):
        return report("northcott-equality", None, predicted_numerator_northcott(colength, e0))

    if not table.q_cap_i2:
        logger.info("Q ∩ I^2 ≠ QI; no closed form applies")
        return report("unclassified", None, list(numerator))

    excess = e1 - (e0 - colength + s1)
    checks["excess"] = excess
    if excess == 0:
        branch = "northcott-plus-one" if s1 == 1 else "cm-boundary"
        return report(branch, None, predicted_numerator_cm_boundary(colength, e0, s1))

    if excess == 1 and 1 <= c <= d:
        checks["I^4=QI^3"] = table.flags["I^4=QI^3"]
        predicted_e = predicted_coefficients_linear(e0, e1, colength, c, d)
        n_range = range(2, table.certified_up_to + 1)
        checks["sally_quotient_formula"] = all(table.upper[n] == _sally_quotient_formula(n, d, c) for n in n_range)
        refinements = []
        if gap == 2 and s1 == 1 and c == 1:
            h = predicted_numerator_gap_two(colength, e0)
            refinements.append(
                Refinement("gap-two-cyclic", tuple(h), _coefficients_of(h, d), tuple(h) == numerator)
            )
        if gap == 3 and s1 == 2 and c in (1, 2):
            h = predicted_numerator_gap_three(colength, e0, c)
            refinements.append(
                Refinement("gap-three-length-two", tuple(h), _coefficients_of(h, d), tuple(h) == numerator)
            )
        result = report(
            "linear-sally-quotient",
            _linear_case(c, d),
            predicted_numerator_linear(colength, e0, s1, c),
            refinements,
        )
        return replace(result, match=result.match and predicted_e == e and checks["I^4=QI^3"])

    return report("unclassified", None, list(numerator))


@dataclass(frozen=True)
class DecompositionResult:
    passed: bool
    checked_up_to: int
    first_failure: Optional[tuple[int, int, int]] = None


def decomposition_check(
    ring: RingPresentation,
    I: IdealHandle,
    Q: IdealHandle,
    N: Optional[int] = None,
) -> DecompositionResult:
    """
    Check, for 0 <= n <= N,

        ℓ(A/I^{n+1}) = e_0 C(n+d, d) - (e_0 - ℓ(A/I)) C(n+d-1, d-1)
                       - ℓ(I^2/QI) C(n+d-2, d-1) - ℓ(C_n)

    with e_0 = ℓ(A/Q) and ℓ(C_n) = 0 for n <= 1.

    Raises:
        InputError: Q ∩ I^2 ≠ QI, where the identity does not apply.
    """
    N = get_n_max() if N is None else N
    if not check_Q_cap_I2(ring, I, Q, method="length"):
        raise InputError("Q ∩ I^2 ≠ QI; the length decomposition does not apply")
    d = ring.dimension
    lengths = _Lengths(ring, I, Q)
    e0 = lengths.colength(1, 0)
    colength = lengths.colength(0, 1)
    s1 = lengths.sally(1)
    for n in range(N + 1):
        lhs = lengths.colength(0, n + 1)
        upper = lengths.upper(n) if n >= 2 else 0
        rhs = (
            e0 * binomial(n + d, d)
            - (e0 - colength) * binomial(n + d - 1, d - 1)
            - s1 * binomial(n + d - 2, d - 1)
            - upper
        )
        if lhs != rhs:
            logger.warning("Length decomposition fails at n = %d: %d != %d", n, lhs, rhs)
            return DecompositionResult(False, n, (n, lhs, rhs))
    return DecompositionResult(True, N)


@dataclass(frozen=True)
class E1FormulaCheck:
    excess: int
    excess_nonnegative: bool
    excess_zero_iff_cubic_reduction: bool
    excess_one_in_linear_branch: Optional[bool]
    sally_first: int
    sally_first_identity: bool


def e1_formula_check(
    ring: RingPresentation,
    I: IdealHandle,
    Q: IdealHandle,
    hilbert: Optional[HilbertData] = None,
    N: Optional[int] = None,
) -> E1FormulaCheck:
    """
    e_1 - (e_0 - ℓ(A/I) + ℓ(I^2/QI)) is >= 0 and vanishes iff I^3 = QI^2;
    also ℓ(I^2/QI) = e_0 + (d-1) ℓ(A/I) - ℓ(I/I^2).
    """
    N = get_n_max() if N is None else N
    _require_reduction_inputs(ring, I, Q)
    d = ring.dimension
    hilbert = hilbert or hilbert_data(ring, I, N, d)
    lengths = _Lengths(ring, I, Q)
    e = _pad(hilbert.coefficients, d)
    colength = lengths.colength(0, 1)
    s1 = lengths.sally(1)
    excess = (e[1] if d >= 1 else 0) - (e[0] - colength + s1)
    cubic = lengths.reduction_gap(2) == 0
    identity = s1 == e[0] + (d - 1) * colength - (lengths.colength(0, 2) - colength)
    in_linear = None
    if excess == 1:
        in_linear = 1 <= lengths.upper(2) <= d
    return E1FormulaCheck(excess, excess >= 0, (excess == 0) == cubic, in_linear, s1, identity)


def check_intersection_identities(ring: RingPresentation, I: IdealHandle, Q: IdealHandle) -> dict[str, bool]:
    """
    The intersection identities behind the Sally decomposition, for a
    reduction Q with Q ∩ I^2 = QI:

        (a_1) ∩ Q^{n+1} I^2 = a_1 Q^n I^2    for n = 0, 1
        Q^{n+1} ∩ Q^n I^2   = Q^{n+1} I      for n = 0, 1, 2
    """
    lengths = _Lengths(ring, I, Q)
    first = make_ideal(ring, Q.explicit_generators()[:1])
    record = {}
    for n in (0, 1):
        meet = ideal_intersect(first, lengths.ideal(n + 1, 2))
        record[f"principal_n{n}"] = ideal_equal(meet, ideal_product(first, lengths.ideal(n, 2)))
    for n in (0, 1, 2):
        meet = intersection_length_identity(ring, ideal_power(Q, n + 1), lengths.ideal(n, 2))
        record[f"power_n{n}"] = meet == lengths.colength(n + 1, 1)
    return record


def check_cohen_macaulay(ring: RingPresentation, Q: IdealHandle) -> bool:
    """e_0(Q) = ℓ(A/Q) for a parameter ideal Q."""
    d = ring.dimension
    window = get_stabilization_window()
    values = hilbert_samuel_values(ring, Q, d + window)
    coefficients, _ = hilbert_coefficients(values, d, window)
    return coefficients[0] == values[0].value


def family_filtration(ring: RingPresentation, y: str = "y") -> FiltrationHandle:
    """K_n = m^n + y m^{n-2} (K_0 = A, K_1 = m)."""
    if y not in ring.variables:
        raise InputError(f"Ring has no variable {y!r}")
    m = ring.maximal_ideal()
    y_ideal = ring.ideal([ring.ring.gens[ring.variables.index(y)]])

    def rule(n: int) -> IdealHandle:
        if n < 2:
            return ideal_power(m, n)
        return ideal_sum(ideal_power(m, n), ideal_product(y_ideal, ideal_power(m, n - 2)))

    return FiltrationHandle(ring, rule, name="family")
