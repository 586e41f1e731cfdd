"""
Hilbert-Samuel function, Hilbert coefficients and Hilbert series of an
m-primary ideal I.

The value table is ℓ(A/I^{n+1}) for n = 0..N. Coefficients e_0..e_d are
fitted in the binomial basis

    HP_I(n) = Σ_i (-1)^i e_i C(n+d-i, d-i)

and the series numerator is h(z) = (1-z)^d Σ_t H_I(t) z^t, with
H_I(t) = ℓ(I^t/I^{t+1}). Both routes must agree: e_i = h^(i)(1)/i!.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable, Optional, Sequence, Union

from sympy import Matrix, Poly, symbols

from sallykit.algebra.ideals import IdealHandle, LengthValue, RingPresentation, artinian_length, ideal_power
from sallykit.config_loader import get_numerator_cap, get_stabilization_window
from sallykit.errors import InputError, InsufficientWindowError, NoStabilizationError

logger = logging.getLogger(__name__)

_z = symbols("z")


def binomial(n: int, k: int) -> int:
    """C(n, k), taken to be 0 whenever k < 0 or n < k."""
    if k < 0 or n < k:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class HilbertData:
    """Everything known about the I-adic Hilbert-Samuel function."""

    values: tuple[int, ...]
    function: tuple[int, ...]
    coefficients: tuple[int, ...]
    postulation: int
    numerator: tuple[int, ...]
    dimension: int
    certified_up_to: int

    @property
    def multiplicity(self) -> int:
        return self.coefficients[0]

    def e(self, i: int) -> int:
        """e_i, or 0 past the dimension."""
        return self.coefficients[i] if i < len(self.coefficients) else 0


class LengthTable:
    """Lazily extended table of ℓ(A/I^{n+1})."""

    def __init__(self, ring: RingPresentation, ideal: IdealHandle):
        self.ring = ring
        self.ideal = ideal
        self.entries: list[LengthValue] = []

    def extend_to(self, top: int) -> list[LengthValue]:
        while len(self.entries) <= top:
            n = len(self.entries)
            value = artinian_length(self.ring, ideal_power(self.ideal, n + 1))
            logger.debug("ℓ(A/I^%d) = %d", n + 1, value.value)
            self.entries.append(value)
        return self.entries[: top + 1]


def hilbert_samuel_values(ring: RingPresentation, I: IdealHandle, N: int) -> list[LengthValue]:
    """Exact ℓ(A/I^{n+1}) for n = 0..N."""
    return LengthTable(ring, I).extend_to(N)


def hilbert_function(values: Sequence[Union[int, LengthValue]]) -> list[int]:
    """H_I(t) = ℓ(I^t/I^{t+1}) from the Hilbert-Samuel table."""
    vals = [int(v) for v in values]
    return [vals[0]] + [vals[t] - vals[t - 1] for t in range(1, len(vals))]


def hilbert_polynomial(coefficients: Sequence[int], d: int) -> Callable[[int], int]:
    """The Hilbert-Samuel polynomial n -> Σ (-1)^i e_i C(n+d-i, d-i)."""
    coeffs = list(coefficients) + [0] * (d + 1 - len(coefficients))

    def evaluate(n: int) -> int:
        return sum((-1) ** i * coeffs[i] * binomial(n + d - i, d - i) for i in range(d + 1))

    return evaluate


def hilbert_coefficients(
    values: Sequence[Union[int, LengthValue]],
    d: int,
    window: Optional[int] = None,
) -> tuple[tuple[int, ...], int]:
    """
    Fit e_0..e_d to the value table and find the postulation index.

    The last ``d + 1`` values before the trailing window determine the
    coefficients; the trailing ``window`` values must then be predicted
    exactly.

    Args:
        values: ℓ(A/I^{n+1}) for n = 0..N.
        d: Krull dimension of A.
        window: Verification window (config default 3).

    Returns:
        (e_0..e_d) and the least n_0 with HP_I(n) = ℓ(A/I^{n+1}) for all n >= n_0.

    Raises:
        InsufficientWindowError: The table is too short or not yet polynomial.
    """
    window = get_stabilization_window() if window is None else window
    vals = [int(v) for v in values]
    top = len(vals) - 1
    if len(vals) < d + 1 + window:
        raise InsufficientWindowError(
            f"Need at least {d + 1 + window} values to fit dimension {d} with window {window}, got {len(vals)}"
        )
    start = top - window - d
    rows = [[(-1) ** i * binomial(n + d - i, d - i) for i in range(d + 1)] for n in range(start, start + d + 1)]
    solution = Matrix(rows).LUsolve(Matrix(vals[start : start + d + 1]))
    if not all(entry.is_integer for entry in solution):
        raise InsufficientWindowError(f"Non-integral fit {list(solution)}; extend the value table")
    coefficients = tuple(int(entry) for entry in solution)
    polynomial = hilbert_polynomial(coefficients, d)
    for n in range(start + d + 1, top + 1):
        if polynomial(n) != vals[n]:
            raise InsufficientWindowError(f"Fitted polynomial misses ℓ(A/I^{n + 1}); extend the value table")
    postulation = start
    while postulation > 0 and polynomial(postulation - 1) == vals[postulation - 1]:
        postulation -= 1
    return coefficients, postulation


def _times_one_minus_z(series: list[int], d: int) -> list[int]:
    out = list(series)
    for _ in range(d):
        out = [out[0]] + [out[k] - out[k - 1] for k in range(1, len(out))]
    return out


def hilbert_series_numerator(
    ring: RingPresentation,
    I: IdealHandle,
    dimension: Optional[int] = None,
    window: Optional[int] = None,
    cap: Optional[int] = None,
    table: Optional[LengthTable] = None,
) -> list[int]:
    """
    Coefficients h_0..h_k of h(z) = (1-z)^d Σ_t H_I(t) z^t.

    The table is extended until ``d + window`` zero coefficients follow the
    last nonzero one.

    Raises:
        NoStabilizationError: No such tail below the numerator cap.
    """
    d = ring.dimension if dimension is None else dimension
    window = get_stabilization_window() if window is None else window
    cap = get_numerator_cap() if cap is None else cap
    table = table or LengthTable(ring, I)
    top = d + window
    while top <= cap:
        h = _times_one_minus_z(hilbert_function(table.extend_to(top)), d)
        last = max(k for k, c in enumerate(h) if c)
        if top - last >= d + window:
            return h[: last + 1]
        top += 1
    raise NoStabilizationError(f"Hilbert series numerator did not stabilize below n = {cap}")


def coefficients_from_numerator(h: Sequence[int], d: Optional[int] = None) -> tuple[int, ...]:
    """
    e_i = h^(i)(1)/i! for i = 0..d.

    Raises:
        InputError: h(1) = 0, which no Hilbert series numerator satisfies.
    """
    if not h:
        raise InputError("Empty numerator")
    d = len(h) - 1 if d is None else d
    if sum(h) == 0:
        raise InputError("Numerator vanishes at z = 1")
    return tuple(sum(c * binomial(j, i) for j, c in enumerate(h)) for i in range(d + 1))


def hilbert_data(
    ring: RingPresentation,
    I: IdealHandle,
    n_max: int,
    dimension: Optional[int] = None,
) -> HilbertData:
    """
    Value table, Hilbert function, coefficients and numerator of I.

    The table is extended past ``n_max`` as far as the fit and the numerator
    need, up to the numerator cap.
    """
    d = ring.dimension if dimension is None else dimension
    window = get_stabilization_window()
    cap = get_numerator_cap()
    table = LengthTable(ring, I)
    numerator = hilbert_series_numerator(ring, I, d, window, cap, table)
    top = max(n_max, d + window, len(table.entries) - 1)
    while True:
        try:
            coefficients, postulation = hilbert_coefficients(table.extend_to(top), d, window)
            break
        except InsufficientWindowError:
            if top >= cap:
                raise
            top += 1
    from_series = coefficients_from_numerator(numerator, d)
    if from_series != coefficients:
        raise NoStabilizationError(
            f"Series numerator gives e = {list(from_series)} but the fit gives {list(coefficients)}"
        )
    values = [v.value for v in table.extend_to(top)]
    logger.info("Hilbert coefficients %s (postulation %d, N = %d)", list(coefficients), postulation, top)
    return HilbertData(
        values=tuple(values),
        function=tuple(hilbert_function(values)),
        coefficients=coefficients,
        postulation=postulation,
        numerator=tuple(numerator),
        dimension=d,
        certified_up_to=top,
    )


def _ascending(expr) -> list[int]:
    coeffs = Poly(expr, _z).all_coeffs()[::-1]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return [int(c) for c in coeffs]


def predicted_numerator_northcott(colength: int, e0: int) -> list[int]:
    """I^2 = QI: ℓ(A/I) + (e_0 - ℓ(A/I)) z."""
    return _ascending(colength + (e0 - colength) * _z)


def predicted_numerator_cm_boundary(colength: int, e0: int, sally_first: int) -> list[int]:
    """I^3 = QI^2 and Q ∩ I^2 = QI: ℓ(A/I) + (e_0 - ℓ(A/I) - s) z + s z^2 with s = ℓ(I^2/QI)."""
    return _ascending(colength + (e0 - colength - sally_first) * _z + sally_first * _z**2)


def predicted_numerator_linear(colength: int, e0: int, sally_first: int, c: int) -> list[int]:
    """Sally quotient C a linear ideal of rank c, shifted by one."""
    expr = (
        colength
        + (e0 - colength - sally_first - 1) * _z
        + (sally_first + 1) * _z**2
        + (1 - _z) ** (c + 1) * _z
    )
    return _ascending(expr.expand())


def predicted_numerator_gap_two(colength: int, e0: int) -> list[int]:
    return _ascending(colength + (e0 - colength - 1) * _z + _z**3)


def predicted_numerator_gap_three(colength: int, e0: int, c: int) -> list[int]:
    """ℓ(I^2/QI) = 2 and e_1 = e_0 - ℓ(A/I) + 3, for c = 1 or 2."""
    if c == 1:
        return _ascending(colength + (e0 - colength - 2) * _z + _z**2 + _z**3)
    return _ascending(colength + (e0 - colength - 2) * _z + 3 * _z**3 - _z**4)


def expand_numerator(h: Iterable[int], d: int, terms: int) -> list[int]:
    """First ``terms`` values of H_I(t) from h(z)/(1-z)^d."""
    h = list(h)
    series = [h[t] if t < len(h) else 0 for t in range(terms)]
    for _ in range(d):
        running = 0
        for t in range(terms):
            running += series[t]
            series[t] = running
    return series


def predicted_coefficients_linear(e0: int, e1: int, colength: int, c: int, d: int) -> tuple[int, ...]:
    """e_0..e_d when the Sally quotient C is a linear ideal of rank c, shifted by one."""
    e = [e0, e1] + [0] * (d - 1)
    if d >= 2:
        e[2] = e1 - e0 + colength + (1 if c == 1 and c < d else 0)
    if c == 1 and d >= 3:
        e[3] = 1
    if 2 <= c < d:
        for i in (c + 1, c + 2):
            if 3 <= i <= d:
                e[i] = (-1) ** (c + 1)
    return tuple(e[: d + 1])
