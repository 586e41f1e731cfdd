"""
Ideal arithmetic over a presented local ring A = D/a at the origin.

Lengths of Artinian quotients are computed from truncated standard bases:
for an ideal J primary to the maximal ideal, A/J = D/(J + a + M^N) once
M^N lies in J. With a negative-degree order the standard monomials of the
truncated basis come graded by degree; the first empty degree t certifies
M^t ⊆ J (Nakayama), so the count at level N equals the count at every
level beyond t.

Handles are immutable. Caches are filled idempotently under a lock, so
concurrent first computations on one handle are safe.
"""

import logging
import threading
from collections import Counter
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Any, Callable, Iterable, Optional, Sequence

from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyRing

from sallykit.algebra.groebner import (
    GroebnerBasis,
    eliminate_variables,
    groebner_basis,
    normal_form,
    reduce_polynomial,
    sorted_divisors,
    standard_monomials,
)
from sallykit.algebra.parser import parse_polynomial
from sallykit.algebra.poly import (
    GREVLEX,
    NEGDEGREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    format_poly,
    has_constant_term,
    is_monomial,
    is_prime_field,
    monomial_polynomial,
    monomials_of_degree,
    polynomial_ring,
    rebase,
    ring_descriptor,
    ring_variables,
    total_degree,
    truncate,
)
from sallykit.config_loader import (
    get_dimension_probe_degree,
    get_stabilization_window,
    get_truncation_cap,
    get_truncation_slack,
    get_truncation_step,
)
from sallykit.errors import (
    ContainmentError,
    DimensionMismatchError,
    InputError,
    InsufficientWindowError,
    NegativeExponentError,
    NonMonomialError,
    NoStabilizationError,
    NotZeroDimensionalError,
    ResourceLimitError,
    RingMismatchError,
    ZeroIdealError,
)

logger = logging.getLogger(__name__)


class Memo:
    """Write-once cache; computing twice is harmless, storing is serialized."""

    def __init__(self):
        self._lock = threading.Lock()
        self._values: dict[Any, Any] = {}

    def get(self, key: Any, compute: Callable[[], Any]) -> Any:
        with self._lock:
            if key in self._values:
                return self._values[key]
        value = compute()
        with self._lock:
            return self._values.setdefault(key, value)

    def peek(self, key: Any, default: Any = None) -> Any:
        with self._lock:
            return self._values.get(key, default)

    def put(self, key: Any, value: Any) -> None:
        with self._lock:
            self._values.setdefault(key, value)


class RingPresentation:
    """
    A = D/a localized at the origin, D a polynomial ring over Q or GF(p).

    Args:
        variables: Ordered variable names of D.
        relations: Generators of a; each must have zero constant term.
        field: "rational" or "prime:<p>".
        expected_dimension: Krull dimension the caller expects (checked lazily).
        name: Label used in reports.
    """

    def __init__(
        self,
        variables: Sequence[str],
        relations: Sequence[Polynomial] = (),
        field: str = "rational",
        expected_dimension: Optional[int] = None,
        name: str = "",
    ):
        if len(set(variables)) != len(variables):
            raise InputError("Duplicate variable names")
        self.variables = tuple(variables)
        self.field = field
        self.ring: PolyRing = polynomial_ring(self.variables, field)
        self.name = name
        self.expected_dimension = expected_dimension
        relations = tuple(r for r in relations if r)
        for relation in relations:
            if relation.ring != self.ring:
                raise RingMismatchError("Relation does not live in the ambient ring")
            if has_constant_term(relation):
                raise InputError(f"relation has nonzero constant term: {format_poly(relation)}")
        self.relations = relations
        self.monomial_relations = tuple(next(iter(r.keys())) for r in relations if is_monomial(r))
        self._memo = Memo()

    @classmethod
    def from_strings(
        cls,
        variables: Sequence[str],
        relations: Sequence[str] = (),
        field: str = "rational",
        **kwargs: Any,
    ) -> "RingPresentation":
        ring = polynomial_ring(tuple(variables), field)
        return cls(variables, [parse_polynomial(text, ring) for text in relations], field, **kwargs)

    def __repr__(self) -> str:
        return f"RingPresentation({self.name or self.variables!r}, {len(self.relations)} relations, {self.field})"

    @property
    def is_prime_field(self) -> bool:
        return is_prime_field(self.ring.domain)

    def polynomial(self, text: str) -> Polynomial:
        return parse_polynomial(text, self.ring)

    def ideal(self, gens: Iterable[Polynomial], label: str = "") -> "IdealHandle":
        return make_ideal(self, gens, label=label)

    def ideal_from_strings(self, exprs: Iterable[str], label: str = "") -> "IdealHandle":
        return make_ideal(self, [self.polynomial(text) for text in exprs], label=label)

    def maximal_ideal(self) -> "IdealHandle":
        return make_ideal(self, (), mpower=1, label="m")

    def unit_ideal(self) -> "IdealHandle":
        return make_ideal(self, (), mpower=0, label="A")

    def killed(self, monom: Monomial) -> bool:
        """True if a monomial relation divides ``monom`` (so it is zero in A)."""
        monomial_div = self.ring.monomial_div
        return any(monomial_div(monom, rel) is not None for rel in self.monomial_relations)

    def surviving_monomials(self, degree: int) -> list[Monomial]:
        """Monomials of the given degree not killed by monomial relations."""
        return [m for m in monomials_of_degree(self.ring.ngens, degree) if not self.killed(m)]

    def relation_basis(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        """Cached global reduced basis of a."""
        return self._memo.get(("global", order), lambda: groebner_basis(self.ring, self.relations, order))

    def local_relation_basis(self, level: int, order: MonomialOrder = NEGDEGREVLEX) -> GroebnerBasis:
        """Cached standard basis of a modulo M^level."""
        return self._memo.get(
            ("local", order, level),
            lambda: groebner_basis(self.ring, self.relations, order, truncation=level),
        )

    def power_lengths(self, top: int) -> list[int]:
        """ℓ(A/m^{n+1}) for n = 0..top, from the relation standard bases."""
        return [len(standard_monomials(self.local_relation_basis(n + 1))) for n in range(top + 1)]

    @property
    def dimension(self) -> int:
        """Krull dimension of A, from the growth of the m-adic Hilbert function."""
        return self._memo.get("dimension", self._detect_dimension)

    def _detect_dimension(self) -> int:
        window = get_stabilization_window()
        values = self.power_lengths(get_dimension_probe_degree())
        # m-adic Hilbert function; its k-th difference vanishes eventually iff k >= dim A
        diffs = [values[0]] + [values[t] - values[t - 1] for t in range(1, len(values))]
        dimension = None
        for k in range(self.ring.ngens + 1):
            if len(diffs) < window:
                break
            if all(v == 0 for v in diffs[-window:]):
                dimension = k
                break
            diffs = [diffs[t] - diffs[t - 1] for t in range(1, len(diffs))]
        if dimension is None:
            raise InsufficientWindowError("Could not detect the Krull dimension; raise dimension_probe_degree")
        if self.expected_dimension is not None and dimension != self.expected_dimension:
            raise DimensionMismatchError(
                f"Detected dimension {dimension} but the presentation expects {self.expected_dimension}"
            )
        logger.info("Detected dim A = %d for %r", dimension, self)
        return dimension

    def embedding_dimension(self) -> int:
        """ℓ(m/m^2)."""
        values = self.power_lengths(1)
        return values[1] - values[0]


@dataclass(frozen=True)
class LengthValue:
    """
    A certified length.

    ``certified_at`` is a degree t with M^t ⊆ J, read off as the first
    degree holding no standard monomial; every truncation above t gives
    the same count. With ``stable_count`` set the count was certified
    instead by equal values at truncation levels t and t + 1.
    """

    value: int
    certified_at: int
    stable_count: bool = False

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value


@dataclass(frozen=True, eq=False)
class IdealHandle:
    """
    An ideal of A given by generators in D, optionally plus a power of M.

    ``mpower`` = s means M^s is part of the generating set; ``floor_hint``
    records an s with M^s ⊆ J that is known without being a generator.
    Use ``make_ideal`` to build normalized handles.
    """

    ring: RingPresentation
    generators: tuple[Polynomial, ...]
    mpower: Optional[int] = None
    floor_hint: Optional[int] = None
    primary_hint: Optional[bool] = None
    label: str = ""
    _memo: Memo = field(default_factory=Memo, repr=False)

    @property
    def is_unit(self) -> bool:
        return self.mpower == 0

    @property
    def is_zero(self) -> bool:
        return not self.generators and self.mpower is None

    def floor_bound(self) -> Optional[int]:
        """Some s with M^s ⊆ J, if one is known."""
        known = [s for s in (self.mpower, self.floor_hint, self._memo.peek("floor")) if s is not None]
        return min(known) if known else None

    def explicit_generators(self) -> list[Polynomial]:
        """Generators with the M^s part expanded into monomials."""
        gens = list(self.generators)
        if self.mpower is not None:
            gens.extend(monomial_polynomial(self.ring.ring, m) for m in self.ring.surviving_monomials(self.mpower))
        return gens

    def describe(self) -> str:
        if self.label:
            return self.label
        parts = [format_poly(g) for g in self.generators]
        if self.mpower is not None:
            parts.append(f"m^{self.mpower}")
        return "(" + ", ".join(parts) + ")"

    def __repr__(self) -> str:
        return f"IdealHandle{self.describe()}"


def make_ideal(
    ring: RingPresentation,
    gens: Iterable[Polynomial],
    mpower: Optional[int] = None,
    floor_hint: Optional[int] = None,
    primary_hint: Optional[bool] = None,
    label: str = "",
) -> IdealHandle:
    """
    Build a normalized handle.

    Generators with a unit constant term make the unit ideal; all variables
    among the generators make the maximal ideal; terms inside M^mpower and
    monomials killed by monomial relations are dropped; duplicates and
    monomial generators divisible by other monomial generators are removed.
    """
    gens = list(gens)
    for g in gens:
        if g.ring != ring.ring:
            raise RingMismatchError("Ideal generator does not live in the ambient ring")
    if mpower is not None and mpower < 0:
        raise NegativeExponentError("Power of the maximal ideal must be nonnegative")
    if mpower == 0 or any(has_constant_term(g) for g in gens if g):
        return IdealHandle(ring, (), 0, 0, True, label)

    variables = {tuple(1 if i == j else 0 for j in range(ring.ring.ngens)) for i in range(ring.ring.ngens)}
    monomial_gens = {next(iter(g.keys())) for g in gens if g and is_monomial(g)}
    if variables <= monomial_gens:
        mpower = 1

    cleaned: list[Polynomial] = []
    seen = set()
    for g in gens:
        if mpower is not None:
            g = truncate(g, mpower)
        if not g:
            continue
        if is_monomial(g):
            monom = next(iter(g.keys()))
            if ring.killed(monom):
                continue
            g = monomial_polynomial(ring.ring, monom)
        frozen = frozenset(g.items())
        if frozen in seen:
            continue
        seen.add(frozen)
        cleaned.append(g)

    monomial_div = ring.ring.monomial_div
    monos = [next(iter(g.keys())) for g in cleaned if is_monomial(g)]
    pruned = []
    for g in cleaned:
        if is_monomial(g):
            m = next(iter(g.keys()))
            if any(other != m and monomial_div(m, other) is not None for other in monos):
                continue
        pruned.append(g)

    if mpower is not None:
        floor_hint = mpower if floor_hint is None else min(floor_hint, mpower)
        primary_hint = True
    elif floor_hint is not None:
        primary_hint = True
    return IdealHandle(ring, tuple(pruned), mpower, floor_hint, primary_hint, label)


def _same_ring(J: IdealHandle, K: IdealHandle) -> None:
    if J.ring is not K.ring:
        raise RingMismatchError("Ideals live over different ring presentations")


def _add_floors(a: Optional[int], b: Optional[int]) -> Optional[int]:
    return None if a is None or b is None else a + b


def ideal_sum(J: IdealHandle, K: IdealHandle) -> IdealHandle:
    _same_ring(J, K)
    powers = [s for s in (J.mpower, K.mpower) if s is not None]
    floors = [s for s in (J.floor_bound(), K.floor_bound()) if s is not None]
    primary = True if (J.primary_hint or K.primary_hint) else None
    return make_ideal(
        J.ring,
        J.generators + K.generators,
        mpower=min(powers) if powers else None,
        floor_hint=min(floors) if floors else None,
        primary_hint=primary,
    )


def ideal_product(J: IdealHandle, K: IdealHandle) -> IdealHandle:
    """(G + M^a)(H + M^b) = GH + G M^b + H M^a + M^(a+b)."""
    _same_ring(J, K)
    if J.is_unit:
        return K
    if K.is_unit:
        return J
    ring = J.ring
    gens = [g * h for g in J.generators for h in K.generators]
    if K.mpower is not None:
        gens.extend(g.mul_monom(m) for g in J.generators for m in ring.surviving_monomials(K.mpower))
    if J.mpower is not None:
        gens.extend(h.mul_monom(m) for h in K.generators for m in ring.surviving_monomials(J.mpower))
    primary = True if (J.primary_hint and K.primary_hint) else None
    return make_ideal(
        ring,
        gens,
        mpower=_add_floors(J.mpower, K.mpower),
        floor_hint=_add_floors(J.floor_bound(), K.floor_bound()),
        primary_hint=primary,
    )


def ideal_power(J: IdealHandle, k: int) -> IdealHandle:
    """J^k by repeated products (J^0 is the unit ideal); cached on the handle."""
    if k < 0:
        raise NegativeExponentError(f"Negative ideal exponent {k}")
    if k == 0:
        return J.ring.unit_ideal()
    if k == 1:
        return J
    return J._memo.get(("power", k), lambda: ideal_product(ideal_power(J, k - 1), J))


def ideal_combine(op: str, J: IdealHandle, K: Any) -> IdealHandle:
    """
    Sum, product or power of ideals.

    Args:
        op: "sum", "product" or "power".
        J: Left ideal.
        K: Right ideal, or the exponent for "power".
    """
    if op == "sum":
        return ideal_sum(J, K)
    if op == "product":
        return ideal_product(J, K)
    if op == "power":
        return ideal_power(J, int(K))
    raise InputError(f"Unknown ideal operation {op!r}")


@dataclass(frozen=True)
class _Certified:
    basis: GroebnerBasis
    level: int
    monomials: tuple[Monomial, ...]


def _truncated_basis(J: IdealHandle, level: int, order: MonomialOrder) -> GroebnerBasis:
    ring = J.ring
    if J.mpower is not None:
        level = min(level, J.mpower)

    def compute() -> GroebnerBasis:
        gens = [truncate(g, level) for g in J.generators]
        if order.is_local:
            base = list(ring.local_relation_basis(level, order).polys)
        else:
            base = list(ring.relations)
        return groebner_basis(ring.ring, base + [g for g in gens if g], order, truncation=level)

    return J._memo.get(("basis", order, level), compute)


def _degree_histogram(monomials: Iterable[Monomial]) -> Counter:
    return Counter(sum(m) for m in monomials)


def _missing_pure_power(G: GroebnerBasis) -> bool:
    n = G.ring.ngens
    covered = set()
    for lm in G.leads:
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            covered.add(support[0])
    return len(covered) < n and not G.is_unit()


def _certify(J: IdealHandle, order: MonomialOrder = NEGDEGREVLEX) -> _Certified:
    return J._memo.get(("certified", order), lambda: _compute_certified(J, order))


def _compute_certified(J: IdealHandle, order: MonomialOrder) -> _Certified:
    ring = J.ring
    if J.is_unit:
        G = groebner_basis(ring.ring, [ring.ring.one], order, truncation=1)
        return _Certified(G, 0, ())
    upper = J.floor_bound()
    start = max((total_degree(g) for g in J.generators), default=0) + get_truncation_slack()
    start = max(start, 1)
    level = start if upper is None else min(start, upper)
    if not J.generators and J.mpower is not None:
        level = J.mpower
    step = max(1, get_truncation_step())
    cap = get_truncation_cap()
    previous: Optional[int] = None
    while True:
        G = _truncated_basis(J, level, order)
        monomials = standard_monomials(G)
        if order.is_local:
            histogram = _degree_histogram(monomials)
            gap = next((t for t in range(level) if histogram[t] == 0), None)
            if gap is not None or (upper is not None and level >= upper):
                certified = gap if gap is not None else level
                J._memo.put("floor", certified)
                logger.debug("Certified ℓ = %d for %s at level %d", len(monomials), J.describe(), certified)
                return _Certified(G, certified, tuple(monomials))
        else:
            # global orders: equal counts at two consecutive levels certify
            if previous is not None and previous == len(monomials):
                J._memo.put("floor", level - 1)
                return _Certified(G, level - 1, tuple(monomials))
            if upper is not None and level >= upper:
                J._memo.put("floor", level)
                return _Certified(G, level, tuple(monomials))
            previous = len(monomials)
            step = 1
        level += step
        if level > cap:
            if _missing_pure_power(G):
                raise NotZeroDimensionalError(
                    f"{J.describe()} is not primary to the maximal ideal (no pure power of some variable "
                    f"up to degree {cap})"
                )
            raise ResourceLimitError(f"Length of A/{J.describe()} did not stabilize below truncation cap {cap}")


def is_m_primary(J: IdealHandle) -> bool:
    """True if M^s ⊆ J for some s (in the local ring)."""
    if J.primary_hint is not None or J.floor_bound() is not None:
        return bool(J.primary_hint) or J.floor_bound() is not None
    return J._memo.get("primary", lambda: _detect_primary(J))


def _detect_primary(J: IdealHandle) -> bool:
    if J.is_zero:
        return False
    G = global_basis(J)
    try:
        standard_monomials(G)
        return True
    except NotZeroDimensionalError:
        pass
    try:
        _certify(J)
        return True
    except (NotZeroDimensionalError, ResourceLimitError):
        return False


def global_basis(J: IdealHandle, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced basis of the lifted ideal J + a in D."""
    return J._memo.get(
        ("global", order),
        lambda: groebner_basis(J.ring.ring, list(J.ring.relations) + J.explicit_generators(), order),
    )


def artinian_length(ring: RingPresentation, J: IdealHandle, order: MonomialOrder = NEGDEGREVLEX) -> LengthValue:
    """
    ℓ_A(A/J) for J primary to the maximal ideal.

    Raises:
        NotZeroDimensionalError: J is not m-primary.
        ResourceLimitError: No certification below the truncation cap.
    """
    if J.ring is not ring:
        raise RingMismatchError("Ideal does not belong to this ring presentation")
    cert = _certify(J, order)
    return LengthValue(len(cert.monomials), cert.level, stable_count=not order.is_local)


def standard_basis_monomials(J: IdealHandle) -> tuple[GroebnerBasis, tuple[Monomial, ...]]:
    """The certified local basis of J and the standard monomials spanning A/J."""
    cert = _certify(J)
    return cert.basis, cert.monomials


def _containment_witness(J: IdealHandle, K: IdealHandle) -> Optional[Polynomial]:
    """First generator of K outside J, or None if K ⊆ J."""
    _same_ring(J, K)
    ring = J.ring
    if J.is_unit:
        return None
    if K.is_unit:
        return ring.ring.one
    if is_m_primary(J):
        cert = _certify(J)
        if K.mpower is not None and K.mpower < cert.level:
            witness = next(m for m in cert.monomials if sum(m) == K.mpower)
            return monomial_polynomial(ring.ring, witness)
        G = cert.basis
    else:
        G = global_basis(J)
        if K.mpower is not None:
            for m in ring.surviving_monomials(K.mpower):
                probe = monomial_polynomial(ring.ring, m)
                if normal_form(probe, G):
                    return probe
    for g in K.generators:
        if normal_form(g, G):
            return g
    return None


def ideal_contains(J: IdealHandle, K: IdealHandle) -> bool:
    """True if K ⊆ J."""
    return _containment_witness(J, K) is None


def ideal_equal(J: IdealHandle, K: IdealHandle) -> bool:
    """
    Equality of ideals of A.

    m-primary ideals are compared in the local ring through their certified
    standard bases; other ideals through reduced global bases of J + a.
    """
    return ideal_contains(J, K) and ideal_contains(K, J)


def quotient_length(ring: RingPresentation, J: IdealHandle, K: IdealHandle) -> LengthValue:
    """
    ℓ_A(J/K) for K ⊆ J.

    Raises:
        ContainmentError: K is not contained in J (carries a witness generator).
    """
    witness = _containment_witness(J, K)
    if witness is not None:
        raise ContainmentError(
            f"{K.describe()} is not contained in {J.describe()}: {format_poly(witness)} is outside", witness
        )
    if is_m_primary(K):
        outer = artinian_length(ring, K)
        inner = artinian_length(ring, J)
        return LengthValue(
            outer.value - inner.value,
            max(outer.certified_at, inner.certified_at),
            stable_count=outer.stable_count or inner.stable_count,
        )
    return _truncated_quotient_length(ring, J, K)


def _truncated_quotient_length(ring: RingPresentation, J: IdealHandle, K: IdealHandle) -> LengthValue:
    def count(I: IdealHandle, level: int) -> int:
        return len(standard_monomials(_truncated_basis(I, level, NEGDEGREVLEX)))

    level = max((total_degree(g) for g in K.generators), default=1) + get_truncation_slack()
    previous = count(K, level) - count(J, level)
    while level < get_truncation_cap():
        current = count(K, level + 1) - count(J, level + 1)
        if current == previous:
            return LengthValue(current, level, stable_count=True)
        previous = current
        level += 1
    raise ResourceLimitError(f"ℓ({J.describe()}/{K.describe()}) did not stabilize below the truncation cap")


class _QuotientSpace:
    """A/J as a vector space on its standard monomials."""

    def __init__(self, basis: GroebnerBasis, monomials: Sequence[Monomial]):
        self.basis = basis
        self.monomials = list(monomials)
        self.index = {m: i for i, m in enumerate(self.monomials)}
        self.divisors, self.leads = sorted_divisors(basis.polys, basis.order)
        self.ring = basis.ring
        self.domain = basis.ring.domain

    def __len__(self) -> int:
        return len(self.monomials)

    def coords(self, f: Polynomial) -> dict[int, Any]:
        r = reduce_polynomial(f, self.divisors, self.leads, self.basis.order, self.basis.truncation)
        return {self.index[m]: c for m, c in r.items()}

    def poly(self, vector: dict[int, Any]) -> Polynomial:
        return self.ring.dtype([(self.monomials[i], c) for i, c in vector.items() if c])

    def matrix(self, images: Sequence[Polynomial]) -> DomainMatrix:
        """Matrix whose column j holds the coordinates of images[j]."""
        dod: dict[int, dict[int, Any]] = {}
        for j, image in enumerate(images):
            for i, c in self.coords(image).items():
                dod.setdefault(i, {})[j] = c
        return DomainMatrix(dod, (len(self), len(images)), self.domain)

    def multiplication(self, f: Polynomial) -> DomainMatrix:
        return self.matrix([f.mul_monom(m) for m in self.monomials])


def _kernel(blocks: Sequence[DomainMatrix], ncols: int, domain: Any) -> list[dict[int, Any]]:
    """Basis of the common kernel of the row blocks, as sparse vectors."""
    dod: dict[int, dict[int, Any]] = {}
    row = 0
    for block in blocks:
        for i, entries in block.to_dod().items():
            if entries:
                dod[row + i] = dict(entries)
        row += block.shape[0]
    if not dod:
        return [{j: domain.one} for j in range(ncols)]
    rows = sorted(dod)
    compact = {k: dod[r] for k, r in enumerate(rows)}
    null = DomainMatrix(compact, (len(rows), ncols), domain).nullspace()
    return [entries for entries in null.to_dod().values() if entries]


def _row_space(matrix: DomainMatrix) -> DomainMatrix:
    reduced, pivots = matrix.rref()
    dod = {i: entries for i, entries in reduced.to_dod().items() if i < len(pivots)}
    return DomainMatrix(dod, (len(pivots), matrix.shape[1]), matrix.domain)


def _power_annihilator_rows(space: _QuotientSpace, power: int) -> DomainMatrix:
    """
    Rows P with ker P = (J : M^power)/J inside A/J.

    Built from (J : M^k) = {u : x_i u ∈ (J : M^(k-1)) for all i}.
    """
    n = len(space)
    domain = space.domain
    constraint = DomainMatrix({i: {i: domain.one} for i in range(n)}, (n, n), domain)
    variables = space.ring.gens
    multipliers = [space.multiplication(x) for x in variables]
    for _ in range(power):
        if constraint.shape[0] == 0:
            break
        stacked = constraint * multipliers[0]
        for X in multipliers[1:]:
            stacked = stacked.vstack(constraint * X)
        constraint = _row_space(stacked)
    return constraint


def _local_colon(J: IdealHandle, K: IdealHandle) -> IdealHandle:
    cert = _certify(J)
    space = _QuotientSpace(cert.basis, cert.monomials)
    if not len(space):
        return J.ring.unit_ideal()
    blocks = [space.multiplication(f) for f in K.generators]
    if K.mpower is not None:
        blocks.append(_power_annihilator_rows(space, K.mpower))
    kernel = _kernel(blocks, len(space), space.domain)
    extra = [space.poly(vector) for vector in kernel]
    return make_ideal(J.ring, J.generators + tuple(extra), mpower=J.mpower,
                      floor_hint=cert.level, primary_hint=True)


def _local_intersect(J: IdealHandle, K: IdealHandle) -> IdealHandle:
    ring = J.ring
    cert_j, cert_k = _certify(J), _certify(K)
    level = max(cert_j.level, cert_k.level)
    if level == 0:
        return ring.unit_ideal()
    ambient = ring.local_relation_basis(level)
    ambient_monomials = standard_monomials(ambient)
    images = [monomial_polynomial(ring.ring, m) for m in ambient_monomials]
    blocks = [
        _QuotientSpace(cert_j.basis, cert_j.monomials).matrix(images),
        _QuotientSpace(cert_k.basis, cert_k.monomials).matrix(images),
    ]
    kernel = _kernel(blocks, len(images), ring.ring.domain)
    gens = [ring.ring.dtype([(ambient_monomials[i], c) for i, c in vector.items() if c]) for vector in kernel]
    return make_ideal(ring, gens, mpower=level, primary_hint=True)


def _fresh_name(names: Sequence[str], base: str = "t") -> str:
    name = base
    while name in names:
        name += "_"
    return name


def intersect_lifted(ring: PolyRing, left: Sequence[Polynomial], right: Sequence[Polynomial]) -> list[Polynomial]:
    """(left) ∩ (right) in D via t*left + (1 - t)*right, eliminating t."""
    names = ring_variables(ring)
    tname = _fresh_name(names)
    tring = polynomial_ring((tname,) + names, ring_descriptor(ring))
    positions = list(range(1, len(names) + 1))
    t = tring.gens[0]
    gens = [t * rebase(p, tring, positions) for p in left if p]
    gens += [(1 - t) * rebase(p, tring, positions) for p in right if p]
    if not gens:
        return []
    _, kept = eliminate_variables(gens, tring, [tname])
    return kept


def _clean_lifted(ring: RingPresentation, polys: Iterable[Polynomial]) -> list[Polynomial]:
    base = ring.relation_basis()
    return [p for p in polys if not base.polys or normal_form(p, base)]


def ideal_intersect(J: IdealHandle, K: IdealHandle) -> IdealHandle:
    """
    J ∩ K in A.

    Two m-primary ideals are intersected locally as subspaces of A/M^N;
    otherwise the lifted ideals J + a and K + a are intersected in D with
    the one-new-variable trick.
    """
    _same_ring(J, K)
    if J.is_unit:
        return K
    if K.is_unit:
        return J
    if is_m_primary(J) and is_m_primary(K):
        return _local_intersect(J, K)
    ring = J.ring
    relations = list(ring.relations)
    lifted = intersect_lifted(ring.ring, J.explicit_generators() + relations, K.explicit_generators() + relations)
    return make_ideal(ring, _clean_lifted(ring, lifted))


def ideal_colon(J: IdealHandle, K: IdealHandle) -> IdealHandle:
    """
    (J :_A K).

    For m-primary J this is J plus the common kernel of multiplication by
    the generators of K on A/J; otherwise each (J + a : f) is computed as
    ((J + a) ∩ (f))/f in D and the results are intersected.

    Raises:
        ZeroIdealError: K is the zero ideal.
    """
    _same_ring(J, K)
    if K.is_zero or (not K.generators and K.mpower is None):
        raise ZeroIdealError("Colon by the zero ideal is undefined")
    if K.is_unit:
        return J
    if J.is_unit:
        return J
    if is_m_primary(J):
        return _local_colon(J, K)
    ring = J.ring
    left = J.explicit_generators() + list(ring.relations)
    result: Optional[list[Polynomial]] = None
    for f in K.explicit_generators():
        quotients = [h.exquo(f) for h in intersect_lifted(ring.ring, left, [f])]
        result = quotients if result is None else intersect_lifted(ring.ring, result, quotients)
    return make_ideal(ring, _clean_lifted(ring, result or []))


def eliminate(J: IdealHandle, drop: Iterable[str]) -> IdealHandle:
    """
    (J + a) ∩ k[remaining variables], as an ideal of the polynomial ring on
    the remaining variables (no relations).
    """
    ring = J.ring
    keep_ring, polys = eliminate_variables(list(ring.relations) + J.explicit_generators(), ring.ring, drop)
    target = RingPresentation(ring_variables(keep_ring), (), ring.field)
    return make_ideal(target, polys)


def intersection_length_identity(ring: RingPresentation, J: IdealHandle, K: IdealHandle) -> int:
    """ℓ(A/(J∩K)) = ℓ(A/J) + ℓ(A/K) - ℓ(A/(J+K)) for m-primary J and K."""
    return (
        artinian_length(ring, J).value
        + artinian_length(ring, K).value
        - artinian_length(ring, ideal_sum(J, K)).value
    )


def monomial_length_oracle(
    variables: Sequence[str],
    generators: Sequence[Any],
    truncation: Optional[int] = None,
) -> LengthValue:
    """
    ℓ(k[x]/J) for a monomial ideal by scanning the lattice directly.

    Args:
        variables: Variable names.
        generators: Exponent tuples or monomial polynomials.
        truncation: Scan monomials of degree < truncation (default: large
            enough for the pure powers present).

    Raises:
        NonMonomialError: A generator has more than one term.
        NotZeroDimensionalError: Some variable has no pure power and no truncation was given.
        NoStabilizationError: Counts at ``truncation`` and ``truncation + 1`` differ.
    """
    n = len(variables)
    exponents: list[tuple[int, ...]] = []
    for g in generators:
        if isinstance(g, (tuple, list)):
            monom = tuple(g)
        else:
            if not is_monomial(g):
                raise NonMonomialError(f"Not a monomial: {format_poly(g)}")
            monom = next(iter(g.keys()))
        if len(monom) != n:
            raise InputError("Exponent vector width does not match the variable count")
        exponents.append(tuple(monom))
    if any(not any(m) for m in exponents):
        return LengthValue(0, 0)
    if truncation is None:
        pure = [min((m[i] for m in exponents if m[i] and sum(m) == m[i]), default=0) for i in range(n)]
        if not all(pure):
            raise NotZeroDimensionalError("Monomial ideal misses a pure power of some variable")
        truncation = sum(e - 1 for e in pure) + 1

    def count(limit: int) -> int:
        total = 0
        for point in cartesian(range(limit), repeat=n):
            if sum(point) >= limit:
                continue
            if not any(all(p >= e for p, e in zip(point, gen)) for gen in exponents):
                total += 1
        return total

    value = count(truncation)
    if count(truncation + 1) != value:
        raise NoStabilizationError(f"Monomial count still grows at degree {truncation}")
    return LengthValue(value, truncation, stable_count=True)
