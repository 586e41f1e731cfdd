"""
Buchberger's algorithm, normal forms and elimination.

The main loop follows the improved Buchberger algorithm of Becker and
Weispfenning (GROEBNERNEWS2): Gebauer-Moeller pair filtering for the
coprime and chain criteria, the normal selection strategy and a final
interreduction to the reduced monic basis.

A run may be *truncated* at degree N: every term of degree >= N is
discarded, which computes modulo the N-th power of the maximal ideal.
With a local (negative-degree) order this yields a standard basis of the
localized ideal modulo M^N, the basis of every length computation.
"""

import heapq
import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from sympy.polys.rings import PolyRing

from sallykit.algebra.poly import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    elimination_order,
    leading_monomial,
    make_monic,
    monomial_polynomial,
    monomials_of_degree,
    polynomial_ring,
    rebase,
    ring_descriptor,
    ring_variables,
    truncate,
)
from sallykit.config_loader import get_degree_cap
from sallykit.errors import InputError, NotZeroDimensionalError, ResourceLimitError, RingMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced monic Groebner (or truncated standard) basis."""

    polys: tuple[Polynomial, ...]
    order: MonomialOrder
    ring: Optional[PolyRing]
    truncation: Optional[int] = None
    leads: tuple[Monomial, ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "leads", tuple(leading_monomial(g, self.order) for g in self.polys))

    @property
    def variables(self) -> tuple[str, ...]:
        return ring_variables(self.ring) if self.ring is not None else ()

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return not normal_form(f, self)

    def is_unit(self) -> bool:
        return self.ring is not None and self.ring.zero_monom in self.leads


def sorted_divisors(basis: Sequence[Polynomial], order: MonomialOrder) -> tuple[list[Polynomial], list[Monomial]]:
    # dividing by low-degree leading monomials first is on average faster
    pairs = sorted(((leading_monomial(g, order), g) for g in basis), key=lambda item: order.key(item[0]))
    return [g for _, g in pairs], [lm for lm, _ in pairs]


def reduce_polynomial(
    f: Polynomial,
    divisors: Sequence[Polynomial],
    leads: Sequence[Monomial],
    order: MonomialOrder,
    truncation: Optional[int] = None,
) -> Polynomial:
    """
    Fully reduce ``f`` by monic divisors with the given leading monomials.

    Returns:
        A remainder none of whose terms is divisible by a leading monomial.
    """
    ring = f.ring
    key = order.key
    monomial_div = ring.monomial_div
    monomial_mul = ring.monomial_mul
    zero = ring.domain.zero
    if truncation is None:
        work = dict(f)
    else:
        work = {m: c for m, c in f.items() if sum(m) < truncation}
    remainder = {}
    while work:
        m = max(work, key=key)
        coeff = work[m]
        for g, lm in zip(divisors, leads):
            quotient = monomial_div(m, lm)
            if quotient is None:
                continue
            for gm, gc in g.items():
                mm = monomial_mul(gm, quotient)
                if truncation is not None and sum(mm) >= truncation:
                    continue
                value = work.get(mm, zero) - coeff * gc
                if value:
                    work[mm] = value
                else:
                    work.pop(mm, None)
            break
        else:
            remainder[m] = coeff
            del work[m]
    return ring.dtype(remainder)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """
    Remainder of ``f`` modulo ``G``.

    The result has no term divisible by a leading monomial of ``G`` and is
    congruent to ``f`` modulo the ideal (and modulo M^N for truncated bases).
    """
    if f.ring != G.ring:
        raise RingMismatchError("normal_form: polynomial and basis live in different rings")
    divisors, leads = sorted_divisors(G.polys, G.order)
    return reduce_polynomial(f, divisors, leads, G.order, G.truncation)


def spoly(p1: Polynomial, p2: Polynomial, order: MonomialOrder, truncation: Optional[int] = None) -> Polynomial:
    """
    Compute LCM(LM(p1), LM(p2))/LM(p1)*p1 - LCM(LM(p1), LM(p2))/LM(p2)*p2.

    This is the S-polynomial provided p1 and p2 are monic.
    """
    ring = p1.ring
    lm1 = leading_monomial(p1, order)
    lm2 = leading_monomial(p2, order)
    lcm = ring.monomial_lcm(lm1, lm2)
    s = p1.mul_monom(ring.monomial_div(lcm, lm1)) - p2.mul_monom(ring.monomial_div(lcm, lm2))
    return s if truncation is None else truncate(s, truncation)


class _Run:
    """State of one Buchberger run (indices into ``self.f``)."""

    def __init__(self, order: MonomialOrder, truncation: Optional[int], degree_cap: int):
        self.order = order
        self.truncation = truncation
        self.degree_cap = degree_cap
        self.f: list[Polynomial] = []
        self.lm: list[Monomial] = []
        self.G: set[int] = set()
        self.pairs: set[tuple[int, int]] = set()
        self.queue: list[tuple[int, int, int]] = []
        self.reductions_to_zero = 0

    def add(self, h: Polynomial) -> int:
        h = make_monic(h, self.order)
        lm = leading_monomial(h, self.order)
        if sum(lm) > self.degree_cap:
            raise ResourceLimitError(
                f"Groebner computation exceeded the degree cap {self.degree_cap} (leading degree {sum(lm)})"
            )
        self.f.append(h)
        self.lm.append(lm)
        return len(self.f) - 1

    def _push(self, pair: tuple[int, int]) -> None:
        i, j = min(pair), max(pair)
        lcm = self.f[0].ring.monomial_lcm(self.lm[i], self.lm[j])
        self.pairs.add((i, j))
        heapq.heappush(self.queue, (sum(lcm), i, j))

    def select(self) -> Optional[tuple[int, int]]:
        # normal selection strategy: lowest lcm degree, ties by pair indices
        while self.queue:
            _, i, j = heapq.heappop(self.queue)
            if (i, j) in self.pairs:
                self.pairs.remove((i, j))
                return i, j
        return None

    def update(self, ih: int) -> None:
        # update G using the set of critical pairs and h; [BW] page 230
        ring = self.f[ih].ring
        monomial_lcm = ring.monomial_lcm
        monomial_div = ring.monomial_div
        monomial_mul = ring.monomial_mul
        lm = self.lm
        mh = lm[ih]

        # filter new pairs (h, g), g in G
        C = sorted(self.G)
        D: list[int] = []
        while C:
            ig = C.pop()
            mg = lm[ig]
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip: int) -> bool:
                return monomial_div(lcm_hg, monomial_lcm(mh, lm[ip])) is not None

            if monomial_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ipx) for ipx in C) and not any(lcm_divides(ipd) for ipd in D)
            ):
                D.append(ig)

        E = [ig for ig in D if monomial_mul(mh, lm[ig]) != monomial_lcm(mh, lm[ig])]

        # filter old pairs
        kept = set()
        for ig1, ig2 in self.pairs:
            lcm12 = monomial_lcm(lm[ig1], lm[ig2])
            if (
                monomial_div(lcm12, mh) is None
                or monomial_lcm(lm[ig1], mh) == lcm12
                or monomial_lcm(lm[ig2], mh) == lcm12
            ):
                kept.add((ig1, ig2))
        self.pairs = kept

        for ig in E:
            if self._worth_reducing(ih, ig):
                self._push((ih, ig))

        # filter polynomials
        self.G = {ig for ig in self.G if monomial_div(lm[ig], mh) is None}
        self.G.add(ih)

    def _worth_reducing(self, i: int, j: int) -> bool:
        # S-polynomials of two monomials vanish identically
        if len(self.f[i]) == 1 and len(self.f[j]) == 1:
            return False
        if self.truncation is not None and self.order.is_local:
            lcm = self.f[i].ring.monomial_lcm(self.lm[i], self.lm[j])
            # every term of the S-polynomial has degree >= deg lcm
            return sum(lcm) < self.truncation
        return True

    def reduce(self, p: Polynomial, indices: Iterable[int]) -> Polynomial:
        divisors, leads = sorted_divisors([self.f[i] for i in indices], self.order)
        return reduce_polynomial(p, divisors, leads, self.order, self.truncation)


def _interreduce(
    polys: list[Polynomial],
    order: MonomialOrder,
    truncation: Optional[int],
    full: bool = False,
) -> list[Polynomial]:
    # replace the input with a reduced list of initial polynomials; see [BW] page 203
    # full: reduce each entry by all the others, not only the earlier ones
    current = [make_monic(p, order) for p in polys if p]
    while True:
        reduced = []
        for i, p in enumerate(current):
            others = reduced + current[i + 1:] if full else current[:i]
            divisors, leads = sorted_divisors(others, order)
            r = reduce_polynomial(p, divisors, leads, order, truncation)
            if r:
                reduced.append(make_monic(r, order))
        if reduced == current:
            return current
        current = reduced


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    truncation: Optional[int] = None,
    degree_cap: Optional[int] = None,
    ring: Optional[PolyRing] = None,
) -> GroebnerBasis:
    """
    Reduced monic Groebner basis of the ideal generated by ``gens``.

    Args:
        gens: Generators, all in one ring (may be empty).
        order: Monomial order. Local orders need a truncation.
        truncation: Optional degree N; compute modulo M^N.
        degree_cap: Abort past this leading degree (config default 64).
        ring: Ambient ring, needed only when ``gens`` is empty.

    Returns:
        The reduced basis, sorted by descending leading monomial.

    Raises:
        ResourceLimitError: The degree cap was exceeded.
    """
    gens = [g for g in gens if g]
    degree_cap = get_degree_cap() if degree_cap is None else degree_cap
    if order.is_local and truncation is None:
        raise InputError(f"The local order {order.name} needs a truncation degree")
    if truncation is not None and truncation > degree_cap:
        raise ResourceLimitError(f"Truncation degree {truncation} exceeds the degree cap {degree_cap}")
    if not gens:
        return GroebnerBasis((), order, ring, truncation)

    ring = gens[0].ring
    if any(g.ring != ring for g in gens):
        raise RingMismatchError("buchberger: generators live in different rings")

    polys = list(gens)
    if truncation is not None and not order.is_local:
        polys.extend(monomial_polynomial(ring, m) for m in monomials_of_degree(ring.ngens, truncation))

    run = _Run(order, truncation, degree_cap)
    initial = _interreduce(polys, order, truncation)
    if not initial:
        return GroebnerBasis((), order, ring, truncation)

    # GROEBNERNEWS2, [BW] page 232; insert by increasing leading monomial
    for p in sorted(initial, key=lambda p: order.key(leading_monomial(p, order))):
        run.update(run.add(p))

    while True:
        pair = run.select()
        if pair is None:
            break
        i, j = pair
        s = spoly(run.f[i], run.f[j], order, truncation)
        h = run.reduce(s, run.G)
        if h:
            run.update(run.add(h))
        else:
            run.reductions_to_zero += 1

    # now G is a Groebner basis; reduce it
    reduced = []
    for ig in sorted(run.G):
        r = run.reduce(run.f[ig], run.G - {ig})
        if r:
            reduced.append(make_monic(r, order))
    reduced.sort(key=lambda p: order.key(leading_monomial(p, order)), reverse=True)
    logger.debug(
        "Buchberger: %d generators -> %d basis elements (%d zero reductions, order=%s, N=%s)",
        len(gens), len(reduced), run.reductions_to_zero, order.name, truncation,
    )
    return GroebnerBasis(tuple(reduced), order, ring, truncation)


def zero_basis(ring: PolyRing, order: MonomialOrder = GREVLEX, truncation: Optional[int] = None) -> GroebnerBasis:
    """Basis of the zero ideal (the empty list)."""
    return GroebnerBasis((), order, ring, truncation)


def groebner_basis(
    ring: PolyRing,
    gens: Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    truncation: Optional[int] = None,
) -> GroebnerBasis:
    """Like ``buchberger`` but well-defined for an empty generator list."""
    return buchberger(gens, order, truncation, ring=ring)


def is_groebner(G: GroebnerBasis) -> bool:
    """Check that every S-polynomial of basis pairs reduces to zero."""
    polys = G.polys
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if normal_form(spoly(polys[i], polys[j], G.order, G.truncation), G):
                return False
    return True


def standard_monomials(G: GroebnerBasis, bound: Optional[int] = None) -> list[Monomial]:
    """
    Monomials outside the leading-term ideal of ``G``.

    Args:
        G: A basis; truncated bases only have standard monomials of degree < N.
        bound: Degree bound for global bases (detected from pure powers if omitted).

    Raises:
        NotZeroDimensionalError: A global basis misses a pure power of some variable.
    """
    ring = G.ring
    n = ring.ngens
    if G.truncation is not None:
        limit = G.truncation if bound is None else min(bound, G.truncation)
    elif bound is not None:
        limit = bound
    else:
        pure = [0] * n
        for lm in G.leads:
            support = [i for i, e in enumerate(lm) if e]
            if len(support) == 1:
                i = support[0]
                pure[i] = lm[i] if not pure[i] else min(pure[i], lm[i])
        if not all(pure) and not G.is_unit():
            raise NotZeroDimensionalError("The quotient is infinite: some variable has no pure power in the ideal")
        limit = sum(e - 1 for e in pure) + 1
    monomial_div = ring.monomial_div
    leads = G.leads

    def standard(m: Monomial) -> bool:
        return all(monomial_div(m, lm) is None for lm in leads)

    found: list[Monomial] = []
    root = ring.zero_monom
    if limit <= 0 or not standard(root):
        return found
    stack = [(root, 0)]
    found.append(root)
    while stack:
        m, start = stack.pop()
        if sum(m) + 1 >= limit:
            continue
        for i in range(start, n):
            child = m[:i] + (m[i] + 1,) + m[i + 1:]
            if standard(child):
                found.append(child)
                stack.append((child, i))
    return found


def eliminate_variables(
    polys: Sequence[Polynomial],
    ring: PolyRing,
    drop: Iterable[str],
) -> tuple[PolyRing, list[Polynomial]]:
    """
    Generators of the ideal intersected with the subring on the kept variables.

    Args:
        polys: Generators in ``ring``.
        ring: Ambient ring.
        drop: Names of variables to eliminate.

    Returns:
        The ring on the remaining variables and the eliminated generators in it.
    """
    names = ring_variables(ring)
    requested = set(drop)
    unknown = requested - set(names)
    if unknown:
        raise InputError(f"Cannot eliminate unknown variables {sorted(unknown)}")
    drop = [name for name in names if name in requested]
    keep = [name for name in names if name not in requested]
    if not keep:
        raise InputError("Cannot eliminate every variable")
    descriptor = ring_descriptor(ring)
    keep_ring = polynomial_ring(tuple(keep), descriptor)
    if not drop:
        return keep_ring, [p for p in groebner_basis(ring, polys)]

    work_ring = polynomial_ring(tuple(drop + keep), descriptor)
    positions = [(drop + keep).index(name) for name in names]
    lifted = [rebase(p, work_ring, positions) for p in polys]
    k = len(drop)
    G = groebner_basis(work_ring, lifted, elimination_order(k))
    kept = [
        keep_ring.dtype([(m[k:], c) for m, c in g.items()])
        for g in G.polys
        if all(not any(m[:k]) for m in g.keys())
    ]
    return keep_ring, kept


def standard_basis(
    gens: Sequence[Polynomial],
    order: MonomialOrder,
    truncation: int,
    ring: Optional[PolyRing] = None,
) -> GroebnerBasis:
    """
    Standard basis of the ideal modulo M^truncation.

    With a local order this is a standard basis of the ideal in the
    localization at the origin, up to terms of degree >= ``truncation``.
    """
    return buchberger(gens, order, truncation, ring=ring)


def reduce_basis(
    polys: Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    truncation: Optional[int] = None,
) -> list[Polynomial]:
    """Interreduce a list: monic, no term divisible by another leading monomial."""
    current = _interreduce(list(polys), order, truncation)
    current = _interreduce(current, order, truncation, full=True)
    return sorted(current, key=lambda p: order.key(leading_monomial(p, order)), reverse=True)
