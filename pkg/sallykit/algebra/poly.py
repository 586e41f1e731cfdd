"""
Exact multivariate polynomials over Q or a prime field.

Polynomials are sympy ``PolyElement`` values (a dict from exponent tuples
to domain scalars) living in a ``PolyRing`` built once per variable list
and field. The ring's own ordering is never consulted: every operation
that needs a leading term takes an explicit ``MonomialOrder``.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Union

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from sallykit.errors import InputError, RingMismatchError, ZeroPolynomialError

logger = logging.getLogger(__name__)

Polynomial = PolyElement
Monomial = tuple[int, ...]
FieldScalar = object  # QQ or GF(p) domain element

RATIONAL = "rational"


def make_field(descriptor: str) -> Domain:
    """
    Build the coefficient field named by a descriptor.

    Args:
        descriptor: "rational" or "prime:<p>".

    Returns:
        QQ, or GF(p) with canonical representatives 0 <= v < p.

    Raises:
        InputError: Unknown descriptor or composite modulus.
    """
    if descriptor == RATIONAL:
        return QQ
    if descriptor.startswith("prime:"):
        try:
            p = int(descriptor.split(":", 1)[1])
        except ValueError:
            raise InputError(f"Malformed field descriptor {descriptor!r}") from None
        if not isprime(p):
            raise InputError(f"Field modulus {p} is not prime")
        return GF(p, symmetric=False)
    raise InputError(f"Unknown field descriptor {descriptor!r}; use 'rational' or 'prime:<p>'")


def is_prime_field(domain: Domain) -> bool:
    """True for GF(p) coefficient fields."""
    return domain.is_FiniteField


@lru_cache(maxsize=256)
def polynomial_ring(variables: tuple[str, ...], descriptor: str = RATIONAL) -> PolyRing:
    """Get the (cached) polynomial ring over the given variables and field."""
    if not variables:
        raise InputError("A polynomial ring needs at least one variable")
    return PolyRing(list(variables), make_field(descriptor), lex)


def ring_variables(ring: PolyRing) -> tuple[str, ...]:
    """Variable names of a ring, in order."""
    return tuple(str(symbol) for symbol in ring.symbols)


def ring_descriptor(ring: PolyRing) -> str:
    """Field descriptor of a ring ("rational" or "prime:<p>")."""
    if is_prime_field(ring.domain):
        return f"prime:{ring.domain.characteristic()}"
    return RATIONAL


def monomial_degree(monom: Monomial) -> int:
    return sum(monom)


def _grevlex_tail(monom: Monomial) -> tuple[int, ...]:
    return tuple(-e for e in reversed(monom))


@dataclass(frozen=True)
class MonomialOrder:
    """
    A monomial order, given as a sort key (larger key = larger monomial).

    Global orders: ``lex``, ``grevlex`` and ``block`` (lex on the first
    ``block`` variables, grevlex on the rest). Local orders ``negdegrevlex``
    and ``negdeglex`` rank lower total degree first; they are only used
    modulo a power of the maximal ideal, where they behave as well-orders.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in _ORDER_KEYS:
            raise InputError(f"Unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.block < 1:
            raise InputError("Elimination block must contain at least one variable")

    @property
    def key(self) -> Callable[[Monomial], tuple]:
        if self.kind == "block":
            k = self.block
            return lambda m: (m[:k], sum(m[k:]), _grevlex_tail(m[k:]))
        return _ORDER_KEYS[self.kind]

    @property
    def is_local(self) -> bool:
        return self.kind.startswith("negdeg")

    @property
    def name(self) -> str:
        return f"block:{self.block}" if self.kind == "block" else self.kind

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        """Parse an order name such as "grevlex" or "block:2"."""
        if text.startswith("block:"):
            return cls("block", int(text.split(":", 1)[1]))
        return cls(text)


_ORDER_KEYS: dict[str, Callable[[Monomial], tuple]] = {
    "lex": lambda m: m,
    "grevlex": lambda m: (sum(m), _grevlex_tail(m)),
    "block": lambda m: m,
    "negdegrevlex": lambda m: (-sum(m), _grevlex_tail(m)),
    "negdeglex": lambda m: (-sum(m), m),
}

LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")
NEGDEGREVLEX = MonomialOrder("negdegrevlex")
NEGDEGLEX = MonomialOrder("negdeglex")


def elimination_order(k: int) -> MonomialOrder:
    """Block order eliminating the first ``k`` variables."""
    return MonomialOrder("block", k)


def _check_same_ring(f: Polynomial, g: Polynomial) -> None:
    if f.ring != g.ring:
        raise RingMismatchError(
            f"Operands live in different rings: {ring_variables(f.ring)} over "
            f"{ring_descriptor(f.ring)} vs {ring_variables(g.ring)} over {ring_descriptor(g.ring)}"
        )


def poly_arith(op: str, f: Polynomial, g: Union[Polynomial, FieldScalar, int]) -> Polynomial:
    """
    Exact ring arithmetic.

    Args:
        op: "add", "sub", "mul" or "scale".
        f: Left operand.
        g: Right operand; a polynomial for add/sub/mul, a scalar for scale.

    Returns:
        The canonical result.
    """
    if op == "scale":
        if isinstance(g, PolyElement):
            raise InputError("scale expects a field scalar, not a polynomial")
        return f.mul_ground(f.ring.domain.convert(g))
    if not isinstance(g, PolyElement):
        raise InputError(f"{op} expects two polynomials")
    _check_same_ring(f, g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise InputError(f"Unknown polynomial operation {op!r}")


def leading_term(f: Polynomial, order: MonomialOrder = GREVLEX) -> tuple[Monomial, FieldScalar]:
    """The order-maximal term of a nonzero polynomial."""
    if not f:
        raise ZeroPolynomialError("The zero polynomial has no leading term")
    monom = max(f.keys(), key=order.key)
    return monom, f[monom]


def leading_monomial(f: Polynomial, order: MonomialOrder = GREVLEX) -> Monomial:
    return leading_term(f, order)[0]


def sorted_terms(f: Polynomial, order: MonomialOrder = GREVLEX) -> list[tuple[Monomial, FieldScalar]]:
    """Terms in strictly descending order."""
    return sorted(f.items(), key=lambda term: order.key(term[0]), reverse=True)


def make_monic(f: Polynomial, order: MonomialOrder) -> Polynomial:
    """Divide by the leading coefficient under ``order``."""
    _, coeff = leading_term(f, order)
    return f.quo_ground(coeff)


def total_degree(f: Polynomial) -> int:
    """Largest total degree of a term (-1 for zero)."""
    return max((sum(m) for m in f.keys()), default=-1)


def adic_order(f: Polynomial) -> int:
    """Smallest total degree of a term, i.e. the maximal-ideal-adic order."""
    if not f:
        raise ZeroPolynomialError("The zero polynomial has infinite order")
    return min(sum(m) for m in f.keys())


def initial_form(f: Polynomial) -> Polynomial:
    """Lowest-degree homogeneous part."""
    low = adic_order(f)
    return f.new([(m, c) for m, c in f.items() if sum(m) == low])


def truncate(f: Polynomial, degree: int) -> Polynomial:
    """Drop every term of total degree >= ``degree``."""
    return f.new([(m, c) for m, c in f.items() if sum(m) < degree])


def is_monomial(f: Polynomial) -> bool:
    return len(f) == 1


def has_constant_term(f: Polynomial) -> bool:
    return f.ring.zero_monom in f


def monomial_polynomial(ring: PolyRing, monom: Monomial) -> Polynomial:
    return ring.dtype([(tuple(monom), ring.domain.one)])


def monomials_of_degree(nvars: int, degree: int) -> Iterable[Monomial]:
    """All exponent vectors of the given total degree."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


def rebase(f: Polynomial, target: PolyRing, positions: list[int]) -> Polynomial:
    """
    Move a polynomial into another ring.

    Args:
        f: Source polynomial.
        target: Destination ring.
        positions: ``positions[i]`` is the index in ``target`` of source variable ``i``.
    """
    width = target.ngens
    terms = []
    for monom, coeff in f.items():
        exps = [0] * width
        for i, e in enumerate(monom):
            if e:
                exps[positions[i]] = e
        terms.append((tuple(exps), target.domain.convert(coeff, f.ring.domain)))
    return target.dtype(terms)


def format_scalar(coeff: FieldScalar, domain: Domain) -> str:
    if is_prime_field(domain):
        return str(int(coeff))
    numer, denom = domain.numer(coeff), domain.denom(coeff)
    return f"{numer}" if denom == 1 else f"{numer}/{denom}"


def format_monomial(monom: Monomial, names: tuple[str, ...]) -> str:
    factors = []
    for name, e in zip(names, monom):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_poly(f: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    """
    Canonical text form, parseable by ``sallykit.algebra.parser``.

    Terms appear in descending ``order``; coefficients 1 are omitted and a
    negative rational coefficient is written with a leading minus sign.
    """
    if not f:
        return "0"
    names = ring_variables(f.ring)
    domain = f.ring.domain
    pieces = []
    for monom, coeff in sorted_terms(f, order):
        negative = not is_prime_field(domain) and coeff < 0
        text = format_scalar(-coeff if negative else coeff, domain)
        body = format_monomial(monom, names)
        if body:
            text = body if text == "1" else f"{text}*{body}"
        if not pieces:
            pieces.append(f"-{text}" if negative else text)
        else:
            pieces.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(pieces)
