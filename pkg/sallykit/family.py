"""
Generator for the example family of Cohen-Macaulay rings whose maximal
ideal m has e_1(m) = e_0(m) + ℓ(m^2/Qm) and ℓ(m^3/Qm^2) = c.

For c = d the ring is D/a with D = k[x_1..x_m, y, v_1..v_d, z_1..z_d] and

    a = (x_j, y)(x_j, y, v_i) + (v_i v_j : i ≠ j) + (v_i^3 - z_i y)

with Q = (z_1..z_d). For c < d the c-dimensional ring gets d - c fresh
variables w_1..w_{d-c}, added to both m and Q.
"""

import logging
from typing import Optional

from pydantic import BaseModel, Field, ValidationError, model_validator

from sallykit.algebra.hilbert import binomial
from sallykit.algebra.sally import case_label
from sallykit.documents import RingDocument
from sallykit.errors import InputError

logger = logging.getLogger(__name__)


class FamilySpec(BaseModel):
    """Parameters of one member of the family."""

    m: int = Field(ge=0, description="Number of extra variables x_j annihilated by the maximal ideal's square.")
    d: int = Field(ge=1, description="Krull dimension of the generated ring.")
    c: Optional[int] = Field(default=None, description="ℓ(m^3/Qm^2); defaults to d.")
    field: str = Field(default="rational", description='Coefficient field: "rational" or "prime:<p>".')

    @model_validator(mode="after")
    def _check_c(self) -> "FamilySpec":
        if self.c is None:
            self.c = self.d
        if not 1 <= self.c <= self.d:
            raise ValueError(f"c must satisfy 1 <= c <= d, got c={self.c}, d={self.d}")
        return self

    @property
    def label(self) -> str:
        return f"family(m={self.m},d={self.d},c={self.c})"


def family_spec(m: int, d: int, c: Optional[int] = None, field: str = "rational") -> FamilySpec:
    """Validated FamilySpec; bad parameters raise InputError."""
    try:
        return FamilySpec(m=m, d=d, c=c, field=field)
    except ValidationError as e:
        raise InputError(f"Invalid family parameters: {e.errors()[0]['msg']}") from None


def _product(a: str, b: str, order: dict[str, int]) -> str:
    if a == b:
        return f"{a}^2"
    first, second = sorted((a, b), key=order.__getitem__)
    return f"{first}*{second}"


def _base_document(m: int, d: int, field: str) -> RingDocument:
    xs = [f"x{j}" for j in range(1, m + 1)]
    vs = [f"v{i}" for i in range(1, d + 1)]
    zs = [f"z{i}" for i in range(1, d + 1)]
    variables = xs + ["y"] + vs + zs
    order = {name: k for k, name in enumerate(variables)}

    relations: list[str] = []
    for a in xs + ["y"]:
        for b in xs + ["y"] + vs:
            product = _product(a, b, order)
            if product not in relations:
                relations.append(product)
    relations += [f"{vs[i]}*{vs[j]}" for i in range(d) for j in range(i + 1, d)]
    relations += [f"{v}^3 - {z}*y" for v, z in zip(vs, zs)]
    return RingDocument(
        field=field,
        variables=variables,
        relations=relations,
        ideals={"I": list(variables), "Q": list(zs)},
    )


def build_family(spec: FamilySpec) -> RingDocument:
    """
    The ring document for ``spec``, with ideals "I" (the maximal ideal)
    and "Q" (its minimal reduction).
    """
    doc = _base_document(spec.m, spec.c, spec.field)
    extra = [f"w{k}" for k in range(1, spec.d - spec.c + 1)]
    if extra:
        doc = RingDocument(
            field=doc.field,
            variables=doc.variables + extra,
            relations=doc.relations,
            ideals={"I": doc.ideals["I"] + extra, "Q": doc.ideals["Q"] + extra},
        )
    logger.info("Built %s: %d variables, %d relations", spec.label, len(doc.variables), len(doc.relations))
    return doc


def closed_form_numerator(m: int, c: int) -> list[int]:
    """
    h(z) = 1 + (m+c+1) z + Σ_{j=3}^{c+2} (-1)^{j-1} C(c+1, j-1) z^j.

    Adjoining the fresh variables w_k to both m and Q leaves the numerator
    of the c-dimensional member unchanged.
    """
    return [1, m + c + 1, 0] + [(-1) ** (j - 1) * binomial(c + 1, j - 1) for j in range(3, c + 3)]


def expected_invariants(spec: FamilySpec) -> dict[str, object]:
    """
    Closed-form invariants of the maximal ideal of a family member.

    e_0 = m+2c+2, e_1 = m+3c+2, ℓ(A/Q) = e_0, ℓ(m^2/Qm) = ℓ(m^3/Qm^2) = c.
    The numerator comes from ``closed_form_numerator`` and e_i = Σ_j C(j, i) h_j.
    Equality HP(n) = ℓ(A/m^{n+1}) starts at n = max(0, c + 2 - d), the
    degree of h(z) minus d.
    """
    m, d, c = spec.m, spec.d, spec.c
    numerator = closed_form_numerator(m, c)
    coefficients = [sum(h_j * binomial(j, i) for j, h_j in enumerate(numerator)) for i in range(d + 1)]
    return {
        "e0": m + 2 * c + 2,
        "e1": m + 3 * c + 2,
        "coefficients": coefficients,
        "numerator": numerator,
        "colength_Q": m + 2 * c + 2,
        "sally_first": c,
        "c": c,
        "postulation": max(0, c + 2 - d),
        "case": "c=d" if c == d else ("c=1<d" if c == 1 else "2<=c<d"),
        "case_label": case_label(c, d),
    }
