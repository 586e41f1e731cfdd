"""
Ring documents: the JSON input format describing a presented ring and
named ideals.

    {
      "field": "rational",
      "variables": ["x", "y"],
      "relations": [],
      "ideals": {"I": ["x", "y"], "Q": ["x", "y"]}
    }

Every expression is parsed against the declared variables; a parse failure
is reported at its line and column in the document text.
"""

import json
import logging
import re
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from sallykit.algebra.ideals import IdealHandle, RingPresentation
from sallykit.algebra.parser import parse_polynomial
from sallykit.algebra.poly import format_poly, has_constant_term, polynomial_ring
from sallykit.errors import DocumentError, InputError, ParseError

logger = logging.getLogger(__name__)

_IDENTIFIER = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


class RingDocument(BaseModel):
    """A presented ring D/a with named ideals."""

    model_config = ConfigDict(extra="forbid")

    field: str = Field(default="rational", description='Coefficient field: "rational" or "prime:<p>".')
    variables: list[str] = Field(description="Ordered variable names of the polynomial ring D.")
    relations: list[str] = Field(default_factory=list, description="Generators of the relation ideal a.")
    ideals: dict[str, list[str]] = Field(default_factory=dict, description="Ideal name -> generator expressions.")


def _position(text: str, expr: str, column: int, start: int = 0) -> tuple[int, int, int]:
    """Line/column in ``text`` of column ``column`` of the string literal ``expr``."""
    literal = json.dumps(expr)
    pos = text.find(literal, start)
    if pos < 0:
        return 1, column, start
    offset = pos + 1 + column - 1
    line = text.count("\n", 0, offset) + 1
    line_start = text.rfind("\n", 0, offset) + 1
    return line, offset - line_start + 1, pos + len(literal)


def _validate_variables(variables: list[str]) -> None:
    if not variables:
        raise DocumentError("A ring document needs at least one variable")
    for name in variables:
        if not _IDENTIFIER.match(name):
            raise DocumentError(f"Invalid variable name {name!r}")
    if len(set(variables)) != len(variables):
        raise DocumentError("Duplicate variable names")


def parse_ring_document(text: str) -> RingDocument:
    """
    Parse and validate a ring document.

    Raises:
        ParseError: Malformed JSON, a malformed expression, an unknown
            variable or a relation with a nonzero constant term, with the
            line and column in ``text``.
        DocumentError: Structurally invalid document.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from None
    try:
        doc = RingDocument.model_validate(raw)
    except ValidationError as e:
        raise DocumentError(f"Invalid ring document: {e.errors()[0]['msg']} at {e.errors()[0]['loc']}") from None
    _validate_variables(doc.variables)
    ring = polynomial_ring(tuple(doc.variables), doc.field)

    cursor = max(0, text.find('"relations"'))
    for expr in doc.relations:
        try:
            relation = parse_polynomial(expr, ring)
        except ParseError as e:
            line, column, _ = _position(text, expr, e.column, cursor)
            raise ParseError(e.reason, line=line, column=column) from None
        line, column, cursor = _position(text, expr, 1, cursor)
        if relation and has_constant_term(relation):
            raise ParseError("relation has nonzero constant term", line=line, column=column)
    for name, exprs in doc.ideals.items():
        cursor = max(0, text.find(json.dumps(name), max(0, text.find('"ideals"'))))
        for expr in exprs:
            try:
                parse_polynomial(expr, ring)
            except ParseError as e:
                line, column, _ = _position(text, expr, e.column, cursor)
                raise ParseError(f"ideal {name}: {e.reason}", line=line, column=column) from None
            _, _, cursor = _position(text, expr, 1, cursor)
    logger.debug("Parsed ring document: %d variables, %d relations", len(doc.variables), len(doc.relations))
    return doc


def load_ring_document(path: str) -> RingDocument:
    """Read and parse a ring document from a file."""
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise InputError(f"Cannot read ring document {path}: {e.strerror}") from None
    return parse_ring_document(text)


def print_ring_document(doc: RingDocument) -> str:
    """Canonical JSON text: every expression rewritten by ``format_poly``."""
    ring = polynomial_ring(tuple(doc.variables), doc.field)

    def canonical(expr: str) -> str:
        return format_poly(parse_polynomial(expr, ring))

    payload = {
        "field": doc.field,
        "variables": list(doc.variables),
        "relations": [canonical(e) for e in doc.relations],
        "ideals": {name: [canonical(e) for e in exprs] for name, exprs in doc.ideals.items()},
    }
    return json.dumps(payload, indent=2)


def document_ring(
    doc: RingDocument,
    field: Optional[str] = None,
    expected_dimension: Optional[int] = None,
    name: str = "",
) -> RingPresentation:
    """
    Build the ring presentation of a document.

    Args:
        doc: Parsed document.
        field: Optional field override (e.g. "prime:32003").
        expected_dimension: Krull dimension to cross-check, if known.
        name: Label for reports.
    """
    return RingPresentation.from_strings(
        doc.variables,
        doc.relations,
        field or doc.field,
        expected_dimension=expected_dimension,
        name=name,
    )


def document_ideal(ring: RingPresentation, doc: RingDocument, name: str) -> IdealHandle:
    """The named ideal of a document, over ``ring``."""
    if name not in doc.ideals:
        raise DocumentError(f"Document has no ideal named {name!r}; known: {sorted(doc.ideals)}")
    return ring.ideal_from_strings(doc.ideals[name], label=name)
