import json

import pytest

from sallykit.documents import (
    document_ideal,
    document_ring,
    load_ring_document,
    parse_ring_document,
    print_ring_document,
)
from sallykit.errors import DocumentError, InputError, ParseError
from sallykit.family import build_family, family_spec


def test_minimal_document():
    doc = parse_ring_document('{"variables": ["x"]}')
    assert doc.field == "rational"
    assert doc.relations == []
    assert doc.ideals == {}


def test_relation_with_constant_term():
    text = '{\n  "variables": ["x", "y"],\n  "relations": ["y^2 + 1"]\n}'
    with pytest.raises(ParseError) as exc:
        parse_ring_document(text)
    assert (exc.value.line, exc.value.column) == (3, 18)


def test_unknown_variable_position():
    text = '{\n  "variables": ["x", "y"],\n  "ideals": {"I": ["x + w"]}\n}'
    with pytest.raises(ParseError) as exc:
        parse_ring_document(text)
    assert (exc.value.line, exc.value.column) == (3, 25)
    assert "ideal I" in exc.value.reason


def test_malformed_json():
    with pytest.raises(ParseError) as exc:
        parse_ring_document('{"variables": ["x"],\n')
    assert exc.value.line == 2


@pytest.mark.parametrize(
    "payload",
    [
        {"variables": ["x"], "extra": 1},
        {"variables": []},
        {"variables": ["x", "x"]},
        {"variables": ["2x"]},
        {"relations": ["x"]},
    ],
)
def test_structural_errors(payload):
    with pytest.raises(DocumentError):
        parse_ring_document(json.dumps(payload))


def test_unknown_field():
    with pytest.raises(InputError):
        parse_ring_document('{"field": "complex", "variables": ["x"]}')


def test_printed_family_parses_back():
    printed = print_ring_document(build_family(family_spec(0, 2)))
    assert print_ring_document(parse_ring_document(printed)) == printed


def test_load_and_build(plane_document):
    doc = load_ring_document(plane_document)
    ring = document_ring(doc, field="prime:7")
    assert ring.is_prime_field
    assert document_ideal(ring, doc, "M2").label == "M2"
    with pytest.raises(DocumentError):
        document_ideal(ring, doc, "J")


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        load_ring_document(str(tmp_path / "absent.json"))
