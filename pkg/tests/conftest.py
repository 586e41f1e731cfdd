"""Shared fixtures: the regular plane and members of the example family."""

import json

import pytest

from sallykit.algebra.ideals import RingPresentation, ideal_power
from sallykit.config_loader import reset_config
from sallykit.documents import document_ideal, document_ring
from sallykit.family import build_family, family_spec


@pytest.fixture(autouse=True)
def _fresh_config(monkeypatch):
    for var in ("SALLYKIT_DEGREE_CAP", "SALLYKIT_N_MAX", "SALLYKIT_TRACKING_URI"):
        monkeypatch.delenv(var, raising=False)
    reset_config()
    yield
    reset_config()


@pytest.fixture
def plane():
    """k[x, y] localized at the origin."""
    return RingPresentation.from_strings(["x", "y"])


@pytest.fixture
def plane_m(plane):
    return plane.maximal_ideal()


@pytest.fixture
def plane_m2(plane, plane_m):
    return ideal_power(plane_m, 2)


@pytest.fixture
def plane_q(plane):
    """(x^2, y^2), a minimal reduction of m^2."""
    return plane.ideal_from_strings(["x^2", "y^2"])


def _family(m, d, c=None):
    spec = family_spec(m, d, c)
    doc = build_family(spec)
    ring = document_ring(doc, expected_dimension=spec.d, name=spec.label)
    return ring, document_ideal(ring, doc, "I"), document_ideal(ring, doc, "Q")


@pytest.fixture(scope="session")
def family01():
    return _family(0, 1)


@pytest.fixture(scope="session")
def family02():
    return _family(0, 2)


@pytest.fixture(scope="session")
def family021():
    return _family(0, 2, 1)


@pytest.fixture(scope="session")
def family133():
    return _family(1, 3, 3)


@pytest.fixture
def write_document(tmp_path):
    """Write a ring document to a file and return its path."""

    def write(payload, name="ring.json"):
        path = tmp_path / name
        path.write_text(payload if isinstance(payload, str) else json.dumps(payload, indent=2))
        return str(path)

    return write


@pytest.fixture
def plane_document(write_document):
    return write_document(
        {
            "field": "rational",
            "variables": ["x", "y"],
            "relations": [],
            "ideals": {"I": ["x", "y"], "Q": ["x", "y"], "M2": ["x^2", "x*y", "y^2"], "P": ["x^2", "y^2"]},
        }
    )
