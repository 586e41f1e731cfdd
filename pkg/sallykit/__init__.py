"""
sallykit: Hilbert coefficients, Sally modules and Ratliff-Rush closures of
ideals primary to the maximal ideal of a presented local ring.
"""

from .cli import run_command
from .documents import RingDocument, load_ring_document, parse_ring_document, print_ring_document
from .errors import ComputationError, InputError, SallyKitError
from .family import FamilySpec, build_family, expected_invariants, family_spec

__all__ = [
    "ComputationError",
    "FamilySpec",
    "InputError",
    "RingDocument",
    "SallyKitError",
    "build_family",
    "expected_invariants",
    "family_spec",
    "load_ring_document",
    "parse_ring_document",
    "print_ring_document",
    "run_command",
]
