"""Exact computations with ghost cluster tilting objects in small triangulated categories."""

from .bridge import THEOREMS, VerificationReport, phi, phi_inverse, verify, verify_many
from .homcat import CategoryError, CategoryTable, validate
from .tricat import TriangCategory, enumerate_basic, ghost_report, validate_triang

__version__ = "0.1.0"

__all__ = [
    "CategoryError",
    "CategoryTable",
    "THEOREMS",
    "TriangCategory",
    "VerificationReport",
    "enumerate_basic",
    "ghost_report",
    "phi",
    "phi_inverse",
    "validate",
    "validate_triang",
    "verify",
    "verify_many",
]
