"""Finite workbench for Nagata products, twist products and bimonoids of fractions.

Every structure is a set of integer tables over dense indices, and every
law is checked by exhaustive scan, returning a CheckReport that names the
axiom and, on failure, a concrete witness.
"""

from .errors import WorkbenchError
from .report import CheckReport

__version__ = "0.1.0"

__all__ = ["CheckReport", "WorkbenchError", "__version__"]
