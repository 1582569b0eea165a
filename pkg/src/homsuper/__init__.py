"""Exact verification of Hom-associative and Hom-Lie superalgebra identities."""

__version__ = "0.1.0"
