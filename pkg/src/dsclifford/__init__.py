"""Clifford-algebra toolkit for spinor fields on de Sitter space.

Exact (rational) and float multivectors over arbitrary diagonal signatures,
the spacetime and five-dimensional bulk algebras, a matrix representation,
the projective chart of the de Sitter pseudo-sphere, polynomial field
operators and a verification harness with a command-line front end.
"""
from .multivector import (ModeError, Multivector, exp_bivector, geometric_product, grade,
                          hodge_star, hodge_star_inv, left_contraction, parse, pseudoscalar,
                          reversion, scalar_product, wedge)
from .signature import BULK, MINKOWSKI, PAULI, Signature

__version__ = "0.1.0"

__all__ = [
    "BULK", "MINKOWSKI", "PAULI", "ModeError", "Multivector", "Signature", "exp_bivector",
    "geometric_product", "grade", "hodge_star", "hodge_star_inv", "left_contraction", "parse",
    "pseudoscalar", "reversion", "scalar_product", "wedge",
]
