"""
Exact Rational Linear Algebra
RREF, null spaces, solves and inverses over fractions.Fraction
"""

from .rational import (
    Rational,
    QVector,
    QMatrix,
    to_rational,
    format_rational,
    parse_rational,
)
from .elimination import (
    rref,
    nullspace_basis,
    rank_nullity,
    rank,
    solve,
    inverse,
    determinant,
    adjugate,
)

__all__ = [
    "Rational",
    "QVector",
    "QMatrix",
    "to_rational",
    "format_rational",
    "parse_rational",
    "rref",
    "nullspace_basis",
    "rank_nullity",
    "rank",
    "solve",
    "inverse",
    "determinant",
    "adjugate",
]
