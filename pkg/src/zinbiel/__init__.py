"""Exact computations with symmetric Zinbiel superalgebras over the rationals."""

from .errors import (DimensionError, GradingError, ParseError, PreconditionError, TheoremContradiction,
                     UnsupportedIdentity, Verdict, ZinbielError)
from .superalgebra import Element, SuperAlgebra, parse, parse_with_form, serialize

__all__ = [
    "DimensionError", "Element", "GradingError", "ParseError", "PreconditionError", "SuperAlgebra",
    "TheoremContradiction", "UnsupportedIdentity", "Verdict", "ZinbielError", "parse", "parse_with_form",
    "serialize",
]
