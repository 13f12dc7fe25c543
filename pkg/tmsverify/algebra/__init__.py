"""Exact sparse Laurent polynomial arithmetic in u, v, q."""

from tmsverify.algebra.laurent import (
    ONE,
    Q,
    U,
    UV,
    UVQ,
    V,
    ZERO,
    Exponent,
    LaurentPoly,
    add,
    evaluate,
    mul,
    neg,
    power,
    rhl_transform,
    scale,
    specialize_q,
    sub,
    substitute_scaled,
)
from tmsverify.algebra.text import from_sympy, parse, pretty, serialize, to_sympy

__all__ = [
    "ONE",
    "Q",
    "U",
    "UV",
    "UVQ",
    "V",
    "ZERO",
    "Exponent",
    "LaurentPoly",
    "add",
    "evaluate",
    "from_sympy",
    "mul",
    "neg",
    "parse",
    "power",
    "pretty",
    "rhl_transform",
    "scale",
    "serialize",
    "specialize_q",
    "sub",
    "substitute_scaled",
    "to_sympy",
]
