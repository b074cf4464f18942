from .radicals import RadicalSum, SqrtRational, squarefree_decompose
from .simplex import (
    Point,
    add,
    composition,
    d1,
    enumerate_simplex,
    generalized_binomial,
    multinomial,
    multinomial_ratio_check,
    simplex_index,
    simplex_size,
    sub,
    unit,
    vandermonde_identity_check,
)

__all__ = [
    "Point",
    "RadicalSum",
    "SqrtRational",
    "add",
    "composition",
    "d1",
    "enumerate_simplex",
    "generalized_binomial",
    "multinomial",
    "multinomial_ratio_check",
    "simplex_index",
    "simplex_size",
    "squarefree_decompose",
    "sub",
    "unit",
    "vandermonde_identity_check",
]
