"""Exact subpower numbers n^{m} (surjection counts) and their related families."""
from .core import (
    SubpowerTable,
    binomial,
    factorial,
    stirling_set,
    subfactorial,
    subpower,
    subpower_diagonal,
    subpower_table,
)
from .transforms import IntSequence, binomial_transform, inverse_binomial_transform

__version__ = "0.1.0"

__all__ = [
    "SubpowerTable",
    "IntSequence",
    "binomial",
    "factorial",
    "stirling_set",
    "subfactorial",
    "subpower",
    "subpower_diagonal",
    "subpower_table",
    "binomial_transform",
    "inverse_binomial_transform",
]
