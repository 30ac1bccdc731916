"""Binomial transform and its inverse over exact finite sequences."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

Exact = Union[int, Fraction]

__all__ = ["IntSequence", "binomial_transform", "inverse_binomial_transform"]


@dataclass(frozen=True)
class IntSequence:
    """Finite run of exact values; ``values[i]`` is the term at index ``offset + i``."""

    offset: int
    values: Tuple[Exact, ...]

    def __init__(self, values: Sequence[Exact], offset: int = 0):
        if offset < 0:
            raise ValueError("offset must be natural")
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "values", tuple(values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)


def _check(seq: IntSequence) -> None:
    if seq.offset != 0:
        raise ValueError(f"binomial transform needs offset 0, got {seq.offset}")
    if not seq.values:
        raise ValueError("binomial transform of an empty sequence")


def binomial_transform(a: IntSequence) -> IntSequence:
    """``b_n = sum_k C(n, k) a_k``; same length as ``a``."""
    _check(a)
    vals = a.values
    return IntSequence(
        [sum(math.comb(n, k) * vals[k] for k in range(n + 1)) for n in range(len(vals))]
    )


def inverse_binomial_transform(b: IntSequence) -> IntSequence:
    """``a_n = sum_k (-1)^(n-k) C(n, k) b_k``; undoes :func:`binomial_transform`."""
    _check(b)
    vals = b.values
    return IntSequence(
        [
            sum((-1) ** (n - k) * math.comb(n, k) * vals[k] for k in range(n + 1))
            for n in range(len(vals))
        ]
    )
