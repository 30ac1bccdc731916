"""Exact integer kernels: binomials, factorials, subpowers, Stirling set numbers.

The subpower ``n^{m}`` is the number of surjections from an m-set onto an
n-set.  Everything here works on Python integers, so values never overflow.

The combinatorial convention ``n^{0} = 1 if n == 0 else 0`` is used
throughout this module.  The analytic convention (``0^z = 0``) lives in
:mod:`subpowers.analytic` only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

__all__ = [
    "SubpowerTable",
    "binomial",
    "factorial",
    "subpower",
    "subpower_table",
    "stirling_set",
    "subfactorial",
    "subpower_diagonal",
    "METHODS",
]

METHODS = ("sum", "recurrence", "stirling")


def binomial(n: int, k: int) -> int:
    """C(n, k) for naturals; 0 when k > n."""
    return math.comb(n, k)


def factorial(n: int) -> int:
    return math.factorial(n)


@dataclass(frozen=True)
class SubpowerTable:
    """Immutable triangle of ``n^{m}`` for ``0 <= n <= m <= max_m``.

    ``rows[m]`` holds the m+1 entries ``0^{m}, 1^{m}, ..., m^{m}``.  Entries
    with ``n > m`` are zero and are not stored.
    """

    max_m: int
    rows: Tuple[Tuple[int, ...], ...]

    def entry(self, m: int, n: int) -> int:
        if m < 0 or m > self.max_m:
            raise IndexError(f"row m={m} outside table 0..{self.max_m}")
        if n < 0:
            raise IndexError(f"column n={n} is negative")
        if n > m:
            return 0
        return self.rows[m][n]

    def row(self, m: int) -> Tuple[int, ...]:
        return self.rows[m]

    def __len__(self) -> int:
        return len(self.rows)


def subpower_table(max_m: int) -> SubpowerTable:
    """Fill the triangle row by row with ``n^{m} = n (n^{m-1} + (n-1)^{m-1})``.

    Seeds: ``0^{0} = 1`` and ``0^{m} = n^{0} = 0`` for ``m, n >= 1``.
    """
    if max_m < 0:
        raise ValueError("max_m must be a natural number")
    rows = [(1,)]
    for m in range(1, max_m + 1):
        prev = rows[-1]
        row = [0] * (m + 1)
        for n in range(1, m + 1):
            upper = prev[n] if n < m else 0
            row[n] = n * (upper + prev[n - 1])
        rows.append(tuple(row))
    return SubpowerTable(max_m, tuple(rows))


def _subpower_sum(n: int, m: int) -> int:
    # alternating sum over all k, including k = 0 where Python gives 0**0 == 1
    return sum((-1) ** (n - k) * math.comb(n, k) * k**m for k in range(n + 1))


def _subpower_recurrence(n: int, m: int) -> int:
    if n > m:
        return 0
    # column-limited rows of the triangle; only entries 0..n are needed
    row = [1] + [0] * n
    for mm in range(1, m + 1):
        new = [0] * (n + 1)
        for j in range(1, min(mm, n) + 1):
            new[j] = j * (row[j] + row[j - 1])
        row = new
    return row[n]


def _stirling2(m: int, n: int) -> int:
    """Stirling set number from its own triangle recurrence.

    Kept separate from the subpower kernels so that the ``stirling`` method
    is an independent route.
    """
    if n > m:
        return 0
    row = [1] + [0] * n
    for mm in range(1, m + 1):
        new = [0] * (n + 1)
        for j in range(1, min(mm, n) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[n]


def subpower(n: int, m: int, method: str = "recurrence") -> int:
    """Number of surjections from an m-set onto an n-set.

    ``method`` picks one of three independent algorithms: ``"sum"`` (the
    alternating binomial sum), ``"recurrence"`` and ``"stirling"``
    (``n! * S(m, n)``).  All three return identical values.
    """
    if n < 0 or m < 0:
        raise ValueError("subpower is defined for natural n and m")
    if method == "sum":
        return _subpower_sum(n, m)
    if method == "recurrence":
        return _subpower_recurrence(n, m)
    if method == "stirling":
        return math.factorial(n) * _stirling2(m, n)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def stirling_set(m: int, n: int) -> int:
    """Stirling number of the second kind, computed as ``n^{m} / n!``."""
    q, r = divmod(subpower(n, m), math.factorial(n))
    if r:
        raise ArithmeticError(f"subpower({n}, {m}) not divisible by {n}!")
    return q


def subfactorial(n: int) -> int:
    """Number of derangements of n objects."""
    return sum((-1) ** (n - k) * math.comb(n, k) * math.factorial(k) for k in range(n + 1))


def subpower_diagonal(n: int, offset: int) -> int:
    """Closed forms for ``n^{n+offset}`` with offset 0, 1 or 2."""
    if offset == 0:
        return math.factorial(n)
    if offset == 1:
        q, r = divmod(math.factorial(n + 1) * n, 2)
    elif offset == 2:
        q, r = divmod(math.factorial(n + 2) * n * (3 * n + 1), 24)
    else:
        raise ValueError(f"offset must be 0, 1 or 2, got {offset}")
    if r:
        raise ArithmeticError(f"inexact closed form at n={n}, offset={offset}")
    return q
