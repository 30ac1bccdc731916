"""Bernoulli, Fubini and Worpitzky numbers, power sums, and identity residuals.

Bernoulli numbers use the ``B_1 = +1/2`` convention.  It is the one for
which ``sum_{k<=m} C(m+1, k) B_k = m + 1`` holds and for which
``S_m(n) = 1/(m+1) sum_k C(m+1, k) B_k n^(m+1-k)`` gives the power sum
``1^m + ... + n^m``.  The other common convention (``B_1 = -1/2``) breaks
that formula.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .core import subpower, subpower_table
from .finitediff import BasisPolynomial, binomial_of

__all__ = [
    "BernoulliCache",
    "FermatSolution",
    "bernoulli",
    "sum_powers",
    "faulhaber_polynomial",
    "fubini",
    "fubini_series",
    "power_series_value",
    "worpitzky",
    "check_identity",
    "IDENTITIES",
    "fermat_search",
]


@dataclass(frozen=True)
class BernoulliCache:
    values: Tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def upto(self) -> int:
        return len(self.values) - 1


def _bernoulli_recurrence(upto: int) -> List[Fraction]:
    out: List[Fraction] = []
    for m in range(upto + 1):
        partial = sum((math.comb(m + 1, k) * out[k] for k in range(m)), Fraction(0))
        out.append((m + 1 - partial) / (m + 1))
    return out


def _bernoulli_explicit(upto: int) -> List[Fraction]:
    table = subpower_table(upto)
    return [
        sum(
            (Fraction((-1) ** (m - n) * table.entry(m, n), n + 1) for n in range(m + 1)),
            Fraction(0),
        )
        for m in range(upto + 1)
    ]


def bernoulli(upto: int, method: str = "recurrence") -> BernoulliCache:
    """``B_0 .. B_upto``.

    ``recurrence`` solves ``sum_{k<=m} C(m+1, k) B_k = m + 1`` step by step;
    ``explicit`` evaluates ``B_m = sum_n (-1)^(m-n) n^{m} / (n+1)``.
    """
    if upto < 0:
        raise ValueError("upto must be natural")
    if method == "recurrence":
        return BernoulliCache(tuple(_bernoulli_recurrence(upto)))
    if method == "explicit":
        return BernoulliCache(tuple(_bernoulli_explicit(upto)))
    raise ValueError(f"unknown method {method!r}; expected 'recurrence' or 'explicit'")


def sum_powers(m: int, n: int, method: str = "direct") -> int:
    """``S_m(n) = 1^m + 2^m + ... + n^m``.

    ``direct`` adds the powers, ``binomial`` uses
    ``sum_p p^{m} C(n+1, p+1)`` and ``bernoulli`` uses the Bernoulli-number
    polynomial.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be natural")
    if method == "direct":
        return sum(k**m for k in range(1, n + 1))
    if method == "binomial":
        total = 0
        for p in range(m + 1):
            # sum_{k=1..n} C(k, p) = C(n+1, p+1) - [p == 0]; only m = 0 sees the correction
            inner = math.comb(n + 1, p + 1) - (1 if p == 0 else 0)
            total += subpower(p, m) * inner
        return total
    if method == "bernoulli":
        value = faulhaber_polynomial(m)(n)
        if value.denominator != 1:
            raise ArithmeticError(f"non-integer power sum {value} for m={m}, n={n}")
        return value.numerator
    raise ValueError(f"unknown method {method!r}")


def faulhaber_polynomial(m: int) -> BasisPolynomial:
    """Monomial-basis polynomial P with ``P(n) = S_m(n)`` for every natural n."""
    b = bernoulli(m)
    coeffs = [Fraction(0)] * (m + 2)
    for k in range(m + 1):
        coeffs[m + 1 - k] = Fraction(math.comb(m + 1, k)) * b[k] / (m + 1)
    return BasisPolynomial(coeffs)


def fubini(m: int, method: str = "rowsum") -> int:
    """Fubini (ordered Bell) number: weak orders on m labeled elements."""
    if m < 0:
        raise ValueError("m must be natural")
    if method == "rowsum":
        return sum(subpower_table(m).row(m))
    if method == "recurrence":
        f = [1]
        for j in range(m):
            f.append(sum(math.comb(j + 1, k) * f[k] for k in range(j + 1)))
        return f[m]
    raise ValueError(f"unknown method {method!r}; expected 'rowsum' or 'recurrence'")


def fubini_series(m: int, tol) -> Fraction:
    """Partial sum of ``(1/2) sum_{n>=0} n^m / 2^n`` within ``tol`` of ``F(m)``.

    The ``n = 0`` term is ``0^0 = 1`` when ``m = 0``.  Past
    ``N = max(4m, 32)`` consecutive terms shrink by at least a factor 3/4,
    so the tail after term n is at most 4 times term n+1.  All arithmetic,
    including the stopping test, is exact.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    start = max(4 * m, 32)
    total = Fraction(0)
    n = 0
    while True:
        total += Fraction(n**m, 2 ** (n + 1))
        nxt = Fraction((n + 1) ** m, 2 ** (n + 2))
        if n >= start and 4 * nxt < tol:
            return total
        n += 1


def power_series_value(m: int, x) -> Fraction:
    """Exact value of ``sum_{n>=1} n^m x^n`` for ``0 < x < 1``.

    Uses ``1/(1-x) sum_k k^{m} (x/(1-x))^k``, which sums the series from
    ``n = 0``.  The series here starts at ``n = 1`` (``0^m`` counts as 0
    even for ``m = 0``), so the ``0^0 = 1`` term is subtracted when m = 0.
    """
    x = Fraction(x)
    if not 0 < x < 1:
        raise ValueError(f"x must lie in (0, 1), got {x}")
    r = x / (1 - x)
    row = subpower_table(m).row(m)
    total = sum((k_sub * r**k for k, k_sub in enumerate(row)), Fraction(0)) / (1 - x)
    return total - 1 if m == 0 else total


def worpitzky(m: int, n: int, method: str = "quotient") -> int:
    """``W_{m,n} = (n+1)^{m+1} / (n+1) = n^{m} + (n+1)^{m}``."""
    if method == "quotient":
        q, r = divmod(subpower(n + 1, m + 1), n + 1)
        if r:
            raise ArithmeticError(f"subpower({n + 1}, {m + 1}) not divisible by {n + 1}")
        return q
    if method == "sum":
        return subpower(n, m) + subpower(n + 1, m)
    raise ValueError(f"unknown method {method!r}; expected 'quotient' or 'sum'")


def _alt_row_sum(m: int) -> Fraction:
    row = subpower_table(m).row(m)
    return Fraction(sum((-1) ** (m - n) * v for n, v in enumerate(row)) - 1)


def _worpitzky_residual(m: int, x: Fraction) -> Fraction:
    rhs = sum(
        ((-1) ** (m - n) * worpitzky(m, n) * binomial_of(x + n, n) for n in range(m + 1)),
        Fraction(0),
    )
    return x**m - rhs


def _reciprocal_row_residual(m: int) -> Fraction:
    row = subpower_table(m).row(m)
    lhs = sum(
        (Fraction((-1) ** (n + 1) * row[n], n) for n in range(1, m + 1)), Fraction(0)
    )
    return lhs - (1 if m == 1 else 0)


IDENTITIES = ("alt_row_sum", "eq19_at", "eq25_delta")


def check_identity(name: str, m: int, x=None) -> Fraction:
    """Left-minus-right residual of a named identity; exact 0 when it holds.

    * ``alt_row_sum``: ``sum_n (-1)^(m-n) n^{m} - 1``
    * ``eq19_at``: ``x^m - sum_n (-1)^(m-n) W_{m,n} C(x+n, n)`` (needs ``x``)
    * ``eq25_delta``: ``sum_{n>=1} (-1)^(n+1) n^{m} / n - [m == 1]``
    """
    if name == "alt_row_sum":
        return _alt_row_sum(m)
    if name == "eq19_at":
        if x is None:
            raise ValueError("eq19_at needs a value for x")
        return _worpitzky_residual(m, Fraction(x))
    if name == "eq25_delta":
        return _reciprocal_row_residual(m)
    raise ValueError(f"unknown identity {name!r}; expected one of {IDENTITIES}")


@dataclass(frozen=True, order=True)
class FermatSolution:
    m: int
    x: int
    y: int
    z: int

    def triple(self) -> Tuple[int, int, int]:
        return (self.x, self.y, self.z)


def fermat_search(m: int, values: Optional[Tuple[int, ...]] = None) -> List[FermatSolution]:
    """All ``x, y, z`` in ``1..m`` with ``x^{m} + y^{m} = z^{m}``, lexicographic.

    ``values`` may pass a precomputed table row ``(0^{m}, ..., m^{m})``.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if values is None:
        values = subpower_table(m).row(m)
    found = []
    for x in range(1, m + 1):
        for y in range(1, m + 1):
            s = values[x] + values[y]
            for z in range(1, m + 1):
                if values[z] == s:
                    found.append(FermatSolution(m, x, y, z))
    return found
