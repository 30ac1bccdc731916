"""Exact single-variable polynomials in three bases and forward differences.

A :class:`BasisPolynomial` is a dense list of rational coefficients tagged
with its basis:

* ``monomial``: sum of ``c_k x^k``
* ``falling_factorial``: sum of ``c_k x(x-1)...(x-k+1)``
* ``binomial``: sum of ``c_k C(x, k)``
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .core import stirling_set, subpower

__all__ = [
    "BASES",
    "BasisPolynomial",
    "monomial",
    "falling_factorial",
    "binomial_of",
    "convert_basis",
    "shift",
    "forward_difference",
    "euler_difference_monomial",
    "evaluate",
]

BASES = ("monomial", "falling_factorial", "binomial")


def _strip(coeffs: Sequence) -> Tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class BasisPolynomial:
    basis: str
    coefficients: Tuple[Fraction, ...]

    def __init__(self, coefficients: Sequence = (), basis: str = "monomial"):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "coefficients", _strip(coefficients))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: "BasisPolynomial") -> "BasisPolynomial":
        if other.basis != self.basis:
            other = convert_basis(other, self.basis)
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (n - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (n - len(other.coefficients))
        return BasisPolynomial([x + y for x, y in zip(a, b)], self.basis)

    def __neg__(self) -> "BasisPolynomial":
        return BasisPolynomial([-c for c in self.coefficients], self.basis)

    def __sub__(self, other: "BasisPolynomial") -> "BasisPolynomial":
        return self + (-other)

    def scale(self, c) -> "BasisPolynomial":
        c = Fraction(c)
        return BasisPolynomial([c * a for a in self.coefficients], self.basis)

    def __call__(self, x):
        return evaluate(self, x)


def monomial(m: int, coefficient=1) -> BasisPolynomial:
    """``coefficient * x^m`` in the monomial basis."""
    return BasisPolynomial([0] * m + [coefficient])


def falling_factorial(x, n: int) -> Fraction:
    """``x (x-1) ... (x-n+1)``; 1 for ``n = 0``."""
    x = Fraction(x)
    out = Fraction(1)
    for j in range(n):
        out *= x - j
    return out


def binomial_of(x, n: int) -> Fraction:
    """Generalized binomial coefficient ``C(x, n)`` for rational ``x``."""
    return falling_factorial(x, n) / math.factorial(n)


def _mul_linear(coeffs: List[Fraction], root: int) -> List[Fraction]:
    # multiply a monomial-coefficient list by (x - root)
    out = [Fraction(0)] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i + 1] += c
        out[i] -= root * c
    return out


def _falling_as_monomial(n: int) -> List[Fraction]:
    coeffs = [Fraction(1)]
    for j in range(n):
        coeffs = _mul_linear(coeffs, j)
    return coeffs


def _to_monomial(p: BasisPolynomial) -> BasisPolynomial:
    if p.basis == "monomial":
        return p
    out: List[Fraction] = [Fraction(0)] * len(p.coefficients)
    for n, c in enumerate(p.coefficients):
        if not c:
            continue
        if p.basis == "binomial":
            c = c / math.factorial(n)
        for i, e in enumerate(_falling_as_monomial(n)):
            out[i] += c * e
    return BasisPolynomial(out, "monomial")


def _from_monomial(p: BasisPolynomial, target: str) -> BasisPolynomial:
    if target == "monomial":
        return p
    a = p.coefficients
    d = len(a)
    out = []
    for n in range(d):
        if target == "falling_factorial":
            out.append(sum((a[m] * stirling_set(m, n) for m in range(n, d)), Fraction(0)))
        else:
            out.append(sum((a[m] * subpower(n, m) for m in range(n, d)), Fraction(0)))
    return BasisPolynomial(out, target)


def convert_basis(p: BasisPolynomial, target: str) -> BasisPolynomial:
    """Re-express ``p`` in ``target``; equal to ``p`` as a function.

    Monomials go to falling factorials through Stirling set numbers and to
    binomial coefficients through subpowers.  The reverse directions expand
    each basis element by exact multiplication.
    """
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}; expected one of {BASES}")
    if p.basis == target:
        return p
    return _from_monomial(_to_monomial(p), target)


def shift(p: BasisPolynomial, a) -> BasisPolynomial:
    """Return q with ``q(x) = p(x + a)``; monomial basis only."""
    if p.basis != "monomial":
        raise ValueError("shift needs a monomial-basis polynomial")
    a = Fraction(a)
    d = len(p.coefficients)
    out = [Fraction(0)] * d
    for m, c in enumerate(p.coefficients):
        if not c:
            continue
        for k in range(m + 1):
            out[k] += c * math.comb(m, k) * a ** (m - k)
    return BasisPolynomial(out)


def _step(h) -> Fraction:
    h = Fraction(h)
    if h == 0:
        raise ValueError("step size h must be non-zero")
    return h


def forward_difference(p: BasisPolynomial, h=1, n: int = 1) -> BasisPolynomial:
    """``n``-th forward difference with step ``h``, in the basis of ``p``.

    Computed twice, by iterating ``f(x+h) - f(x)`` and by the alternating
    binomial sum over shifts; an :class:`ArithmeticError` is raised if the two
    ever disagree.
    """
    h = _step(h)
    if n < 0:
        raise ValueError("order n must be natural")
    base = _to_monomial(p)

    iterated = base
    for _ in range(n):
        iterated = shift(iterated, h) - iterated

    direct = BasisPolynomial()
    for k in range(n + 1):
        direct = direct + shift(base, k * h).scale((-1) ** (n - k) * math.comb(n, k))

    if iterated != direct:
        raise ArithmeticError(f"iterated and direct differences disagree for n={n}, h={h}")
    return convert_basis(iterated, p.basis)


def euler_difference_monomial(m: int, n: int, h=1) -> BasisPolynomial:
    """Closed form of ``n``-th difference of ``x^m`` with step ``h``.

    Coefficient of ``x^(m-k)`` is ``C(m, k) * subpower(n, k) * h^k`` for
    ``k = n..m``.
    """
    h = _step(h)
    out = [Fraction(0)] * (m + 1)
    for k in range(n, m + 1):
        out[m - k] = math.comb(m, k) * subpower(n, k) * h**k
    return BasisPolynomial(out)


def evaluate(p: BasisPolynomial, x) -> Fraction:
    """Exact value of ``p`` at rational ``x``."""
    x = Fraction(x)
    if p.basis == "monomial":
        acc = Fraction(0)
        for c in reversed(p.coefficients):
            acc = acc * x + c
        return acc
    kernel = falling_factorial if p.basis == "falling_factorial" else binomial_of
    return sum((c * kernel(x, n) for n, c in enumerate(p.coefficients)), Fraction(0))
