"""Subpowers with real, complex and negative-integer exponents.

Here ``0^z`` is taken to be 0 for every z, so

    n^{z} = sum_{k=1..n} (-1)^(n-k) C(n, k) k^z,   0^{z} = 0.

This is an analytic function of z.  It agrees with the integer subpowers for
``z >= 1`` but gives ``n^{0} = (-1)^(n+1)`` for ``n >= 1`` rather than the
combinatorial Kronecker delta.

The alternating sum loses roughly n bits to cancellation, so terms are
accumulated in increasing k with mpmath at a working precision raised by the
size of the largest term.  Results are rounded once to double precision.
Accuracy is only guaranteed for ``n <= 20``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import List, NamedTuple, Tuple, Union

import mpmath
import numpy as np

from .core import subpower

__all__ = [
    "HarmonicCoefficients",
    "CurveSample",
    "subpower_complex",
    "subpower_negative",
    "harmonic",
    "harmonic_log_coefficients",
    "integral_check",
    "curve_samples",
    "PUBLISHED_THIRD_ANTIDERIVATIVE",
    "coefficient_discrepancies",
    "grid",
    "analytic_integer",
]

Number = Union[int, float, complex]


def _working_precision(n: int, z: complex) -> int:
    # bits for the largest term C(n, k) k^Re(z) plus headroom for n bits of cancellation
    growth = n + max(z.real, 0.0) * math.log2(max(n, 2)) + max(-z.real, 0.0)
    return 64 + 2 * n + int(math.ceil(growth))


def subpower_complex(n: int, z: Number) -> Number:
    """Subpower with complex (or real) exponent; 0 for ``n = 0``.

    Returns a float for real ``z`` and a complex number otherwise.
    """
    if n < 0:
        raise ValueError("n must be natural")
    is_real = not isinstance(z, complex) or z.imag == 0
    zc = complex(z)
    if n == 0:
        return 0.0 if is_real else 0j
    with mpmath.workprec(_working_precision(n, zc)):
        mz = mpmath.mpf(zc.real) if is_real else mpmath.mpc(zc.real, zc.imag)
        acc = mpmath.mpf(0) if is_real else mpmath.mpc(0)
        for k in range(1, n + 1):
            term = math.comb(n, k) * mpmath.power(k, mz)
            acc += term if (n - k) % 2 == 0 else -term
        if is_real:
            return float(acc)
        return complex(acc)


def subpower_negative(n: int, m: int) -> Fraction:
    """Exact ``n^{-m} = sum_{k=1..n} (-1)^(n-k) C(n, k) / k^m`` for ``m >= 1``."""
    if m < 1:
        raise ValueError("m must be >= 1; use subpower_complex for exponent 0")
    if n < 0:
        raise ValueError("n must be natural")
    return sum(
        (Fraction((-1) ** (n - k) * math.comb(n, k), k**m) for k in range(1, n + 1)),
        Fraction(0),
    )


def harmonic(n: int) -> Fraction:
    """``H_n = 1 + 1/2 + ... + 1/n``; ``H_0 = 0``."""
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


@dataclass(frozen=True)
class HarmonicCoefficients:
    """Coefficients ``c_n^(k)``, k = 0..m, of the repeated antiderivative of ``ln^m x``.

    The n-th antiderivative is
    ``x^n/n! * sum_k (-1)^k c_n^(k) m(m-1)...(m-k+1) ln^(m-k) x``.
    """

    n: int
    values: Tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


def harmonic_log_coefficients(n: int, m: int) -> HarmonicCoefficients:
    """``c_n^(0..m)`` with ``c_n^(0) = 1`` and ``c_n^(k) = (-1)^(n-1) n^{-k}``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    sign = -1 if (n - 1) % 2 else 1
    vals = [Fraction(1)] + [sign * subpower_negative(n, k) for k in range(1, m + 1)]
    return HarmonicCoefficients(n, tuple(vals))


# Worked example often printed for the third antiderivative of ln^m x.
# The k = 3 entry is a misprint: the exact coefficient is 575/216.
PUBLISHED_THIRD_ANTIDERIVATIVE = {1: "11/6", 2: "85/36", 3: "576/216"}


class Discrepancy(NamedTuple):
    n: int
    k: int
    printed: str
    computed: Fraction

    def describe(self) -> str:
        return (
            f"c_{self.n}^({self.k}) = {self.computed} exactly; printed value {self.printed} "
            f"is off by {Fraction(self.printed) - self.computed} (documented deviation, not a failure)"
        )


def coefficient_discrepancies() -> List[Discrepancy]:
    """Compare the printed third-antiderivative coefficients with exact values."""
    coeffs = harmonic_log_coefficients(3, max(PUBLISHED_THIRD_ANTIDERIVATIVE))
    return [
        Discrepancy(3, k, printed, coeffs[k])
        for k, printed in sorted(PUBLISHED_THIRD_ANTIDERIVATIVE.items())
        if coeffs[k] != Fraction(printed)
    ]


def _gauss_legendre(f, a: float, b: float, panels: int, nodes: np.ndarray, weights: np.ndarray) -> float:
    edges = np.linspace(a, b, panels + 1)
    left, right = edges[:-1], edges[1:]
    half = 0.5 * (right - left)
    mid = 0.5 * (right + left)
    t = mid[:, None] + half[:, None] * nodes[None, :]
    return float(np.sum(half[:, None] * weights[None, :] * f(t)))


def integral_check(n: int, m: int, tol: float = 1e-8, order: int = 20) -> float:
    """Quadrature value of ``(-1)^(n-1) n/m! int_0^1 (1-x)^(n-1) ln(1/x)^m dx``.

    The substitution ``t = -ln x`` turns it into
    ``int_0^inf (1 - e^-t)^(n-1) t^m e^-t dt`` with no endpoint singularity.
    The range is cut at T where the remainder ``n (T+1)^m e^-T / m!`` is below
    ``tol/2``; Gauss-Legendre panels on [0, T] are doubled until two
    successive estimates differ by less than ``tol/4``.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    scale = n / math.factorial(m)

    # tail of the integrand is below t^m e^-t, whose integral past T is at most m! (T+1)^m e^-T
    T = 1.0
    while n * (T + 1) ** m * math.exp(-T) >= tol / 2:
        T += 1.0

    def f(t):
        return (-np.expm1(-t)) ** (n - 1) * t**m * np.exp(-t)

    nodes, weights = np.polynomial.legendre.leggauss(order)
    panels = 1
    prev = scale * _gauss_legendre(f, 0.0, T, panels, nodes, weights)
    while True:
        panels *= 2
        cur = scale * _gauss_legendre(f, 0.0, T, panels, nodes, weights)
        if abs(cur - prev) < tol / 4 or panels >= 1 << 14:
            break
        prev = cur
    return -cur if (n - 1) % 2 else cur


class CurveSample(NamedTuple):
    n: int
    z: float
    value: float


def grid(z_min: float, z_max: float, step: float) -> List[float]:
    """``z_min + j*step`` up to ``z_max``, computed in decimal so points print cleanly."""
    if step <= 0:
        raise ValueError("step must be positive")
    if z_min > z_max:
        raise ValueError("z_min must not exceed z_max")
    lo, hi, dz = Decimal(repr(float(z_min))), Decimal(repr(float(z_max))), Decimal(repr(float(step)))
    count = int((hi - lo) / dz) + 1
    return [float(lo + j * dz) for j in range(count)]


def curve_samples(n_max: int, z_min: float, z_max: float, step: float) -> List[CurveSample]:
    """Real-exponent subpower curves for bases 1..n_max, ordered by n then z."""
    zs = grid(z_min, z_max, step)
    return [CurveSample(n, z, subpower_complex(n, z)) for n in range(1, n_max + 1) for z in zs]


def analytic_integer(n: int, m: int) -> int:
    """Exact value of the analytic-convention subpower at a natural exponent."""
    if m == 0:
        return 0 if n == 0 else (-1) ** (n + 1)
    return subpower(n, m)
