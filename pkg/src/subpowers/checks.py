"""Identity verification suites driven by ``subpowers check``.

Every check compares two independent computations and records a failure
with its parameters and residual.  Suites never stop at the first failure.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from . import analytic, core, families, finitediff, oeis, transforms
from .finitediff import BasisPolynomial, monomial
from .transforms import IntSequence

# Rows 0..8 of the subpower triangle as first tabulated (zeros for n > m omitted).
REFERENCE_TRIANGLE = (
    (1,),
    (0, 1),
    (0, 1, 2),
    (0, 1, 6, 6),
    (0, 1, 14, 36, 24),
    (0, 1, 30, 150, 240, 120),
    (0, 1, 62, 540, 1560, 1800, 720),
    (0, 1, 126, 1806, 8400, 16800, 15120, 5040),
    (0, 1, 254, 5796, 40824, 126000, 191520, 141120, 40320),
)

# B_0 .. B_12 with B_1 = +1/2.
REFERENCE_BERNOULLI = tuple(
    Fraction(v)
    for v in ("1", "1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66", "0", "-691/2730")
)

# Fermat-type equation x^{m} + y^{m} = z^{m}: every solution for m <= 40,
# frozen from a separate exhaustive search.  Note 5^{5} + 5^{5} = 4^{5}.
FERMAT_EXCEPTIONS = {
    2: [(1, 1, 2)],
    5: [(2, 5, 3), (5, 2, 3), (5, 5, 4)],
    7: [(4, 4, 5)],
}

SUITES = ("core", "finitediff", "families", "analytic", "oeis")


@dataclass
class SuiteResult:
    checks_run: int = 0
    failures: List[Tuple[str, str, str]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, name: str, ok: bool, params: str = "", detail: str = "") -> bool:
        self.checks_run += 1
        if not ok:
            self.failures.append((name, params, detail))
        return ok

    def equal(self, name: str, got, want, params: str = "") -> bool:
        return self.expect(name, got == want, params, f"got {got}, expected {want}")

    def close(self, name: str, got, want, rel: float, params: str = "") -> bool:
        err = abs(got - want)
        return self.expect(name, err <= rel * abs(want), params, f"got {got!r}, expected {want!r}, |diff|={err:.3g}")

    def extend(self, other: "SuiteResult") -> None:
        self.checks_run += other.checks_run
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)


@dataclass(frozen=True)
class Bounds:
    """Optional overrides; ``None`` keeps each check's default."""

    max_m: Optional[int] = None
    tol: Optional[float] = None

    def m(self, default: int) -> int:
        return default if self.max_m is None else self.max_m


def count_surjections(n: int, m: int) -> int:
    """Brute force: enumerate every function from an m-set to an n-set."""
    if m == 0:
        return 1 if n == 0 else 0
    return sum(1 for f in itertools.product(range(n), repeat=m) if len(set(f)) == n)


def _random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-50, 50), rng.randint(1, 20))


def run_core(bounds: Bounds = Bounds()) -> SuiteResult:
    r = SuiteResult()
    table = core.subpower_table(8)
    for m, row in enumerate(REFERENCE_TRIANGLE):
        for n, v in enumerate(row):
            r.equal("table entry", table.entry(m, n), v, f"m={m} n={n}")

    M = bounds.m(12)
    for m in range(M + 1):
        for n in range(m + 1):
            vals = {meth: core.subpower(n, m, meth) for meth in core.METHODS}
            r.expect("three-way subpower agreement", len(set(vals.values())) == 1, f"n={n} m={m}", str(vals))

    big = core.subpower_table(M)

    def sub(x: int, k: int) -> int:
        return big.entry(k, x) if x <= k else 0

    for a in range(7):
        for b in range(7):
            for m in range(M + 1):
                rhs = sum(math.comb(m, k) * sub(a, k) * sub(b, m - k) for k in range(m + 1))
                r.equal("binomial expansion of subpowers", sub(a + b, m), rhs, f"a={a} b={b} m={m}")

    m7 = bounds.m(10)
    for n in range(m7 + 1):
        for m in range(m7 + 1):
            rhs = sum(math.comb(n, k) * core.subpower(k, m) for k in range(n + 1))
            r.equal("powers as sums of subpowers", n**m, rhs, f"n={n} m={m}")
    for n in range(bounds.m(12) + 1):
        rhs = sum(math.comb(n, k) * core.subfactorial(k) for k in range(n + 1))
        r.equal("factorial as sum of subfactorials", math.factorial(n), rhs, f"n={n}")

    for n in range(31):
        for off in (0, 1, 2):
            r.equal("closed-form diagonal", core.subpower_diagonal(n, off), core.subpower(n, n + off), f"n={n} offset={off}")

    mb = min(bounds.m(7), 7)
    for m in range(mb + 1):
        for n in range(mb + 1):
            r.equal("surjection enumeration", core.subpower(n, m), count_surjections(n, m), f"n={n} m={m}")

    # binomial transform properties
    rng = random.Random(20240917)
    for trial in range(20):
        length = rng.randint(1, 64)
        a = IntSequence([rng.randint(-10**6, 10**6) for _ in range(length)])
        there = transforms.inverse_binomial_transform(transforms.binomial_transform(a))
        back = transforms.binomial_transform(transforms.inverse_binomial_transform(a))
        r.expect("binomial transform round trip", there == a and back == a, f"trial={trial} len={length}")
    for m in range(m7 + 1):
        inv = transforms.inverse_binomial_transform(IntSequence([n**m for n in range(13)]))
        r.equal("inverse transform of powers", inv.values, tuple(core.subpower(n, m) for n in range(13)), f"m={m}")
    inv = transforms.inverse_binomial_transform(IntSequence([math.factorial(n) for n in range(13)]))
    r.equal("inverse transform of factorials", inv.values, tuple(core.subfactorial(n) for n in range(13)))
    return r


def run_finitediff(bounds: Bounds = Bounds()) -> SuiteResult:
    r = SuiteResult()
    rng = random.Random(1755)
    for trial in range(25):
        deg = rng.randint(0, 10)
        p = BasisPolynomial([_random_fraction(rng) for _ in range(deg + 1)])
        for target in ("falling_factorial", "binomial"):
            back = finitediff.convert_basis(finitediff.convert_basis(p, target), "monomial")
            r.equal("basis round trip", back, p, f"trial={trial} via={target}")

    M = bounds.m(10)
    for m in range(1, M + 1):
        ff = BasisPolynomial([0] * m + [1], "falling_factorial")
        want = BasisPolynomial([0] * (m - 1) + [m], "falling_factorial")
        r.equal("difference of falling power", finitediff.forward_difference(ff, 1, 1), want, f"m={m}")
        bc = BasisPolynomial([0] * m + [1], "binomial")
        want = BasisPolynomial([0] * (m - 1) + [1], "binomial")
        r.equal("difference of binomial coefficient", finitediff.forward_difference(bc, 1, 1), want, f"m={m}")

    for m in range(M + 1):
        for n in range(M + 1):
            d = finitediff.forward_difference(monomial(m), 1, n)
            r.equal("differences of zero", finitediff.evaluate(d, 0), core.subpower(n, m), f"m={m} n={n}")

    steps = (Fraction(1), Fraction(1, 2), Fraction(-2), Fraction(3, 7))
    m8 = bounds.m(8)
    for m in range(m8 + 1):
        for n in range(m8 + 1):
            for h in steps:
                r.equal(
                    "closed-form difference of monomial",
                    finitediff.euler_difference_monomial(m, n, h),
                    finitediff.forward_difference(monomial(m), h, n),
                    f"m={m} n={n} h={h}",
                )

    for m in range(bounds.m(30) + 1):
        row = core.subpower_table(m).row(m)
        val = sum(((-1) ** (m - n) * v * finitediff.binomial_of(1 + n - 1, n) for n, v in enumerate(row)), Fraction(0))
        r.equal("rising binomial form at x=1", val, 1, f"m={m}")

    for m in range(min(bounds.m(6), 6) + 1):
        p = monomial(m)
        for x0, h in ((Fraction(0), Fraction(1)), (Fraction(2, 3), Fraction(-1, 2)), (Fraction(-5, 4), Fraction(3))):
            samples = IntSequence([finitediff.evaluate(p, x0 + n * h) for n in range(9)])
            diffs = tuple(finitediff.evaluate(finitediff.forward_difference(p, h, n), x0) for n in range(9))
            r.equal("inverse transform of samples", transforms.inverse_binomial_transform(samples).values, diffs, f"m={m} x0={x0} h={h}")
    return r


def run_families(bounds: Bounds = Bounds()) -> SuiteResult:
    r = SuiteResult()
    B = bounds.m(40)
    rec = families.bernoulli(B, "recurrence")
    exp = families.bernoulli(B, "explicit")
    for m in range(B + 1):
        r.equal("Bernoulli methods agree", rec[m], exp[m], f"m={m}")
    for m in range(3, B, 2):
        r.equal("odd Bernoulli numbers vanish", rec[m], 0, f"m={m}")
    for m, want in enumerate(REFERENCE_BERNOULLI):
        r.equal("Bernoulli reference values", families.bernoulli(12, "recurrence")[m], want, f"m={m}")
        r.equal("Bernoulli reference values (explicit)", families.bernoulli(12, "explicit")[m], want, f"m={m}")

    M = bounds.m(10)
    for m in range(M + 1):
        for n in range(51):
            vals = {meth: families.sum_powers(m, n, meth) for meth in ("direct", "binomial", "bernoulli")}
            r.expect("power sum three ways", len(set(vals.values())) == 1, f"m={m} n={n}", str(vals))
        poly = families.faulhaber_polynomial(m)
        for n in range(31):
            r.equal("power-sum polynomial", poly(n), families.sum_powers(m, n, "direct"), f"m={m} n={n}")
    for n in range(51):
        fifth = math.comb(n + 1, 2) + 30 * math.comb(n + 1, 3) + 150 * math.comb(n + 1, 4) + 240 * math.comb(n + 1, 5) + 120 * math.comb(n + 1, 6)
        r.equal("fifth-power sum expansion", families.sum_powers(5, n, "binomial"), fifth, f"n={n}")
    r.equal(
        "fifth-power polynomial",
        families.faulhaber_polynomial(5).coefficients,
        tuple(Fraction(c) for c in ("0", "0", "-1/12", "0", "5/12", "1/2", "1/6")),
    )

    for m in range(bounds.m(25) + 1):
        r.equal("Fubini rowsum vs recurrence", families.fubini(m, "rowsum"), families.fubini(m, "recurrence"), f"m={m}")
    tol = Fraction(1, 10**9)
    for m in range(bounds.m(10) + 1):
        s = families.fubini_series(m, tol)
        err = abs(s - families.fubini(m))
        r.expect("Fubini series", err < tol, f"m={m}", f"|diff|={float(err):.3g}")

    W = bounds.m(20)
    for m in range(W + 1):
        for n in range(W + 1):
            r.equal("Worpitzky quotient vs sum", families.worpitzky(m, n, "quotient"), families.worpitzky(m, n, "sum"), f"m={m} n={n}")
    for m in range(bounds.m(10) + 1):
        for n in range(bounds.m(10) + 1):
            one = finitediff.evaluate(finitediff.forward_difference(monomial(m), 1, n), 1)
            r.equal("differences of one", families.worpitzky(m, n), one, f"m={m} n={n}")

    for m in range(bounds.m(30) + 1):
        r.equal("alternating row sum", families.check_identity("alt_row_sum", m), 0, f"m={m}")
        r.equal("reciprocal-weighted row sum", families.check_identity("eq25_delta", m), 0, f"m={m}")
    for m in range(bounds.m(10) + 1):
        for x in (Fraction(0), Fraction(1), Fraction(2), Fraction(-1), Fraction(5, 2)):
            r.equal("Worpitzky expansion residual", families.check_identity("eq19_at", m, x), 0, f"m={m} x={x}")

    F = bounds.m(40)
    for m in range(1, F + 1):
        got = [s.triple() for s in families.fermat_search(m)]
        r.equal("Fermat-type search", got, FERMAT_EXCEPTIONS.get(m, []), f"m={m}")
    return r


def run_analytic(bounds: Bounds = Bounds()) -> SuiteResult:
    r = SuiteResult()
    rel9 = 1e-9 if bounds.tol is None else bounds.tol
    rel8 = 1e-8 if bounds.tol is None else bounds.tol
    rel12 = 1e-12 if bounds.tol is None else bounds.tol
    quad_tol = 1e-8 if bounds.tol is None else bounds.tol

    M = bounds.m(15)
    for n in range(1, M + 1):
        for m in range(1, M + 1):
            r.close("real exponent matches integer subpower", analytic.subpower_complex(n, m), core.subpower(n, m), rel9, f"n={n} m={m}")
    for n in range(21):
        want = 0 if n == 0 else (-1) ** (n + 1)
        got = analytic.subpower_complex(n, 0)
        r.expect("zero exponent (analytic convention)", abs(got - want) <= rel12, f"n={n}", f"got {got!r}, expected {want}")
    for z in (0.5, -1.3, 2 + 1j):
        for n in range(1, 13):
            lhs = analytic.subpower_complex(n, z)
            rhs = n * (analytic.subpower_complex(n, z - 1) + analytic.subpower_complex(n - 1, z - 1))
            r.close("recurrence at complex exponent", lhs, rhs, rel8, f"n={n} z={z}")
    for n in range(101):
        want = (-1) ** (n - 1) * analytic.harmonic(n) if n else Fraction(0)
        r.equal("exponent -1 gives signed harmonic number", analytic.subpower_negative(n, 1), want, f"n={n}")
    for z in (-2, -1, 0.5):
        for n in range(11):
            lhs = sum(math.comb(n, k) * analytic.subpower_complex(k, z) for k in range(1, n + 1))
            want = 0.0 if n == 0 else float(n) ** z
            if n == 0:
                r.expect("binomial transform at real exponent", lhs == 0, f"n=0 z={z}")
            else:
                r.close("binomial transform at real exponent", lhs, want, rel8, f"n={n} z={z}")
            if isinstance(z, int) and n >= 1:
                exact = sum((math.comb(n, k) * analytic.subpower_negative(k, -z) for k in range(1, n + 1)), Fraction(0))
                r.equal("binomial transform at negative integer exponent", exact, Fraction(1, n ** (-z)), f"n={n} z={z}")
    for n in range(1, 7):
        for m in range(1, 5):
            got = analytic.integral_check(n, m, quad_tol)
            want = analytic.subpower_negative(n, m)
            err = abs(got - float(want))
            r.expect("integral representation", err < 10 * quad_tol, f"n={n} m={m}", f"got {got!r}, exact {want}, |diff|={err:.3g}")

    samples = analytic.curve_samples(5, 0, 5, 0.1)
    for s in samples:
        if float(s.z).is_integer():
            r.close("curve anchor at integer exponent", s.value, analytic.analytic_integer(s.n, int(s.z)), rel9, f"n={s.n} z={s.z}")

    for d in analytic.coefficient_discrepancies():
        r.notes.append(d.describe())
    return r


def run_oeis(bounds: Bounds = Bounds()) -> SuiteResult:
    r = SuiteResult()
    M = bounds.m(12)
    flat = oeis.flatten_triangle(core.subpower_table(M))
    r.equal("flattened triangle length", len(flat), (M + 1) * (M + 2) // 2, f"M={M}")
    rep = oeis.compare(flat, oeis.load_bfile("A131689"))
    r.expect("A131689 snapshot", rep.ok and rep.compared == len(flat), f"M={M}", str(rep))
    fub = IntSequence([families.fubini(m) for m in range(M + 1)])
    rep = oeis.compare(fub, oeis.load_bfile("A000670"))
    r.expect("A000670 snapshot", rep.ok and rep.compared == len(fub), f"m=0..{M}", str(rep))
    return r


RUNNERS: Dict[str, Callable[[Bounds], SuiteResult]] = {
    "core": run_core,
    "finitediff": run_finitediff,
    "families": run_families,
    "analytic": run_analytic,
    "oeis": run_oeis,
}


def run_suite(name: str, bounds: Bounds = Bounds()) -> SuiteResult:
    if name == "all":
        total = SuiteResult()
        for suite in SUITES:
            total.extend(RUNNERS[suite](bounds))
        return total
    if name not in RUNNERS:
        raise ValueError(f"unknown suite {name!r}")
    return RUNNERS[name](bounds)
