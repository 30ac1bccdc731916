"""Acceptance criteria; each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s -q``; the lines are also
shown without ``-s`` because output capture is disabled around them.
"""
import io
import math
from fractions import Fraction

import pytest

from subpowers import analytic, families, finitediff, oeis
from subpowers.cli import main
from subpowers.core import subfactorial, subpower, subpower_table
from subpowers.finitediff import binomial_of, monomial
from subpowers.transforms import IntSequence

from oracles import count_surjections

PRINTED_TABLE = [
    [1],
    [0, 1],
    [0, 1, 2],
    [0, 1, 6, 6],
    [0, 1, 14, 36, 24],
    [0, 1, 30, 150, 240, 120],
    [0, 1, 62, 540, 1560, 1800, 720],
    [0, 1, 126, 1806, 8400, 16800, 15120, 5040],
    [0, 1, 254, 5796, 40824, 126000, 191520, 141120, 40320],
]
PRINTED_BERNOULLI = [Fraction(s) for s in "1 1/2 1/6 0 -1/30 0 1/42 0 -1/30 0 5/66 0 -691/2730".split()]


@pytest.fixture
def verdict(capsys):
    def emit(label, failures):
        with capsys.disabled():
            status = "PASS" if not failures else "FAIL"
            print(f"\n[{status}] {label}" + ("" if not failures else f" -- {failures[:3]}"))
        assert not failures, failures

    return emit


def test_ac1_table_reproduction(verdict):
    fails = []
    table = subpower_table(8)
    printed = [(m, n, v) for m, row in enumerate(PRINTED_TABLE) for n, v in enumerate(row)]
    assert len(printed) == 45  # rows 0..8, columns 0..m
    fails += [("entry", m, n) for m, n, v in printed if table.entry(m, n) != v]
    fails += [("pairwise", n, m) for m in range(13) for n in range(m + 1)
              if not subpower(n, m, "sum") == subpower(n, m, "recurrence") == subpower(n, m, "stirling")]
    verdict("AC1 subpower triangle: 45 printed entries exact; three algorithms agree for n <= m <= 12", fails)


def test_ac2_bernoulli_table(verdict):
    fails = []
    for method in ("recurrence", "explicit"):
        got = list(families.bernoulli(12, method).values)
        if got != PRINTED_BERNOULLI:
            fails.append((method, got))
    verdict("AC2 Bernoulli table: B_0..B_12 exact from both the implicit recurrence and the explicit sum", fails)


def test_ac3_fifth_power_sums(verdict):
    fails = []
    for n in range(51):
        expansion = (math.comb(n + 1, 2) + 30 * math.comb(n + 1, 3) + 150 * math.comb(n + 1, 4)
                     + 240 * math.comb(n + 1, 5) + 120 * math.comb(n + 1, 6))
        vals = (families.sum_powers(5, n, "binomial"), expansion, families.sum_powers(5, n, "direct"))
        if len(set(vals)) != 1:
            fails.append((n, vals))
    coeffs = families.faulhaber_polynomial(5).coefficients
    want = [Fraction(1, 6), Fraction(1, 2), Fraction(5, 12), 0, Fraction(-1, 12), 0]  # degrees 6..1
    if [coeffs[d] for d in range(6, 0, -1)] != want or coeffs[0] != 0:
        fails.append(("faulhaber", coeffs))
    verdict("AC3 fifth-power sums: binomial form = expansion = direct for n <= 50; polynomial coefficients exact", fails)


def test_ac4_identity_battery(verdict):
    fails = []
    for n in range(13):
        if math.factorial(n) != sum(math.comb(n, k) * subfactorial(k) for k in range(n + 1)):
            fails.append(("factorial/subfactorial", n))
        for m in range(13):
            if n**m != sum(math.comb(n, k) * subpower(k, m) for k in range(n + 1)):
                fails.append(("power/subpower", n, m))
    for a in range(7):
        for b in range(7):
            for m in range(13):
                rhs = sum(math.comb(m, k) * subpower(a, k) * subpower(b, m - k) for k in range(m + 1))
                if subpower(a + b, m) != rhs:
                    fails.append(("binomial expansion", a, b, m))
    for m in range(11):
        for n in range(11):
            d = finitediff.forward_difference(monomial(m), 1, n)
            if finitediff.evaluate(d, 0) != subpower(n, m):
                fails.append(("differences of zero", m, n))
    for h in (Fraction(1), Fraction(1, 2), Fraction(-2), Fraction(3, 7)):
        for m in range(9):
            for n in range(9):
                if finitediff.euler_difference_monomial(m, n, h) != finitediff.forward_difference(monomial(m), h, n):
                    fails.append(("closed-form difference", m, n, h))
    for m in range(31):
        row = subpower_table(m).row(m)
        if sum((-1) ** (m - n) * v * binomial_of(n, n) for n, v in enumerate(row)) != 1:
            fails.append(("alternating row sum via rising form", m))
        if families.check_identity("alt_row_sum", m) != 0:
            fails.append(("alt_row_sum", m))
        if families.check_identity("eq25_delta", m) != 0:
            fails.append(("reciprocal row sum", m))
    for m in range(11):
        for x in (0, 1, 2, -1, Fraction(5, 2)):
            if families.check_identity("eq19_at", m, x) != 0:
                fails.append(("Worpitzky expansion", m, x))
        for n in range(11):
            q = families.worpitzky(m, n, "quotient")
            s = families.worpitzky(m, n, "sum")
            one = finitediff.evaluate(finitediff.forward_difference(monomial(m), 1, n), 1)
            if not q == s == one:
                fails.append(("Worpitzky three ways", m, n))
    verdict("AC4 identity battery (factorials, powers, binomial expansion, differences, Worpitzky, row sums): all exact", fails)


def test_ac5_fubini(verdict):
    fails = [("rowsum/recurrence", m) for m in range(26) if families.fubini(m, "rowsum") != families.fubini(m, "recurrence")]
    tol = Fraction(1, 10**9)
    fails += [("series", m) for m in range(11) if not abs(families.fubini_series(m, tol) - families.fubini(m)) < tol]
    rep = oeis.compare(IntSequence([families.fubini(m) for m in range(13)]), oeis.load_bfile("A000670"))
    if not (rep.ok and rep.compared >= 13):
        fails.append(("A000670", rep))
    verdict("AC5 Fubini: rowsum = recurrence (m <= 25); series within 1e-9 (m <= 10); A000670 snapshot 13/13", fails)


def test_ac6_triangle_oeis(verdict):
    rep = oeis.compare(oeis.flatten_triangle(subpower_table(12)), oeis.load_bfile("A131689"))
    fails = [] if (rep.ok and rep.compared == 91 and rep.matched == 91) else [rep]
    verdict("AC6 A131689: flattened triangle M = 12 matches snapshot, 91/91 terms", fails)


def test_ac7_fermat(verdict):
    fails = []
    found = {m: [s.triple() for s in families.fermat_search(m)] for m in range(1, 41)}
    with_solutions = sorted(m for m, sols in found.items() if sols)
    if with_solutions != [2, 5, 7]:
        fails.append(("m with solutions", with_solutions))
    for m, listed in ((2, [(1, 1, 2)]), (5, [(2, 5, 3), (5, 2, 3)]), (7, [(4, 4, 5)])):
        if not set(listed) <= set(found[m]):
            fails.append(("listed triple missing", m, found[m]))
    # full solution lists, frozen from the exhaustive oracle (5^{5} + 5^{5} = 4^{5} as well)
    if found[5] != [(2, 5, 3), (5, 2, 3), (5, 5, 4)] or found[2] != [(1, 1, 2)] or found[7] != [(4, 4, 5)]:
        fails.append(("solution lists", found[2], found[5], found[7]))
    # spot-check the table values behind the search against brute-force counting
    if [subpower(x, 5) for x in (2, 3, 4, 5)] != [count_surjections(x, 5) for x in (2, 3, 4, 5)]:
        fails.append("table values")
    verdict("AC7 Fermat analogue: for 1 <= m <= 40 solutions exist exactly at m in {2, 5, 7}", fails)


def test_ac8_analytic(verdict):
    fails = []
    for n in range(1, 16):
        for m in range(1, 16):
            exact = subpower(n, m)
            if abs(analytic.subpower_complex(n, m) - exact) > 1e-9 * exact:
                fails.append(("integer", n, m))
    for n in range(21):
        want = 0 if n == 0 else (-1) ** (n + 1)
        if abs(analytic.subpower_complex(n, 0) - want) > 1e-12:
            fails.append(("z=0", n))
    for z in (0.5, -1.3, 2 + 1j):
        for n in range(1, 13):
            lhs = analytic.subpower_complex(n, z)
            rhs = n * (analytic.subpower_complex(n, z - 1) + analytic.subpower_complex(n - 1, z - 1))
            if abs(lhs - rhs) > 1e-8 * abs(lhs):
                fails.append(("recurrence", n, z))
    for n in range(101):
        if analytic.subpower_negative(n, 1) != (-1) ** (n - 1) * analytic.harmonic(n):
            fails.append(("harmonic", n))
    for n in range(1, 7):
        for m in range(1, 5):
            if not abs(analytic.integral_check(n, m, 1e-8) - float(analytic.subpower_negative(n, m))) < 1e-7:
                fails.append(("quadrature", n, m))
    verdict("AC8 analytic extension: integer match 1e-9, z=0 1e-12, complex recurrence 1e-8, H_n exact, quadrature 1e-7", fails)


def test_ac9_discrepancy_report(verdict):
    fails = []
    if analytic.harmonic_log_coefficients(3, 3)[3] != Fraction(575, 216):
        fails.append("c_3^(3) value")
    out = io.StringIO()
    code = main(["check", "--suite", "analytic"], out=out)
    text = out.getvalue()
    notes = [line for line in text.splitlines() if "NOTE" in line]
    if code != 0:
        fails.append(("exit code", code))
    if not any("575/216" in line and "576/216" in line and "not a failure" in line for line in notes):
        fails.append(("report", notes))
    verdict("AC9 discrepancy: suite reports c_3^(3) = 575/216 vs printed 576/216 as a documented deviation", fails)


def test_ac10_figure_data(verdict):
    fails = []
    out = io.StringIO()
    main(["plot-data", "--n-max", "5", "--z-min", "0", "--z-max", "5", "--step", "0.1"], out=out)
    lines = out.getvalue().splitlines()
    if lines[0] != "z,n1,n2,n3,n4,n5" or len(lines) != 52:
        fails.append(("shape", lines[0], len(lines)))
    rows = [[float(v) for v in line.split(",")] for line in lines[1:]]
    zs = [r[0] for r in rows]
    if zs != sorted(zs) or len(set(zs)) != len(zs):
        fails.append("grid not strictly increasing")
    for r in rows:
        z = r[0]
        if z.is_integer():
            for n in range(1, 6):
                exact = analytic.analytic_integer(n, int(z))
                if abs(r[n] - exact) > 1e-9 * max(abs(exact), 1):
                    fails.append(("anchor", n, z, r[n], exact))
    if abs(rows[-1][5] - 120) > 1e-9 * 120:
        fails.append(("n5 at z=5", rows[-1][5]))
    if any(r[1] != 1.0 for r in rows):
        fails.append("n1 not constant")
    # each curve n >= 2 rises from z = n-1 onward, through its exact integer anchors
    for n in range(2, 6):
        seg = [r[n] for r in rows if r[0] >= n - 1]
        if any(b <= a for a, b in zip(seg, seg[1:])):
            fails.append(("not increasing past z = n-1", n))
    verdict("AC10 curve data: 51 x 6 grid, exact anchors at integer z (n5(5) = 120), curves rise past z = n-1", fails)
