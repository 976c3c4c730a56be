"""Acceptance gate: one PASS/FAIL line per criterion, with its time budget.

Run with ``pytest tests/test_acceptance.py`` or ``python3 -m tests.test_acceptance``.
"""
from __future__ import annotations

import math
import random
import time
from fractions import Fraction

import pytest

from aktangent.ak_local import GermData, ak_closed, ak_invariants, classify, tangency_vanishing_order
from aktangent.caporaso_harris import CHSolver
from aktangent.closed_forms import nt_closed
from aktangent.consistency import check_eq1_table, kazaryan_check
from aktangent.exactpoly import BivarPoly
from aktangent.pencil import run_trials
from aktangent.profiles import SingularityProfile
from aktangent.tangency_recursion import invert_for_conditioned, nt_recursive, starter_table

x, y = BivarPoly.x(), BivarPoly.y()
RNG_SEED = 20240101


def _rand_fraction(rng, nonzero=False):
    while True:
        v = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
        if v or not nonzero:
            return v


def criterion_1():
    bad = []
    for d in (2, 3, 4, 5):
        for t in run_trials(d, 5, 1):
            if not t.passed:
                bad.append((d, t.seed, t.count))
    return not bad, f"20 pencils, mismatches={bad}"


def criterion_2():
    a1 = nt_closed(3, SingularityProfile.of(1)).value
    a2 = nt_closed(3, SingularityProfile.of(2)).value
    return (a1, a2) == (36, 60), f"N3T(A1)={a1} N3T(A2)={a2}"


def criterion_3():
    r = kazaryan_check()
    det = r.details
    ok = r.computed == 2256 and det["n"] == 72 and det["euler"] == 144 and det["euler"] - 72 == det["n"]
    return ok, f"total={r.computed} n={det['n']} {det['excess']}"


def criterion_4():
    solver = CHSolver()
    bad, largest = [], 0
    for delta in range(1, 9):
        prof = SingularityProfile(((1, delta),))
        for d in (1 + 2 * delta, 2 + 2 * delta):
            closed = nt_closed(d, prof).value
            largest = max(largest, closed)
            if math.factorial(delta) * solver.tangent(d, delta) != closed:
                bad.append((delta, d))
    return not bad and largest > 10 ** 18, f"16 comparisons, mismatches={bad}, largest={largest}"


def criterion_5():
    failures = []
    for k in range(0, 11):
        if str(classify(y ** 2 + x ** (k + 1), (0, 0), 10)) != f"A{k}":
            failures.append(("normal", k))
    if str(classify(y ** 2 + x ** 2 * y)) != "A3":
        failures.append("y^2+x^2y")
    rng = random.Random(RNG_SEED)
    for trial in range(50):
        k = rng.randint(0, 8)
        while True:
            a, b, c, e = (_rand_fraction(rng) for _ in range(4))
            if a * e - b * c:
                break
        f = (y ** 2 + x ** (k + 1)).substitute(x * a + y * b, x * c + y * e)
        if str(classify(f, (0, 0), 8)) != f"A{k}":
            failures.append(("change", trial, k))
    return not failures, f"11 normal forms + y^2+x^2y + 50 coordinate changes, failures={failures}"


def _random_sheared_germ(rng, order=5):
    ders = {(0, 2): _rand_fraction(rng, nonzero=True)}
    for n in range(3, order + 1):
        for i in range(n + 1):
            ders[(i, n - i)] = _rand_fraction(rng)
    return GermData(ders, order)


def criterion_6():
    rng = random.Random(RNG_SEED + 6)
    bad = 0
    for _ in range(100):
        g = _random_sheared_germ(rng)
        inv = ak_invariants(g, 5)
        bad += sum(inv[j] != ak_closed(g, j) for j in (3, 4, 5))
    return bad == 0, f"100 germs x j=3,4,5, mismatches={bad}"


def criterion_7():
    rng = random.Random(RNG_SEED + 7)
    bad = []
    for k in range(1, 9):
        for _ in range(10):
            m = _rand_fraction(rng, nonzero=True)
            v = tangency_vanishing_order(k, m)
            split_ok = v.branch_orders == ((k + 1) // 2,) * 2 if k % 2 else len(v.branch_orders) == 1
            if v.total != k + 1 or not split_ok:
                bad.append((k, m))
    return not bad, f"k=1..8 x 10 slopes, failures={bad}"


def criterion_8():
    t = starter_table()
    cusp = SingularityProfile.of(2)
    rec = nt_recursive(3, cusp, t).value
    inv = invert_for_conditioned(3, cusp, 24, nt_closed(3, cusp).value)
    reports = check_eq1_table(t)
    fails = sum(not r.passed for r in reports)
    return rec == 60 and inv == 12 and fails == 0 and reports, (
        f"nt_recursive={rec} inverted={inv} table checks={len(reports)} failures={fails}"
    )


CRITERIA = [
    (1, "base tangency law on random pencils", criterion_1, 30.0),
    (2, "closed-form anchors 36 and 60", criterion_2, 1.0),
    (3, "quartic A1 A2 A3 check = 2256", criterion_3, 1.0),
    (4, "Caporaso-Harris vs closed forms, delta 1..8", criterion_4, 120.0),
    (5, "classifier ground truth and invariance", criterion_5, 10.0),
    (6, "elimination series vs closed A_3..A_5", criterion_6, 30.0),
    (7, "tangency vanishing order k+1", criterion_7, 5.0),
    (8, "recursion round trip over starter table", criterion_8, 1.0),
]


def evaluate(fn, limit):
    t0 = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t0
    passed = bool(ok) and elapsed < limit
    return passed, elapsed, detail


def format_line(num, name, passed, elapsed, limit, detail):
    return f"[{'PASS' if passed else 'FAIL'}] criterion {num}: {name} ({elapsed:.2f}s < {limit:g}s) {detail}"


@pytest.mark.parametrize("num, name, fn, limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, name, fn, limit, capsys):
    passed, elapsed, detail = evaluate(fn, limit)
    with capsys.disabled():
        print("\n" + format_line(num, name, passed, elapsed, limit, detail))
    assert passed, detail


if __name__ == "__main__":
    results = []
    for num, name, fn, limit in CRITERIA:
        passed, elapsed, detail = evaluate(fn, limit)
        results.append(passed)
        print(format_line(num, name, passed, elapsed, limit, detail))
    print(f"{sum(results)}/{len(results)} criteria passed")
    raise SystemExit(0 if all(results) else 1)
