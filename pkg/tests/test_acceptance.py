"""Acceptance criteria, one test each, with their time budgets.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import itertools
import math
import random
import time

from cycexp.bch import build_bch, check_delta_corollary, second_primitive
from cycexp.census import census_exact, census_lower_bound, verify_lemmas
from cycexp.cyclotomic import cyclotomic_cosets, factor_xe_minus_1
from cycexp.fields import find_primitive, make_field
from cycexp.orders import order_any, order_bruteforce
from cycexp.poly import Polynomial, parse_poly
from oracles import naive_census


def test_c1_worked_examples(criterion):
    start = time.perf_counter()
    F2, F3 = make_field(2), make_field(3)
    F16 = make_field(2, 4, "x^4+x+1")
    F9 = make_field(3, 2, "x^2+x+2")
    fail = []

    def check(name, got, want):
        if got != want:
            fail.append(f"{name}: {got!r} != {want!r}")

    fac = factor_xe_minus_1(F3, 4)
    check("x^4-1", {(str(p), f) for p, f in fac.factors},
          {("x^2 + 1", 1), ("x + 2", 1), ("x + 1", 1)})
    check("bound e=4", census_lower_bound(F3, 4).lower_bound_paper, 4)
    check("exact e=4", census_exact(F3, 4), 4)
    rep = census_lower_bound(F3, 12)
    fac = rep.factorization
    check("x^12-1", {(str(p), f) for p, f in fac.factors},
          {("x + 1", 3), ("x + 2", 3), ("x^2 + 1", 3)})
    check("orders", fac.orders, (2, 1, 4))
    check("k", list(rep.k_values.values()), [6, 12, 3])
    check("S", [str(fac.factors[i][0]) for i in rep.s_set], ["x^2 + 1"])
    check("t", list(rep.t_values.values()), [1])
    check("bound e=12", rep.lower_bound_paper, 32)
    check("[15,9]", build_bch(F2, F16, F16.gen, 5, 3).exponent, 15)
    check("[15,13]", build_bch(F2, F16, F16.gen, 5, 2).exponent, 3)
    spec = build_bch(F3, F9, F9.gen, 1, 4)
    check("[8,4]", (spec.exponent, spec.generator),
          (8, parse_poly("2+x+x^2", F3) * parse_poly("1+x^2", F3)))
    spec = build_bch(F3, F9, F9.gen, 2, 2)
    check("[8,6]", (spec.exponent, spec.generator), (4, parse_poly("1+x^2", F3)))
    check("cosets", cyclotomic_cosets(3, 8).cosets, ((0,), (1, 3), (2, 6), (4,), (5, 7)))
    elapsed = time.perf_counter() - start
    ok = not fail and elapsed < 1.0
    criterion("C1 worked examples", ok, f"{elapsed:.2f}s {'; '.join(fail)}")
    assert not fail, fail
    assert elapsed < 1.0


def test_c2_derived_oracles(criterion):
    F2, F3 = make_field(2), make_field(3)
    fac = [(list(p.coeffs), f) for p, f in factor_xe_minus_1(F3, 12).factors]
    assert math.prod(f + 1 for _, f in fac) == 64
    oracle_12 = naive_census(fac, 12, 3)
    fac = [(list(p.coeffs), f) for p, f in factor_xe_minus_1(F2, 3).factors]
    oracle_3 = naive_census(fac, 3, 2)
    r12, r3 = census_lower_bound(F3, 12, exact=True), census_lower_bound(F2, 3, exact=True)
    ok = (r12.exact_count == oracle_12 == 44 and r3.exact_count == oracle_3 == 2
          and r12.lower_bound_paper <= r12.exact_count and r3.lower_bound_paper <= r3.exact_count)
    criterion("C2 derived oracles", ok,
              f"exact(3,12)={r12.exact_count} exact(2,3)={r3.exact_count}")
    assert ok


def _all_polys(F, max_deg):
    q = F.cardinality
    for deg in range(0, max_deg + 1):
        for low in itertools.product(range(q), repeat=deg):
            if deg and low[0] == 0:
                continue
            for lead in range(1, q):
                yield Polynomial(F, list(low) + [lead])


def test_c3_order_oracles(criterion):
    start = time.perf_counter()
    mismatches, checked = [], 0
    for q in (2, 3):
        for g in _all_polys(make_field(q), 4):
            checked += 1
            if order_any(g).order != order_bruteforce(g):
                mismatches.append(str(g))
    rng = random.Random(20240)
    fields = [make_field(q) for q in (2, 3, 4, 5)]
    for _ in range(1000):
        F = rng.choice(fields)
        q = F.cardinality
        deg = rng.randint(1, 8)
        cs = [rng.randrange(1, q)] + [rng.randrange(q) for _ in range(deg - 1)] + [rng.randrange(1, q)]
        g = Polynomial(F, cs)
        checked += 1
        if order_any(g).order != order_bruteforce(g):
            mismatches.append(f"{g} over F_{q}")
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 30
    criterion("C3 order oracle equivalence", ok, f"{checked} polynomials, {elapsed:.1f}s")
    assert not mismatches, mismatches[:5]
    assert elapsed < 30


def test_c4_partition_identity(criterion):
    start = time.perf_counter()
    bad = []
    for q in (2, 3):
        F = make_field(q)
        for n in range(1, 25):
            total = math.prod(f + 1 for _, f in factor_xe_minus_1(F, n).factors)
            by_order = sum(census_exact(F, e) for e in range(1, n + 1) if n % e == 0)
            if by_order != total:
                bad.append((q, n, by_order, total))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10
    criterion("C4 partition identity", ok, f"{elapsed:.1f}s")
    assert not bad, bad
    assert elapsed < 10


def test_c5_bch_theorem_sweep(criterion):
    start = time.perf_counter()
    bad, count = [], 0
    for q in (2, 3, 4):
        base = make_field(q)
        for m in range(1, 5):
            ext = make_field(base, m)
            n = ext.cardinality - 1
            if n < 3:
                continue  # no two distinct primitive elements, and delta <= 2 only
            beta = find_primitive(ext)
            other = second_primitive(beta)
            for a in range(n):
                for delta in range(2, min(8, n) + 1):
                    count += 1
                    # build_bch raises if the lcm formula disagrees with order_any
                    spec = build_bch(base, ext, beta, a, delta, cross_check=True)
                    alt = build_bch(base, ext, other, a, delta, cross_check=True)
                    if spec.exponent != order_bruteforce(spec.generator, upper=n):
                        bad.append(("oracle", q, m, a, delta))
                    if not check_delta_corollary(spec):
                        bad.append(("delta", q, m, a, delta))
                    if spec.exponent != alt.exponent:
                        bad.append(("primitive", q, m, a, delta))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    criterion("C5 BCH theorem sweep", ok, f"{count} codes, {elapsed:.1f}s")
    assert not bad, bad[:5]
    assert elapsed < 60


def test_c6_lemma_suite(criterion):
    failures = []
    for q in (2, 3, 4, 5):
        F = make_field(q)
        for e in range(1, 31):
            rep = verify_lemmas(F, e)
            failures.extend((q, e, c.lemma, c.detail) for c in rep.checks if not c.passed)
    lemmas = sorted({f[2] for f in failures})
    pairs = sorted({(f[0], f[1]) for f in failures})
    criterion("C6 lemma suite", not failures,
              f"{len(failures)} failed checks on {len(pairs)} (q, e) pairs: {', '.join(lemmas)}"
              + (f"; first {failures[0][3]} (q={failures[0][0]}, e={failures[0][1]})" if failures else ""))
    assert not failures, failures[:3]
