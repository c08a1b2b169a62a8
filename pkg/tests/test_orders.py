import itertools
import math
import random

import pytest

from cycexp.fields import CapExceeded, make_field
from cycexp.orders import (factor_divisor, has_order, order_any, order_bruteforce,
                           order_irreducible, order_power, strip_x)
from cycexp.poly import Polynomial, parse_poly
from oracles import naive_order

F2, F3 = make_field(2), make_field(3)


def test_examples():
    assert order_any(parse_poly("x+1", F2)).order == 1
    assert order_irreducible(parse_poly("x^2+1", F3)) == 4
    assert order_irreducible(parse_poly("x+1", F3)) == 2
    assert order_irreducible(parse_poly("x+2", F3)) == 1
    assert order_power(parse_poly("x^2+1", F3), 3) == 12
    g = parse_poly("2+x+x^2", F3) * parse_poly("1+x^2", F3)
    assert order_bruteforce(g) == order_any(g).order == 8


def test_constant_and_x_factors():
    assert order_any(Polynomial.constant(F3, 2)).order == 1
    g = parse_poly("x^3+x^2", F2)  # x^2 (x+1)
    assert strip_x(g) == parse_poly("x+1", F2)
    assert order_any(g).order == 1
    with pytest.raises(ValueError):
        order_bruteforce(g)
    with pytest.raises(ValueError):
        order_any(Polynomial(F2, []))


def test_methods():
    assert order_any(parse_poly("x^2+1", F3)).method == "via-root"
    assert order_any(parse_poly("x^2+1", F3) ** 2).method == "via-power"
    assert order_any(parse_poly("x^2+1", F3) * parse_poly("x+1", F3)).method == "via-lcm"


def test_order_irreducible_in_spec_field():
    F9 = make_field(3, 2, "x^2+x+2")
    assert order_irreducible(parse_poly("x^2+1", F3), F9) == 4
    with pytest.raises(ValueError):
        order_irreducible(parse_poly("x^2+2", F3))


def test_brute_cap():
    g = parse_poly("x^30+x+1", F2)
    with pytest.raises(CapExceeded):
        order_bruteforce(g, limit=1000)


def test_blocked_scan_matches_naive():
    rng = random.Random(7)
    for p in (2, 3, 5):
        F = make_field(p)
        for _ in range(20):
            cs = [rng.randrange(1, p)] + [rng.randrange(p) for _ in range(7)] + [1]
            g = Polynomial(F, cs)
            if p ** 8 - 1 > 10 ** 6:
                break
            assert order_bruteforce(g) == naive_order(cs, p)


def test_lcm_and_divisibility_laws():
    polys = [Polynomial(F3, [a, b, 1]) for a in (1, 2) for b in range(3)]
    for f, g in itertools.combinations(polys, 2):
        if not {h for h, _ in factor_divisor(f)} & {h for h, _ in factor_divisor(g)}:
            assert order_any(f * g).order == math.lcm(order_any(f).order, order_any(g).order)
        e = order_any(f).order
        assert (Polynomial.xn_minus_1(F3, e) % f).is_zero()
        for k in (2, 3, 5):
            assert ((Polynomial.xn_minus_1(F3, e * k) % f).is_zero())
        assert has_order(f, e)
        assert not has_order(f, 2 * e)


def test_factor_divisor_reconstructs():
    rng = random.Random(3)
    for q in (2, 3, 4, 5, 9):
        F = make_field(q)
        for _ in range(25):
            cs = [rng.randrange(1, q)] + [rng.randrange(q) for _ in range(rng.randrange(1, 9))] + [1]
            g = Polynomial(F, cs)
            prod = Polynomial.constant(F, 1)
            for h, k in factor_divisor(g):
                prod = prod * h ** k
            assert prod == g.monic()


def test_order_beyond_field_limit():
    # x^23 - 1 over F_5 is (x - 1) times one irreducible of degree 22
    F5 = make_field(5)
    g = Polynomial.xn_minus_1(F5, 23) // parse_poly("x-1", F5)
    assert order_irreducible(g) == 23
    assert has_order(g, 23)
