import pytest

from cycexp.bch import (bch_code, build_bch, check_delta_corollary, check_primitive_independence,
                        rs_code, rs_exponent, second_primitive)
from cycexp.fields import element_order, find_primitive, make_field
from cycexp.orders import order_bruteforce
from cycexp.poly import Polynomial, parse_poly
from oracles import naive_order

F2, F3, F5 = make_field(2), make_field(3), make_field(5)
F16 = make_field(2, 4, "x^4+x+1")
F9 = make_field(3, 2, "x^2+x+2")


def test_binary_15_9():
    spec = bch_code(2, 4, 5, 3, F16.modulus_poly)
    assert spec.generator == parse_poly("1+x+x^2", F2) * parse_poly("1+x+x^2+x^3+x^4", F2)
    assert str(spec.generator) == "x^6 + x^4 + x^3 + x^2 + 1"
    assert (spec.length, spec.dimension, spec.exponent) == (15, 9, 15)
    assert naive_order(list(spec.generator.coeffs), 2) == 15


def test_binary_15_13():
    spec = bch_code(2, 4, 5, 2, F16.modulus_poly)
    assert str(spec.generator) == "x^2 + x + 1"
    assert (spec.dimension, spec.exponent) == (13, 3)


def test_ternary_8_4_and_8_6():
    spec = bch_code(3, 2, 1, 4, F9.modulus_poly)
    assert spec.generator == parse_poly("2+x+x^2", F3) * parse_poly("1+x^2", F3)
    assert (spec.dimension, spec.exponent) == (4, 8)
    spec = bch_code(3, 2, 2, 2, F9.modulus_poly)
    assert str(spec.generator) == "x^2 + 1"
    assert (spec.dimension, spec.exponent) == (6, 4)


def test_to_dict():
    d = bch_code(2, 4, 5, 3, F16.modulus_poly).to_dict()
    assert d["q"] == 2 and d["m"] == 4 and d["exponent"] == 15 and d["corollary_applies"]


def test_invalid_parameters():
    with pytest.raises(ValueError):
        bch_code(2, 4, 1, 1)
    with pytest.raises(ValueError):
        bch_code(2, 4, 1, 16)
    with pytest.raises(ValueError):
        bch_code(2, 4, 1, 3, beta=F16.gen ** 3)  # order 5, not primitive


def test_reed_solomon_gf5():
    spec = rs_code(5, 0, 3)
    beta = find_primitive(F5)
    assert spec.generator == Polynomial.from_roots(F5, [beta, beta ** 2])
    assert spec.exponent == 4
    assert spec.exponent == naive_order(list(spec.generator.coeffs), 5)
    assert rs_exponent(F5, beta, 1, 2) == element_order(beta ** 2) == 2


def test_reed_solomon_gf16():
    for a in range(15):
        for delta in range(2, 6):
            spec = rs_code(F16, a, delta)
            assert spec.exponent == order_bruteforce(spec.generator)


def test_rs_is_bch_with_m1():
    for F in (F5, make_field(7), make_field(4)):
        n = F.cardinality - 1
        for a in range(n):
            for delta in range(2, n + 1):
                rs = rs_code(F, a, delta)
                bch = bch_code(F, 1, a + 1, delta)
                assert rs.generator == bch.generator
                assert rs.exponent == bch.exponent


def test_delta_corollary():
    for a in range(15):
        for delta in range(3, 9):
            spec = bch_code(F2, 4, a, delta, F16.modulus_poly)
            assert check_delta_corollary(spec)
            assert spec.exponent == 15


def test_primitive_independence():
    b16 = F16.gen
    assert second_primitive(b16) == b16 ** 2
    for a in range(15):
        for delta in range(2, 9):
            assert check_primitive_independence(F2, F16, a, delta, (b16, b16 ** 7))
    for a in range(8):
        for delta in range(2, 9):
            assert check_primitive_independence(F3, F9, a, delta, (F9.gen, F9.gen ** 5))


@pytest.mark.parametrize("q,m", [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (4, 2), (4, 3),
                                 (5, 2), (7, 2), (2, 7)])
def test_formula_matches_generator_order(q, m):
    base = make_field(q)
    ext = make_field(base, m)
    beta = find_primitive(ext)
    n = ext.cardinality - 1
    for a in range(0, n, max(1, n // 12)):
        for delta in range(2, min(n, 6) + 1):
            spec = build_bch(base, ext, beta, a, delta, cross_check=True)
            if n <= 255:
                assert spec.exponent == order_bruteforce(spec.generator, upper=n)
