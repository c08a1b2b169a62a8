import itertools

import pytest

from cycexp.cyclotomic import (cyclotomic_cosets, element_minimal_polynomial, factor_xe_minus_1,
                               minimal_polynomial, split_p_part)
from cycexp.fields import find_primitive, make_field
from cycexp.orders import order_irreducible
from cycexp.poly import Polynomial, is_irreducible, parse_poly

SMALL = [(q, m) for q in (2, 3, 4, 5, 7) for m in range(1, 9) if 2 < q ** m <= 256]


def test_cosets_of_3_mod_8():
    t = cyclotomic_cosets(3, 8)
    assert t.cosets == ((0,), (1, 3), (2, 6), (4,), (5, 7))
    assert t.leaders == (0, 1, 2, 4, 5)
    assert t.coset(7) == (5, 7)


def test_cosets_partition():
    for q, n in [(2, 15), (2, 63), (3, 26), (4, 63), (5, 24)]:
        t = cyclotomic_cosets(q, n)
        flat = sorted(itertools.chain.from_iterable(t.cosets))
        assert flat == list(range(n))
        for c in t.cosets:
            assert {i * q % n for i in c} == set(c)
    with pytest.raises(ValueError):
        cyclotomic_cosets(2, 6)


def test_minimal_polynomial_examples():
    F2, F3 = make_field(2), make_field(3)
    F16 = make_field(2, 4, "x^4+x+1")
    F9 = make_field(3, 2, "x^2+x+2")
    assert str(minimal_polynomial(5, F16.gen, F2)) == "x^2 + x + 1"
    assert str(minimal_polynomial(3, F16.gen, F2)) == "x^4 + x^3 + x^2 + x + 1"
    assert str(minimal_polynomial(1, F16.gen, F2)) == "x^4 + x + 1"
    assert str(minimal_polynomial(2, F9.gen, F3)) == "x^2 + 1"
    assert minimal_polynomial(1, F9.gen, F3) * minimal_polynomial(2, F9.gen, F3) == \
        parse_poly("2+x+x^2", F3) * parse_poly("1+x^2", F3)


@pytest.mark.parametrize("q,m", SMALL)
def test_minimal_polynomial_laws(q, m):
    base = make_field(q)
    ext = make_field(base, m)
    beta = find_primitive(ext)
    n = ext.cardinality - 1
    table = cyclotomic_cosets(q, n)
    prod = Polynomial.constant(base, 1)
    for coset in table.cosets:
        mp = minimal_polynomial(coset[0], beta, base)
        assert mp.degree == len(coset)
        assert mp.is_monic() and is_irreducible(mp)
        assert all(minimal_polynomial(s, beta, base) == mp for s in coset)
        assert not mp(beta ** coset[-1])
        prod = prod * mp
    assert prod == Polynomial.xn_minus_1(base, n)
    # distinct cosets give distinct polynomials
    assert len({minimal_polynomial(c[0], beta, base) for c in table.cosets}) == len(table.cosets)


def test_element_minimal_polynomial():
    F4 = make_field(4)
    F2 = make_field(2)
    assert str(element_minimal_polynomial(F4.gen, F2)) == "x^2 + x + 1"
    assert str(element_minimal_polynomial(F4(1), F2)) == "x + 1"


def test_split_p_part():
    assert split_p_part(12, 3) == (4, 3)
    assert split_p_part(7, 2) == (7, 1)


def test_x12_minus_1_over_f3():
    F3 = make_field(3)
    fac = factor_xe_minus_1(F3, 12)
    assert {(str(p), f) for p, f in fac.factors} == {("x + 1", 3), ("x + 2", 3), ("x^2 + 1", 3)}
    assert fac.orders == (2, 1, 4)
    assert fac.r == 3
    assert fac.expand() == Polynomial.xn_minus_1(F3, 12)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_refactorization(q):
    F = make_field(q)
    for e in range(1, 31):
        fac = factor_xe_minus_1(F, e)
        assert fac.expand() == Polynomial.xn_minus_1(F, e)
        for (p_i, _), o in zip(fac.factors, fac.orders):
            assert is_irreducible(p_i) and p_i.is_monic()
            assert o == order_irreducible(p_i)
        assert len({p for p, _ in fac.factors}) == fac.r
