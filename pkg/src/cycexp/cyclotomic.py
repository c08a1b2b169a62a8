"""Cyclotomic cosets, minimal polynomials and the factorization of x^e - 1."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Mapping

from .fields import (FieldElement, FieldSpec, element_order, find_primitive, int_factorize,
                     make_field, mult_order_mod)
from .orders import factor_divisor
from .poly import Polynomial, _mul, powmod

# Largest splitting field factor_xe_minus_1 will build; beyond it x^e - 1 is
# factored directly over the base field.
EXTENSION_LIMIT = 1 << 32


@dataclass(frozen=True)
class CosetTable:
    """Partition of Z_n into orbits under multiplication by q."""

    modulus: int
    base: int
    cosets: tuple[tuple[int, ...], ...]
    leader_of: Mapping[int, int] = field(repr=False)

    def coset(self, i: int) -> tuple[int, ...]:
        leader = self.leader_of[i % self.modulus]
        return next(c for c in self.cosets if c[0] == leader)

    @property
    def leaders(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.cosets)


@functools.lru_cache(maxsize=1024)
def cyclotomic_cosets(q: int, n: int) -> CosetTable:
    """The q-cyclotomic cosets of Z_n, each sorted, ordered by leader."""
    if n < 1:
        raise ValueError("n must be positive")
    if math.gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) != 1")
    leader_of: dict[int, int] = {}
    cosets = []
    for i in range(n):
        if i in leader_of:
            continue
        orbit, j = [], i
        while j not in orbit:
            orbit.append(j)
            j = j * q % n
        for j in orbit:
            leader_of[j] = i
        cosets.append(tuple(sorted(orbit)))
    return CosetTable(n, q, tuple(cosets), leader_of)


def _to_base(poly_codes, ext: FieldSpec, base: FieldSpec) -> Polynomial:
    if not ext.contains(base):
        raise ValueError(f"{ext} is not an extension of {base}")
    bad = [c for c in poly_codes if c >= base.cardinality]
    if bad:
        raise ArithmeticError(
            f"minimal polynomial has coefficients outside {base}: field arithmetic is inconsistent")
    return Polynomial(base, poly_codes)


def _product_over_roots(ext: FieldSpec, roots) -> list[int]:
    out = [1]
    for r in roots:
        out = _mul(ext, out, [ext.neg(r), 1])
    return out


def element_minimal_polynomial(x: FieldElement, base: FieldSpec) -> Polynomial:
    """Minimal polynomial of ``x`` over ``base``: product over its conjugates
    x, x^Q, x^(Q^2), ... with Q = |base|."""
    ext, Q = x.field, base.cardinality
    conj, v = [], x.value
    while v not in conj:
        conj.append(v)
        v = ext.pow(v, Q)
    return _to_base(_product_over_roots(ext, conj), ext, base)


def minimal_polynomial(i: int, beta: FieldElement, base: FieldSpec) -> Polynomial:
    """M^(i)(x) = prod_{j in C_i} (x - beta^j) for a primitive ``beta``."""
    ext = beta.field
    n = ext.cardinality - 1
    if not _is_primitive(beta):
        raise ValueError(f"{beta} is not primitive in {ext}")
    return _minpoly_cached(beta, i % n, base)


@functools.lru_cache(maxsize=None)
def _is_primitive(beta: FieldElement) -> bool:
    return beta.value != 0 and element_order(beta) == beta.field.cardinality - 1


@functools.lru_cache(maxsize=None)
def _minpoly_cached(beta: FieldElement, i: int, base: FieldSpec) -> Polynomial:
    ext = beta.field
    table = cyclotomic_cosets(base.cardinality, ext.cardinality - 1)
    roots = [ext.pow(beta.value, j) for j in table.coset(i)]
    return _to_base(_product_over_roots(ext, roots), ext, base)


@dataclass(frozen=True)
class Factorization:
    """x^e - 1 = prod p_i^{f_i} over ``field``; ``orders[i]`` is ord(p_i)."""

    field: FieldSpec
    e: int
    modulus_poly: Polynomial
    factors: tuple[tuple[Polynomial, int], ...]
    orders: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.factors)

    def expand(self) -> Polynomial:
        out = Polynomial.constant(self.field, 1)
        for p_i, f_i in self.factors:
            out = out * p_i ** f_i
        return out


def split_p_part(e: int, p: int) -> tuple[int, int]:
    """Return (e', p^s) with e = e' * p^s and p not dividing e'."""
    ps = 1
    while e % p == 0:
        e //= p
        ps *= p
    return e, ps


@functools.lru_cache(maxsize=1024)
def factor_xe_minus_1(field: FieldSpec, e: int) -> Factorization:
    """Complete factorization of x^e - 1 over F_q via cyclotomic cosets.

    With e = e' p^s, x^e - 1 = (x^e' - 1)^(p^s); the factors of x^e' - 1 are
    the minimal polynomials of gamma^leader where gamma has order e' in
    F_(q^m), m = ord_e'(q).  When F_(q^m) exceeds EXTENSION_LIMIT the factors
    come from polynomial factorization instead.
    """
    if e < 1:
        raise ValueError("e must be positive")
    q = field.cardinality
    e1, ps = split_p_part(e, field.p)
    m = mult_order_mod(q, e1)
    if q ** m > EXTENSION_LIMIT:
        items = [(p_i, _divisor_order(p_i, e1))
                 for p_i, _ in factor_divisor(Polynomial.xn_minus_1(field, e1))]
    else:
        ext = make_field(field, m)
        beta = find_primitive(ext)
        gamma = beta ** ((ext.cardinality - 1) // e1)
        items = []
        for coset in cyclotomic_cosets(q, e1).cosets:
            roots = [ext.pow(gamma.value, j) for j in coset]
            p_i = _to_base(_product_over_roots(ext, roots), ext, field)
            items.append((p_i, element_order(gamma ** coset[0])))
    items.sort(key=lambda t: t[0].sort_key())
    return Factorization(
        field, e, Polynomial.xn_minus_1(field, e),
        tuple((p_i, ps) for p_i, _ in items), tuple(o for _, o in items))


def _divisor_order(g: Polynomial, e: int) -> int:
    """ord(g) for g dividing x^e - 1: shrink e while g still divides x^e - 1."""
    x = Polynomial.x(g.field)
    for r, _ in int_factorize(e):
        while e % r == 0 and powmod(x, e // r, g) == 1:
            e //= r
    return e
