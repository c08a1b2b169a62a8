"""BCH and Reed-Solomon generator polynomials and their exponents.

Index conventions follow the usual definitions and differ by one:

* BCH code C(a, delta): generator lcm{M^(i) : a <= i <= a + delta - 2}.
* RS code: generator (x - beta^(a+1)) ... (x - beta^(a+delta-1)).

Indices are taken mod q^m - 1, since beta^i depends only on that residue.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclotomic import cyclotomic_cosets, minimal_polynomial, _is_primitive
from .fields import FieldElement, FieldSpec, element_order, find_primitive, make_field
from .orders import order_any
from .poly import Polynomial

# Run the order_any cross-check on every n-th exponent computation (1 = always).
CROSS_CHECK_EVERY = 1
_calls = 0


@dataclass(frozen=True)
class BchSpec:
    base: FieldSpec
    ext: FieldSpec
    beta: FieldElement
    a: int
    delta: int
    length: int
    generator: Polynomial
    dimension: int
    exponent: int
    reed_solomon: bool = False

    @property
    def indices(self) -> range:
        """Exponents i of the defining zeros beta^i."""
        if self.reed_solomon:
            return range(self.a + 1, self.a + self.delta)
        return range(self.a, self.a + self.delta - 1)

    def to_dict(self) -> dict:
        return {
            "q": self.base.cardinality,
            "m": _degree_over(self.ext, self.base),
            "a": self.a,
            "delta": self.delta,
            "beta": str(self.beta),
            "length": self.length,
            "dimension": self.dimension,
            "generator": str(self.generator),
            "exponent": self.exponent,
            "corollary_applies": self.delta > 2,
        }


def _degree_over(ext: FieldSpec, base: FieldSpec) -> int:
    return round(math.log(ext.cardinality, base.cardinality))


def _check_beta(beta: FieldElement):
    if not _is_primitive(beta):
        raise ValueError(f"{beta} is not a primitive element of {beta.field}")


def bch_generator(base: FieldSpec, ext: FieldSpec, beta: FieldElement, a: int, delta: int) -> Polynomial:
    """Product of M^(i) over the distinct cyclotomic cosets met by a..a+delta-2."""
    n = ext.cardinality - 1
    if not 2 <= delta <= n:
        raise ValueError(f"designed distance {delta} outside [2, {n}]")
    if a < 0:
        raise ValueError("a must be non-negative")
    if beta.field != ext:
        beta = ext(beta)
    _check_beta(beta)
    table = cyclotomic_cosets(base.cardinality, n)
    leaders = sorted({table.leader_of[i % n] for i in range(a, a + delta - 1)})
    g = Polynomial.constant(base, 1)
    for leader in leaders:
        g = g * minimal_polynomial(leader, beta, base)
    return g


def exponent_formula(beta: FieldElement, indices) -> int:
    """lcm of the multiplicative orders of beta^i."""
    return math.lcm(*(element_order(beta ** i) for i in indices))


def _cross_check(spec: BchSpec, exponent: int, cross_check: bool | None):
    global _calls
    _calls += 1
    if cross_check is None:
        cross_check = _calls % CROSS_CHECK_EVERY == 0
    if cross_check:
        direct = order_any(spec.generator).order
        if direct != exponent:
            raise AssertionError(
                f"lcm formula gives {exponent} but ord({spec.generator}) = {direct}")


def bch_exponent(spec: BchSpec, cross_check: bool | None = None) -> int:
    """exp(C) = lcm{ord(beta^i) : i in the defining range}, verified against
    ord(generator) computed by factorization."""
    exponent = exponent_formula(spec.beta, spec.indices)
    _cross_check(spec, exponent, cross_check)
    return exponent


def bch_code(q, m: int, a: int, delta: int, modulus=None, beta=None, *,
             base_modulus=None, cross_check: bool | None = None) -> BchSpec:
    """Build C(a, delta) of length q^m - 1 over F_q.

    ``q`` may be a prime power or a FieldSpec; ``beta`` defaults to the first
    primitive element of F_(q^m) and may be a FieldElement or element string.
    """
    base = q if isinstance(q, FieldSpec) else make_field(q, base_modulus=base_modulus)
    ext = make_field(base, m, modulus)
    beta = find_primitive(ext) if beta is None else ext(beta)
    return build_bch(base, ext, beta, a, delta, cross_check)


def build_bch(base: FieldSpec, ext: FieldSpec, beta: FieldElement, a: int, delta: int,
              cross_check: bool | None = None) -> BchSpec:
    g = bch_generator(base, ext, beta, a, delta)
    n = ext.cardinality - 1
    spec = BchSpec(base, ext, beta, a, delta, n, g, n - g.degree, 0)
    exponent = bch_exponent(spec, cross_check)
    return BchSpec(base, ext, beta, a, delta, n, g, n - g.degree, exponent)


def rs_generator(base: FieldSpec, beta: FieldElement, a: int, delta: int) -> Polynomial:
    q = base.cardinality
    if not 2 <= delta <= q - 1:
        raise ValueError(f"designed distance {delta} outside [2, {q - 1}]")
    if a < 0:
        raise ValueError("a must be non-negative")
    beta = base(beta)
    _check_beta(beta)
    return Polynomial.from_roots(base, [beta ** (a + j) for j in range(1, delta)])


def rs_code(q, a: int, delta: int, beta=None, *, base_modulus=None,
            cross_check: bool | None = None) -> BchSpec:
    """Reed-Solomon code of length q - 1 with zeros beta^(a+1), ..., beta^(a+delta-1)."""
    base = q if isinstance(q, FieldSpec) else make_field(q, base_modulus=base_modulus)
    beta = find_primitive(base) if beta is None else base(beta)
    g = rs_generator(base, beta, a, delta)
    n = base.cardinality - 1
    spec = BchSpec(base, base, beta, a, delta, n, g, n - g.degree, 0, reed_solomon=True)
    exponent = bch_exponent(spec, cross_check)
    return BchSpec(base, base, beta, a, delta, n, g, n - g.degree, exponent, reed_solomon=True)


def rs_exponent(base: FieldSpec, beta, a: int, delta: int, cross_check: bool | None = None) -> int:
    """exp(C) = lcm{ord(beta^i) : a+1 <= i <= a+delta-1}."""
    return rs_code(base, a, delta, beta, cross_check=cross_check).exponent


def check_delta_corollary(spec: BchSpec) -> bool:
    """delta > 2 implies the exponent equals the length."""
    return spec.delta <= 2 or spec.exponent == spec.length


def second_primitive(beta: FieldElement) -> FieldElement:
    """beta^k for the least k > 1 coprime to |F| - 1."""
    n = beta.field.cardinality - 1
    k = next(k for k in range(2, n + 1) if math.gcd(k, n) == 1)
    return beta ** k


def check_primitive_independence(base: FieldSpec, ext: FieldSpec, a: int, delta: int,
                                 betas: tuple[FieldElement, FieldElement] | None = None,
                                 cross_check: bool | None = None) -> bool:
    """The exponent of C(a, delta) does not depend on the primitive element."""
    if ext.cardinality <= 3:
        raise ValueError(f"{ext} has a single primitive element")
    if betas is None:
        first = find_primitive(ext)
        betas = (first, second_primitive(first))
    alpha, beta = betas
    if alpha == beta:
        raise ValueError("need two distinct primitive elements")
    first, other = (build_bch(base, ext, b, a, delta, cross_check) for b in (alpha, beta))
    return first.exponent == other.exponent
