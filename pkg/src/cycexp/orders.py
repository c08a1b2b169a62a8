"""Order of a polynomial: the least e >= 1 with g(x) | x^e - 1.

Two independent routes are provided.  :func:`order_bruteforce` scans
e = 1, 2, ... tracking x^e mod g.  :func:`order_any` factors g into
irreducible powers and combines the per-factor orders: an irreducible factor
has the multiplicative order of its root, a power p_i^k multiplies that by the
least p-power >= k, and coprime factors combine by lcm.

By convention a nonzero constant has order 1.
"""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass

import numpy as np

from .fields import (FIELD_LIMIT, CapExceeded, FieldSpec, element_order, find_primitive,
                     int_factorize, make_field)
from .poly import Polynomial, _divmod, _mul, gcd, is_irreducible, powmod

SCAN_LIMIT = 10 ** 7
# number of exponents checked per vectorised step of the brute-force scan
SCAN_BLOCK = 512


@dataclass(frozen=True)
class FactorOrder:
    factor: Polynomial
    multiplicity: int
    factor_order: int
    order: int


@dataclass(frozen=True)
class OrderResult:
    order: int
    method: str  # "brute" | "via-root" | "via-power" | "via-lcm"
    witness: tuple[FactorOrder, ...] | None = None


def strip_x(g: Polynomial) -> Polynomial:
    """Remove the largest power of x dividing g."""
    if g.is_zero():
        raise ValueError("the zero polynomial has no order")
    cs = g.coeffs
    r = next(i for i, c in enumerate(cs) if c)
    return Polynomial._raw(g.field, cs[r:])


def _check_order_input(g: Polynomial) -> Polynomial:
    if g.is_zero():
        raise ValueError("the zero polynomial has no order")
    if g.coeffs[0] == 0:
        raise ValueError("x divides g; apply strip_x first")
    return g.monic()


def _prime_coords(F: FieldSpec, codes, width: int) -> list[int]:
    p, out = F.p, []
    for c in codes:
        for _ in range(width):
            c, d = divmod(c, p)
            out.append(d)
    return out


def order_bruteforce(g: Polynomial, limit: int | None = None, upper: int | None = None) -> int:
    """Least e in [1, Q^m - 1] with x^e = 1 (mod g), by exhaustive scan.

    ``upper`` lowers the scan bound when a smaller one is known (e.g. the
    length of a cyclic code g generates); not finding e then raises.

    Multiplication by x is F_p-linear on F_Q[x]/(g), so long scans run over
    coordinate vectors and check SCAN_BLOCK consecutive exponents per numpy
    step; every exponent is still tested in increasing order.
    """
    g = _check_order_input(g)
    m = g.degree
    if m == 0:
        return 1
    F = g.field
    bound = F.cardinality ** m - 1 if upper is None else upper
    limit = SCAN_LIMIT if limit is None else limit
    if bound > limit:
        raise CapExceeded(f"scan bound {bound} exceeds the scan limit {limit}")
    if bound <= SCAN_BLOCK:
        return _scan_small(g, bound)
    k = F.prime_degree
    dim, p = m * k, F.p
    # row (j*k + i) is the image under "times x" of p^i * x^j
    rows = []
    for j in range(m):
        for i in range(k):
            img = Polynomial.monomial(F, p ** i, j + 1) % g
            rows.append(_prime_coords(F, img.coeffs + (0,) * (m - len(img.coeffs)), k))
    step = np.array(rows, dtype=np.int64)
    block = min(SCAN_BLOCK, bound)
    powers = np.empty((block, dim, dim), dtype=np.int64)
    powers[0] = step
    for j in range(1, block):
        powers[j] = powers[j - 1] @ step % p
    unit = np.zeros(dim, dtype=np.int64)
    unit[0] = 1
    state, done = unit.copy(), 0
    while done < bound:
        seq = np.einsum("d,jde->je", state, powers) % p
        hits = np.flatnonzero((seq == unit).all(axis=1))
        if hits.size:
            e = done + int(hits[0]) + 1
            if e <= bound:
                return e
            break
        state = seq[-1]
        done += block
    raise ValueError(f"{g} divides no x^e - 1 with e <= {bound}")


def _scan_small(g: Polynomial, bound: int) -> int:
    F, m, gc = g.field, g.degree, g.coeffs
    sub, mul = F.sub, F.mul
    r = [1] + [0] * (m - 1)
    for e in range(1, bound + 1):
        lead = r[-1]
        r = [0] + r[:-1]
        if lead:
            for j in range(m):
                r[j] = sub(r[j], mul(lead, gc[j]))
        if r[0] == 1 and not any(r[1:]):
            return e
    raise ValueError(f"{g} divides no x^e - 1 with e <= {bound}")


def has_order(g: Polynomial, e: int) -> bool:
    """True iff ord(g) == e: g | x^e - 1 and g divides no x^(e/r) - 1, r prime."""
    g = _check_order_input(strip_x(g))
    if g.degree == 0:
        return e == 1
    if powmod(Polynomial.x(g.field), e, g) != 1:
        return False
    return all(powmod(Polynomial.x(g.field), e // r, g) != 1 for r, _ in int_factorize(e))


@functools.lru_cache(maxsize=None)
def _root_order(g: Polynomial) -> int:
    F = g.field
    if g.degree == 1:
        return element_order(F(F.neg(g.coeffs[0])))
    n = F.cardinality ** g.degree - 1
    if n >= FIELD_LIMIT:
        # order of x in F[x]/(g) without building the field
        x = Polynomial.x(F)
        for r, _ in int_factorize(n):
            while n % r == 0 and powmod(x, n // r, g) == 1:
                n //= r
        return n
    ext = make_field(F, g.degree, g)
    return element_order(ext.gen)


def order_irreducible(g: Polynomial, spec: FieldSpec | None = None) -> int:
    """Order of an irreducible g with x not dividing g: the multiplicative order
    of any of its roots.

    Without ``spec`` the root is the class of y in F_q[y]/(g).  With ``spec``
    (a field containing the roots of g) the root is located among the powers
    of its primitive element.
    """
    g = _check_order_input(g)
    if not is_irreducible(g):
        raise ValueError(f"{g} is not irreducible")
    if spec is None or spec.modulus is not None and spec.modulus == g.coeffs and spec.subfield == g.field:
        return _root_order(g)
    if not spec.contains(g.field):
        raise ValueError(f"{spec} does not extend {g.field}")
    beta = find_primitive(spec)
    x = spec(1)
    for _ in range(spec.cardinality - 1):
        if not g(x):
            return element_order(x)
        x = x * beta
    raise ValueError(f"{g} has no root in {spec}")


def _least_p_power(p: int, k: int) -> int:
    pt = 1
    while pt < k:
        pt *= p
    return pt


def order_power(g: Polynomial, k: int, base_order: int | None = None) -> int:
    """ord(g^k) = ord(g) * p^t for irreducible g, t least with p^t >= k."""
    if k < 1:
        raise ValueError("k must be positive")
    e = order_irreducible(g) if base_order is None else base_order
    return e * _least_p_power(g.field.p, k)


# -- factoring a divisor of some x^e - 1 ----------------------------------------

def _pth_root(f: Polynomial) -> Polynomial:
    F = f.field
    p = F.p
    # inverse Frobenius on F_Q is c -> c^(Q/p)
    root = F.cardinality // p
    return Polynomial._raw(F, [F.pow(c, root) for c in f.coeffs[::p]])


def _squarefree(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Squarefree decomposition of a monic f: [(h, i)] with f = prod h^i."""
    if f.degree < 1:
        return []
    out = []
    df = f.derivative()
    if df.is_zero():
        return [(h, i * f.field.p) for h, i in _squarefree(_pth_root(f))]
    c = gcd(f, df)
    w = f // c
    i = 1
    while w.degree > 0:
        y = gcd(w, c)
        fac = w // y
        if fac.degree > 0:
            out.append((fac.monic(), i))
        w, c = y, c // y
        i += 1
    if c.degree > 0:
        out.extend((h, i * f.field.p) for h, i in _squarefree(_pth_root(c.monic())))
    return out


def _distinct_degree(f: Polynomial) -> list[tuple[Polynomial, int]]:
    F = f.field
    Q = F.cardinality
    x = Polynomial.x(F)
    h, out, d = x, [], 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = powmod(h, Q, f)
        g = gcd(f, h - x)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f.monic(), f.degree))
    return out


def _equal_degree(f: Polynomial, d: int, rng: random.Random) -> list[Polynomial]:
    """Split a squarefree product of degree-d irreducibles (Cantor-Zassenhaus)."""
    if f.degree == d:
        return [f]
    F = f.field
    Q = F.cardinality
    n = f.degree
    while True:
        a = Polynomial._raw(F, _random_poly(F, n, rng))
        if a.degree < 1:
            continue
        if F.p == 2:
            # trace from F_(Q^d) down to F_2
            t, b = a % f, a % f
            for _ in range(F.prime_degree * d - 1):
                t = Polynomial._raw(F, _divmod(F, _mul(F, t.coeffs, t.coeffs), f.coeffs)[1])
                b = b + t
        else:
            b = powmod(a, (Q ** d - 1) // 2, f) - 1
        g = gcd(f, b)
        if 0 < g.degree < n:
            return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def _random_poly(F: FieldSpec, n: int, rng: random.Random) -> list[int]:
    cs = [rng.randrange(F.cardinality) for _ in range(n)]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


@functools.lru_cache(maxsize=4096)
def factor_divisor(g: Polynomial) -> tuple[tuple[Polynomial, int], ...]:
    """Irreducible factorization of a monic g with x not dividing g, sorted by
    (degree, coefficients).  Such g always divides x^ord(g) - 1."""
    g = _check_order_input(g)
    rng = random.Random(hash(g.coeffs))
    found: dict[Polynomial, int] = {}
    for h, mult in _squarefree(g):
        for hd, d in _distinct_degree(h):
            for irr in _equal_degree(hd, d, rng):
                irr = irr.monic()
                found[irr] = found.get(irr, 0) + mult
    return tuple(sorted(found.items(), key=lambda t: t[0].sort_key()))


def order_any(g: Polynomial) -> OrderResult:
    """ord(g) via factorization: lcm over factors p_i^k of ord(p_i) * p^t."""
    f = strip_x(g).monic()
    if f.degree == 0:
        return OrderResult(1, "via-lcm", ())
    witness = []
    for irr, k in factor_divisor(f):
        base = order_irreducible(irr)
        witness.append(FactorOrder(irr, k, base, order_power(irr, k, base)))
    order = math.lcm(*(w.order for w in witness))
    if len(witness) > 1:
        method = "via-lcm"
    elif witness[0].multiplicity > 1:
        method = "via-power"
    else:
        method = "via-root"
    return OrderResult(order, method, tuple(witness))
