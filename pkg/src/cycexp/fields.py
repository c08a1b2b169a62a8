"""Finite fields F_q and their extensions F_{q^m}.

Every field element is stored as a non-negative integer.  For a prime field
F_p the integer is the residue itself.  For an extension F = K[y]/(h(y)) the
integer ``c_0 + c_1*|K| + ... + c_{m-1}*|K|^(m-1)`` encodes
``c_0 + c_1*y + ... + c_{m-1}*y^(m-1)`` with every ``c_j`` an element code of K.
Unrolled all the way down, the base-p digits of a code are its coordinates
over the prime field, so:

* the prime field (and every intermediate subfield) is exactly the set of
  codes below its cardinality, which makes embedding free;
* addition is digit-wise addition mod p (XOR in characteristic 2).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

# Fields up to this size get log/exp tables; larger ones multiply directly.
TABLE_LIMIT = 1 << 16
# Fields up to this size also get full addition and multiplication tables.
SMALL_TABLE_LIMIT = 256
# Largest cardinality make_field will construct.
FIELD_LIMIT = 1 << 48
# Largest trial divisor int_factorize will try before giving up.
TRIAL_LIMIT = 1 << 26

_SYMBOLS = "abcdefgh"


class FieldError(ValueError):
    """Invalid field parameters, e.g. a reducible modulus."""


class CapExceeded(ArithmeticError):
    """A configured desk-scale limit would be exceeded."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@functools.lru_cache(maxsize=4096)
def int_factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` by trial division, as ``((p, e), ...)``.

    >>> int_factorize(728)
    ((2, 3), (7, 1), (13, 1))
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if d > TRIAL_LIMIT:
            raise CapExceeded(f"factoring {n} needs trial divisors beyond {TRIAL_LIMIT}")
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    result = n
    for r, _ in int_factorize(n):
        result -= result // r
    return result


def mult_order_mod(q: int, e: int) -> int:
    """Least ``d >= 1`` with ``q^d = 1 (mod e)``."""
    if e < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(q, e) != 1:
        raise ValueError(f"gcd({q}, {e}) != 1, so {q} has no order mod {e}")
    if e == 1:
        return 1
    d = euler_phi(e)
    for r, k in int_factorize(d):
        for _ in range(k):
            if pow(q, d // r, e) == 1:
                d //= r
            else:
                break
    return d


@dataclass(frozen=True)
class PrimePower:
    p: int
    k: int
    q: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        if self.k < 1 or self.p ** self.k != self.q:
            raise FieldError(f"{self.q} != {self.p}^{self.k}")

    @classmethod
    def from_int(cls, q: int) -> PrimePower:
        if q < 2:
            raise FieldError(f"{q} is not a prime power")
        p = int_factorize(q)[0][0]
        k, rest = 0, q
        while rest % p == 0:
            rest //= p
            k += 1
        if rest != 1:
            raise FieldError(f"{q} is not a prime power")
        return cls(p, k, q)


class FieldSpec:
    """A finite field, either F_p or an extension ``subfield[y]/(modulus)``.

    Build instances with :func:`make_field`; they are immutable and hashable.
    ``base`` is the cardinality of the subfield as a :class:`PrimePower`
    (the field itself for a prime field), ``degree`` the extension degree over
    it and ``modulus`` the monic defining polynomial as a tuple of subfield
    codes, lowest degree first.
    """

    def __init__(self, p: int, subfield: FieldSpec | None = None,
                 modulus: tuple[int, ...] | None = None):
        self.p = p
        self.subfield = subfield
        self.modulus = modulus
        if subfield is None:
            self.degree = 1
            self.base = PrimePower(p, 1, p)
            self.prime_degree = 1
            self.depth = 0
            self.symbol = None
        else:
            self.degree = len(modulus) - 1
            self.base = PrimePower(p, subfield.prime_degree, subfield.cardinality)
            self.prime_degree = subfield.prime_degree * self.degree
            self.depth = subfield.depth + 1
            self.symbol = _SYMBOLS[self.depth - 1]
        self.cardinality = p ** self.prime_degree
        self._key = (p, None if subfield is None else subfield._key, modulus)
        self._exp = self._log = None
        self._setup_arith()

    # -- construction of the arithmetic kernels --------------------------

    def _setup_arith(self):
        p = self.p
        if self.subfield is None:
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.neg = lambda a: -a % p
            self.mul = lambda a, b: a * b % p
            self.add_table = self.mul_table = None
            return
        if p == 2:
            self.add = self.sub = lambda a, b: a ^ b
            self.neg = lambda a: a
        else:
            self.add = self._add_digits
            self.sub = lambda a, b: self._add_digits(a, self._neg_digits(b))
            self.neg = self._neg_digits
        self.add_table = self.mul_table = None
        if self.cardinality <= TABLE_LIMIT:
            # tables pay for themselves once the field sees real use
            self._slow_budget = self.cardinality
            self.mul = self._mul_counting
        else:
            self.mul = self._mul_slow

    def _mul_counting(self, a: int, b: int) -> int:
        self._slow_budget -= 1
        if self._slow_budget < 0:
            self.build_tables()
            return self.mul(a, b)
        return self._mul_slow(a, b)

    def build_tables(self):
        """Switch to table-driven arithmetic (log/exp, plus full tables when small)."""
        if self._log is not None or self.subfield is None or self.cardinality > TABLE_LIMIT:
            return
        p, n = self.p, self.cardinality
        self._build_log_tables()
        if n <= SMALL_TABLE_LIMIT:
            add, mul = self.add, self.mul
            self.add_table = [[add(a, b) for b in range(n)] for a in range(n)]
            self.mul_table = [[mul(a, b) for b in range(n)] for a in range(n)]
            if p != 2:
                at = self.add_table
                neg = [self._neg_digits(a) for a in range(n)]
                self.add = lambda a, b: at[a][b]
                self.sub = lambda a, b: at[a][neg[b]]
                self.neg = neg.__getitem__
            mt = self.mul_table
            self.mul = lambda a, b: mt[a][b]

    def _build_log_tables(self):
        order = self.cardinality - 1
        g = next(v for v in range(1, self.cardinality)
                 if _order_of(self, v, self._pow_slow) == order)
        exp = [0] * (2 * order)
        log = [0] * self.cardinality
        cur = 1
        for i in range(order):
            exp[i] = exp[i + order] = cur
            log[cur] = i
            cur = self._mul_slow(cur, g)
        self._exp, self._log = exp, log

        def mul(a, b):
            if a == 0 or b == 0:
                return 0
            return exp[log[a] + log[b]]

        self.mul = mul

    def _add_digits(self, a: int, b: int) -> int:
        p, out, place = self.p, 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += (x + y) % p * place
            place *= p
        return out

    def _neg_digits(self, a: int) -> int:
        p, out, place = self.p, 0, 1
        while a:
            a, x = divmod(a, p)
            out += -x % p * place
            place *= p
        return out

    def _mul_slow(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        K, m, h = self.subfield, self.degree, self.modulus
        av, bv = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(av):
            if x:
                for j, y in enumerate(bv):
                    if y:
                        prod[i + j] = K.add(prod[i + j], K.mul(x, y))
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k]
            if c:
                for j in range(m):
                    if h[j]:
                        prod[k - m + j] = K.sub(prod[k - m + j], K.mul(c, h[j]))
        return self.from_coeffs(prod[:m])

    def _pow_slow(self, a: int, k: int) -> int:
        result = 1
        while k:
            if k & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            k >>= 1
        return result

    # -- public arithmetic on element codes ------------------------------

    @property
    def is_prime(self) -> bool:
        return self.subfield is None

    def pow(self, a: int, k: int) -> int:
        n = self.cardinality - 1
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if k == 0 else 0
        if self.subfield is None:
            return pow(a, k % n, self.p)
        if self._log is not None:
            return self._exp[self._log[a] * k % n]
        return self._pow_slow(a, k % n)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, -1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def coeffs(self, v: int) -> tuple[int, ...]:
        """Coordinates of ``v`` over the subfield, lowest degree first."""
        if self.subfield is None:
            return (v,)
        Q = self.subfield.cardinality
        out = []
        for _ in range(self.degree):
            v, c = divmod(v, Q)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, cs: Sequence[int]) -> int:
        if self.subfield is None:
            (c,) = cs
            return c
        Q, v = self.subfield.cardinality, 0
        for c in reversed(cs):
            v = v * Q + c
        return v

    def contains(self, other: FieldSpec) -> bool:
        """True if ``other`` is this field or a subfield in its tower."""
        f = self
        while f is not None:
            if f == other:
                return True
            f = f.subfield
        return False

    # -- element-level API ------------------------------------------------

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if not self.contains(value.field):
                raise FieldError(f"{value!r} does not lie in {self}")
            return FieldElement(self, value.value)
        if isinstance(value, str):
            from .poly import parse_element
            return parse_element(value, self)
        if not 0 <= value < self.cardinality:
            raise FieldError(f"code {value} out of range for {self}")
        return FieldElement(self, value)

    @property
    def gen(self) -> FieldElement:
        """Residue class of the extension variable ``y``."""
        if self.subfield is None:
            raise FieldError("a prime field has no extension generator")
        return FieldElement(self, self.subfield.cardinality if self.degree > 1 else
                            self.subfield.neg(self.modulus[0]))

    def elements(self) -> Iterator[FieldElement]:
        for v in range(self.cardinality):
            yield FieldElement(self, v)

    @property
    def modulus_poly(self):
        from .poly import Polynomial
        if self.modulus is None:
            return None
        return Polynomial(self.subfield, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.subfield is None:
            return f"GF({self.p})"
        return f"GF({self.cardinality}, modulus={format_poly_codes(self.modulus, self.subfield, self.symbol)!r})"


class FieldElement:
    """A field element: a :class:`FieldSpec` plus its canonical code."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field == self.field:
                return other.value
            if self.field.contains(other.field):
                return other.value
            raise FieldError(f"mixing elements of {self.field} and {other.field}")
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def order(self) -> int:
        return element_order(self)

    def __str__(self):
        return format_element(self.field, self.value)

    def __repr__(self):
        return f"{self.field!r}({format_element(self.field, self.value)!r})"


def _order_of(field: FieldSpec, v: int, power) -> int:
    n = field.cardinality - 1
    order = n
    for r, k in int_factorize(n):
        for _ in range(k):
            if power(v, order // r) == 1:
                order //= r
            else:
                break
    return order


def element_order(x: FieldElement) -> int:
    """Multiplicative order of a nonzero element.

    Starts from ``|F| - 1`` and strips prime factors while the power stays 1.
    """
    if not x.value:
        raise ValueError("0 has no multiplicative order")
    return _order_of(x.field, x.value, x.field.pow)


@functools.lru_cache(maxsize=None)
def find_primitive(field: FieldSpec) -> FieldElement:
    """First element, in increasing code order, of full multiplicative order."""
    n = field.cardinality - 1
    if field._log is not None:
        # the table generator is a primitive element; still honour code order
        log = field._log
        for v in range(1, field.cardinality):
            if math.gcd(log[v], n) == 1:
                return FieldElement(field, v)
    for v in range(1, field.cardinality):
        if _order_of(field, v, field.pow) == n:
            return FieldElement(field, v)
    raise AssertionError(f"{field} has no primitive element")


@functools.lru_cache(maxsize=None)
def prime_field(p: int) -> FieldSpec:
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    return FieldSpec(p)


def _modulus_codes(base: FieldSpec, modulus) -> tuple[int, ...]:
    from .poly import Polynomial, parse_poly
    if isinstance(modulus, str):
        modulus = parse_poly(modulus, base)
    if isinstance(modulus, Polynomial):
        if modulus.field != base:
            raise FieldError(f"modulus is over {modulus.field}, expected {base}")
        return modulus.coeffs
    codes = tuple(int(c) for c in modulus)
    if any(not 0 <= c < base.cardinality for c in codes):
        raise FieldError(f"modulus coefficients must be codes of {base}")
    while codes and codes[-1] == 0:
        codes = codes[:-1]
    return codes


@functools.lru_cache(maxsize=None)
def _extension(base: FieldSpec, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(base.p, base, modulus)


def _first_irreducible(base: FieldSpec, m: int) -> tuple[int, ...]:
    from .poly import Polynomial, is_irreducible
    Q = base.cardinality
    for v in range(Q ** m):
        low = []
        for _ in range(m):
            v, c = divmod(v, Q)
            low.append(c)
        f = Polynomial(base, low + [1])
        if is_irreducible(f):
            return f.coeffs
    raise AssertionError(f"no irreducible polynomial of degree {m} over {base}")


def make_field(q, m: int = 1, modulus=None, *, base_modulus=None) -> FieldSpec:
    """Build F_{q^m}.

    ``q`` is a prime power (int or :class:`PrimePower`) or an existing
    :class:`FieldSpec` to extend.  For non-prime ``q`` the field F_q itself is
    F_p[a]/(base_modulus).  Omitted moduli are the first irreducible monic
    polynomial in increasing code order of the lower coefficients; supplied
    ones must be monic of the right degree and irreducible.
    """
    from .poly import Polynomial, is_irreducible

    if isinstance(q, FieldSpec):
        if base_modulus is not None:
            raise FieldError("base_modulus only applies when q is an integer")
        base = q
    else:
        pp = q if isinstance(q, PrimePower) else PrimePower.from_int(int(q))
        base = prime_field(pp.p)
        if pp.k > 1:
            base = make_field(base, pp.k, base_modulus)
        elif base_modulus is not None:
            raise FieldError("base_modulus given but q is prime")
    if m < 1:
        raise FieldError(f"extension degree must be positive, got {m}")
    if base.cardinality ** m > FIELD_LIMIT:
        raise CapExceeded(f"GF({base.cardinality}^{m}) exceeds the field size limit {FIELD_LIMIT}")
    if modulus is None:
        if m == 1:
            return base
        codes = _first_irreducible(base, m)
    else:
        codes = _modulus_codes(base, modulus)
        if len(codes) - 1 != m:
            raise FieldError(f"modulus has degree {len(codes) - 1}, expected {m}")
        if codes[-1] != 1:
            raise FieldError("modulus must be monic")
        if m == 1:
            return base
        if not is_irreducible(Polynomial(base, codes)):
            raise FieldError(f"modulus {format_poly_codes(codes, base, 'x')} is reducible over {base}")
    return _extension(base, codes)


# -- text formatting shared with the poly module ------------------------------

def format_coeff(field: FieldSpec, c: int) -> str:
    return str(c) if c < field.p else f"({format_element(field, c)})"


def format_poly_codes(codes: Sequence[int], field: FieldSpec, var: str) -> str:
    terms = []
    for j in range(len(codes) - 1, -1, -1):
        c = codes[j]
        if not c:
            continue
        mono = "" if j == 0 else var if j == 1 else f"{var}^{j}"
        if not mono:
            terms.append(format_coeff(field, c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(format_coeff(field, c) + mono)
    return " + ".join(terms) or "0"


def format_element(field: FieldSpec, v: int) -> str:
    if field.subfield is None:
        return str(v)
    return format_poly_codes(field.coeffs(v), field.subfield, field.symbol)
