"""Dense univariate polynomials over a :class:`~cycexp.fields.FieldSpec`.

Coefficients are element codes, lowest degree first, with no trailing zeros
(the zero polynomial has an empty tuple).  Arithmetic works on plain lists
internally; prime fields take an integer fast path.

Text grammar accepted by :func:`parse_poly`::

    poly  := ["+"|"-"] term (("+"|"-") term)*  |  "[" c0 "," c1 "," ... "]"
    term  := coeff ["*"] [var ["^" int]]  |  var ["^" int]
    coeff := int | "(" element ")"

Integer coefficients must be below the characteristic.  A parenthesised
element of an extension field is itself a polynomial in the field's symbol
(``a`` for F_p[a]/(h), ``b`` one level up) with coefficients in the subfield.
"""

from __future__ import annotations

import re
from typing import Iterable

from .fields import (FieldElement, FieldError, FieldSpec, format_poly_codes,
                     int_factorize)


class ParseError(ValueError):
    pass


# -- list kernels ----------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _add(F: FieldSpec, a, b) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    add = F.add
    for i, c in enumerate(b):
        out[i] = add(out[i], c)
    return _trim(out)


def _sub(F: FieldSpec, a, b) -> list[int]:
    n = max(len(a), len(b))
    out = list(a) + [0] * (n - len(a))
    sub = F.sub
    for i, c in enumerate(b):
        out[i] = sub(out[i], c)
    return _trim(out)


def _mul(F: FieldSpec, a, b) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    if F.subfield is None:
        p = F.p
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return _trim([c % p for c in out])
    mt = F.mul_table
    if mt is not None and F.p == 2:
        for i, x in enumerate(a):
            if x:
                row = mt[x]
                for j, y in enumerate(b):
                    if y:
                        out[i + j] ^= row[y]
        return _trim(out)
    add, mul = F.add, F.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return _trim(out)


def _divmod(F: FieldSpec, a, b) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], list(a)
    r = list(a)
    quo = [0] * (len(a) - db)
    inv_lead = F.inv(b[-1])
    if F.subfield is None:
        p = F.p
        for k in range(len(a) - 1, db - 1, -1):
            c = r[k] % p
            if c:
                c = c * inv_lead % p
                quo[k - db] = c
                for j in range(db + 1):
                    r[k - db + j] -= c * b[j]
        return _trim(quo), _trim([c % p for c in r[:db]])
    sub, mul = F.sub, F.mul
    for k in range(len(a) - 1, db - 1, -1):
        c = r[k]
        if c:
            c = mul(c, inv_lead)
            quo[k - db] = c
            for j in range(db + 1):
                if b[j]:
                    r[k - db + j] = sub(r[k - db + j], mul(c, b[j]))
    return _trim(quo), _trim(r[:db])


def _scale(F: FieldSpec, a, c: int) -> list[int]:
    if c == 0:
        return []
    mul = F.mul
    return [mul(x, c) for x in a]


# -- the value type -------------------------------------------------------------------

class Polynomial:
    """Immutable polynomial; supports ``+ - * // % divmod **``, evaluation via
    call, equality and hashing."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Iterable = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if not field.contains(c.field):
                    raise FieldError(f"coefficient {c!r} is not in {field}")
                c = c.value
            elif not 0 <= c < field.cardinality:
                raise FieldError(f"coefficient code {c} out of range for {field}")
            cs.append(c)
        self.field = field
        self.coeffs = tuple(_trim(cs))

    @classmethod
    def _raw(cls, field: FieldSpec, coeffs) -> Polynomial:
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def x(cls, field: FieldSpec) -> Polynomial:
        return cls._raw(field, (0, 1))

    @classmethod
    def constant(cls, field: FieldSpec, c: int) -> Polynomial:
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: FieldSpec, c: int, n: int) -> Polynomial:
        return cls(field, [0] * n + [c])

    @classmethod
    def xn_minus_1(cls, field: FieldSpec, n: int) -> Polynomial:
        if n < 1:
            raise ValueError("need n >= 1")
        return cls._raw(field, [field.neg(1)] + [0] * (n - 1) + [1])

    @classmethod
    def from_roots(cls, field: FieldSpec, roots: Iterable) -> Polynomial:
        """``prod (x - r)``; roots may be FieldElements of ``field`` or codes."""
        out = [1]
        for r in roots:
            r = r.value if isinstance(r, FieldElement) else r
            out = _mul(field, out, [field.neg(r), 1])
        return cls._raw(field, out)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def monic(self) -> Polynomial:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return Polynomial._raw(self.field, _scale(self.field, self.coeffs, self.field.inv(self.lead)))

    def over(self, field: FieldSpec) -> Polynomial:
        """Reinterpret the coefficients in ``field``, which must contain them."""
        if field.contains(self.field):
            return Polynomial._raw(field, self.coeffs)
        if self.field.contains(field):
            if any(c >= field.cardinality for c in self.coeffs):
                raise FieldError(f"{self} has coefficients outside {field}")
            return Polynomial._raw(field, self.coeffs)
        raise FieldError(f"{self.field} and {field} are not in one tower")

    def _other(self, other) -> tuple[int, ...]:
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldError(f"mixing polynomials over {self.field} and {other.field}")
            return other.coeffs
        if isinstance(other, FieldElement):
            return Polynomial(self.field, [other]).coeffs
        if isinstance(other, int):
            return tuple(_trim([other % self.field.p]))
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Polynomial._raw(self.field, _add(self.field, self.coeffs, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Polynomial._raw(self.field, _sub(self.field, self.coeffs, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Polynomial._raw(self.field, _sub(self.field, b, self.coeffs))

    def __neg__(self):
        neg = self.field.neg
        return Polynomial._raw(self.field, [neg(c) for c in self.coeffs])

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Polynomial._raw(self.field, _mul(self.field, self.coeffs, b))

    __rmul__ = __mul__

    def __divmod__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        q, r = _divmod(self.field, self.coeffs, b)
        return Polynomial._raw(self.field, q), Polynomial._raw(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result, base = [1], list(self.coeffs)
        while k:
            if k & 1:
                result = _mul(self.field, result, base)
            k >>= 1
            if k:
                base = _mul(self.field, base, base)
        return Polynomial._raw(self.field, result)

    def shift(self, n: int) -> Polynomial:
        """Multiply by x^n."""
        if not self.coeffs:
            return self
        return Polynomial._raw(self.field, (0,) * n + self.coeffs)

    def derivative(self) -> Polynomial:
        F = self.field
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            k = i % F.p
            out.append(F.mul(c, k) if k else 0)
        return Polynomial._raw(F, _trim(out))

    def __call__(self, x):
        """Evaluate at a field element of this field or any extension of it."""
        if isinstance(x, FieldElement):
            F = x.field
            if not F.contains(self.field):
                raise FieldError(f"cannot evaluate a polynomial over {self.field} in {F}")
            v = x.value
        else:
            F, v = self.field, x
        acc = 0
        add, mul = F.add, F.mul
        for c in reversed(self.coeffs):
            acc = add(mul(acc, v), c)
        return FieldElement(F, acc)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == tuple(_trim([other % self.field.p]))
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({self.field!r}, {format_poly(self)!r})"

    def sort_key(self):
        return (self.degree, self.coeffs)


# -- gcd, powers, irreducibility ------------------------------------------------------

def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; ``gcd(0, 0) == 0``."""
    F = a.field
    if b.field != F:
        raise FieldError("gcd of polynomials over different fields")
    x, y = list(a.coeffs), list(b.coeffs)
    while y:
        x, y = y, _divmod(F, x, y)[1]
    return Polynomial._raw(F, x).monic()


def lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return Polynomial._raw(a.field, ())
    return (a * b // gcd(a, b)).monic()


def divides(a: Polynomial, b: Polynomial) -> bool:
    return (b % a).is_zero()


def powmod(a: Polynomial, n: int, f: Polynomial) -> Polynomial:
    """``a^n mod f`` by square-and-multiply."""
    F = f.field
    if n < 0:
        raise ValueError("negative exponent")
    m = f.coeffs
    base = _divmod(F, a.coeffs, m)[1]
    result = _divmod(F, [1], m)[1]
    while n:
        if n & 1:
            result = _divmod(F, _mul(F, result, base), m)[1]
        n >>= 1
        if n:
            base = _divmod(F, _mul(F, base, base), m)[1]
    return Polynomial._raw(F, result)


def x_pow_mod(n: int, f: Polynomial) -> Polynomial:
    return powmod(Polynomial.x(f.field), n, f)


def is_irreducible(f: Polynomial) -> bool:
    """Rabin's test: f of degree m is irreducible iff x^(Q^m) = x (mod f) and
    gcd(x^(Q^(m/r)) - x, f) = 1 for every prime r dividing m."""
    m = f.degree
    if m < 1:
        return False
    if m == 1:
        return True
    Q = f.field.cardinality
    f = f.monic()
    x = Polynomial.x(f.field)
    if not (powmod(x, Q ** m, f) - x).is_zero():
        return False
    for r, _ in int_factorize(m):
        h = powmod(x, Q ** (m // r), f) - x
        if gcd(h, f).degree != 0:
            return False
    return True


# -- text I/O -------------------------------------------------------------------------

def format_poly(p: Polynomial, var: str = "x") -> str:
    """Descending-degree form, e.g. ``x^2 + 2x + (a + 1)``."""
    return format_poly_codes(p.coeffs, p.field, var)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                raise ParseError(f"cannot tokenize {text[pos:]!r}")
            num, name, sym = m.groups()
            if num is not None:
                self.tokens.append(("int", int(num)))
            elif name is not None:
                self.tokens.append(("name", name))
            else:
                self.tokens.append(("sym", sym.replace("−", "-")))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, sym: str):
        kind, val = self.take()
        if kind != "sym" or val != sym:
            raise ParseError(f"expected {sym!r} in {self.text!r}")

    def done(self):
        if self.i != len(self.tokens):
            raise ParseError(f"trailing input {self.tokens[self.i][1]!r} in {self.text!r}")

    def sum(self, field: FieldSpec, var: str | None) -> dict[int, int]:
        acc: dict[int, int] = {}
        kind, val = self.peek()
        negate = False
        if kind == "sym" and val in "+-":
            self.take()
            negate = val == "-"
        while True:
            c, deg = self.term(field, var)
            if negate:
                c = field.neg(c)
            acc[deg] = field.add(acc.get(deg, 0), c)
            kind, val = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                negate = val == "-"
            else:
                return acc

    def term(self, field: FieldSpec, var: str | None) -> tuple[int, int]:
        kind, val = self.peek()
        if kind == "int":
            self.take()
            if val >= field.p:
                raise ParseError(f"coefficient {val} is not in GF({field.p})")
            c = val
        elif kind == "sym" and val == "(":
            self.take()
            c = self.element(field)
            self.expect(")")
        elif kind == "name" and val == var:
            return 1, self.monomial(var)
        else:
            raise ParseError(f"unexpected {val!r} in {self.text!r}")
        kind, val = self.peek()
        if kind == "sym" and val == "*":
            self.take()
            kind, val = self.peek()
            if kind != "name" or val != var:
                raise ParseError(f"expected {var!r} after '*' in {self.text!r}")
        if kind == "name" and val == var:
            return c, self.monomial(var)
        return c, 0

    def monomial(self, var: str) -> int:
        self.take()
        kind, val = self.peek()
        if kind == "sym" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise ParseError(f"expected an integer exponent in {self.text!r}")
            return val
        return 1

    def element(self, field: FieldSpec) -> int:
        if field.subfield is None:
            acc = self.sum(field, None)
            return acc.get(0, 0)
        acc = self.sum(field.subfield, field.symbol)
        return _reduce_to_element(field, acc)


def _reduce_to_element(field: FieldSpec, acc: dict[int, int]) -> int:
    K = field.subfield
    cs = [0] * (max(acc, default=0) + 1)
    for d, c in acc.items():
        cs[d] = c
    r = _divmod(K, _trim(cs), field.modulus)[1]
    return field.from_coeffs(r + [0] * (field.degree - len(r)))


def _parse_list(text: str, field: FieldSpec) -> list[int]:
    body = text.strip()[1:-1].strip() if text.strip().endswith("]") else None
    if body is None:
        raise ParseError(f"unterminated coefficient list {text!r}")
    if not body:
        return []
    try:
        cs = [int(t) for t in body.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad coefficient list {text!r}") from exc
    for c in cs:
        if not 0 <= c < field.cardinality:
            raise ParseError(f"coefficient {c} is not a code of {field}")
    return cs


def parse_poly(text: str, field: FieldSpec, var: str = "x") -> Polynomial:
    """Parse human form (``"x^2+2x+1"``) or coefficient-list form
    (``"[1,2,1]"``, lowest degree first, entries are element codes)."""
    if text.strip().startswith("["):
        return Polynomial(field, _parse_list(text, field))
    parser = _Parser(text)
    if not parser.tokens:
        raise ParseError("empty polynomial")
    acc = parser.sum(field, var)
    parser.done()
    cs = [0] * (max(acc) + 1)
    for d, c in acc.items():
        cs[d] = c
    return Polynomial(field, cs)


def parse_element(text: str, field: FieldSpec) -> FieldElement:
    """Parse an element written in the field's symbol, e.g. ``"a^2 + 1"`` in
    F_p[a]/(h), or ``"[c0, c1, ...]"`` with subfield codes."""
    if text.strip().startswith("["):
        if field.subfield is None:
            (v,) = _parse_list(text, field) or [0]
            return FieldElement(field, v)
        cs = _parse_list(text, field.subfield)
        if len(cs) > field.degree:
            raise ParseError(f"{text!r} has more than {field.degree} coordinates")
        return FieldElement(field, field.from_coeffs(cs + [0] * (field.degree - len(cs))))
    parser = _Parser(text)
    if not parser.tokens:
        raise ParseError("empty element")
    v = parser.element(field)
    parser.done()
    return FieldElement(field, v)
