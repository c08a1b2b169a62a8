"""Re-run the reference worked examples and report pass/fail for each."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from . import orders
from .bch import bch_code
from .census import census_exact, census_lower_bound, forcing_range
from .cyclotomic import cyclotomic_cosets, factor_xe_minus_1, minimal_polynomial
from .fields import element_order, find_primitive, make_field
from .poly import parse_poly


@dataclass
class Check:
    name: str
    expected: Any
    got: Any = None
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and self.got == self.expected

    def to_dict(self) -> dict:
        return {"name": self.name, "expected": repr(self.expected), "got": repr(self.got),
                "error": self.error, "passed": self.passed}


def _factor_set(q: int, e: int) -> set:
    F = make_field(q)
    return {(str(p), f) for p, f in factor_xe_minus_1(F, e).factors}


def _poly(text: str, q: int):
    return parse_poly(text, make_field(q))


def _cases() -> list[tuple[str, Callable[[], Any], Any]]:
    F3 = make_field(3)
    F16 = make_field(2, 4, "x^4+x+1")
    F9 = make_field(3, 2, "x^2+x+2")
    return [
        ("x^4-1 over F_3", lambda: _factor_set(3, 4),
         {("x^2 + 1", 1), ("x + 2", 1), ("x + 1", 1)}),
        ("x^12-1 over F_3", lambda: _factor_set(3, 12),
         {("x + 1", 3), ("x + 2", 3), ("x^2 + 1", 3)}),
        ("bound for q=3, e=4", lambda: census_lower_bound(F3, 4).lower_bound_paper, 4),
        ("exact count for q=3, e=4", lambda: census_exact(F3, 4), 4),
        ("bound for q=3, e=12", lambda: census_lower_bound(F3, 12).lower_bound_paper, 32),
        ("factor orders for q=3, e=12", lambda: factor_xe_minus_1(F3, 12).orders, (2, 1, 4)),
        ("k-values for q=3, e=12",
         lambda: tuple(census_lower_bound(F3, 12).k_values.values()), (6, 12, 3)),
        ("S and t for q=3, e=12",
         lambda: census_lower_bound(F3, 12).t_values, {2: 1}),
        ("forcing range of x^2+1, e=12", lambda: forcing_range(_poly("x^2+1", 3), 12).t, 1),
        ("no forcing range for x+1, e=12", lambda: forcing_range(_poly("x+1", 3), 12), None),
        ("ord(x+1) over F_2", lambda: orders.order_any(_poly("x+1", 2)).order, 1),
        ("ord(x^2+1) over F_3", lambda: orders.order_irreducible(_poly("x^2+1", 3)), 4),
        ("ord(beta^5) in F_16", lambda: element_order(F16.gen ** 5), 3),
        ("x is primitive in F_16", lambda: find_primitive(F16), F16.gen),
        ("x is primitive in F_9", lambda: find_primitive(F9), F9.gen),
        ("M^(5) over F_2", lambda: str(minimal_polynomial(5, F16.gen, make_field(2))), "x^2 + x + 1"),
        ("M^(2) over F_3", lambda: str(minimal_polynomial(2, F9.gen, F3)), "x^2 + 1"),
        ("cosets of 3 mod 8", lambda: cyclotomic_cosets(3, 8).cosets,
         ((0,), (1, 3), (2, 6), (4,), (5, 7))),
        ("[15,9] BCH exponent", lambda: bch_code(2, 4, 5, 3, F16.modulus_poly).exponent, 15),
        ("[15,9] BCH generator", lambda: bch_code(2, 4, 5, 3, F16.modulus_poly).generator,
         _poly("1+x+x^2", 2) * _poly("1+x+x^2+x^3+x^4", 2)),
        ("[15,13] BCH exponent", lambda: bch_code(2, 4, 5, 2, F16.modulus_poly).exponent, 3),
        ("[8,4] BCH exponent", lambda: bch_code(3, 2, 1, 4, F9.modulus_poly).exponent, 8),
        ("[8,4] BCH generator", lambda: bch_code(3, 2, 1, 4, F9.modulus_poly).generator,
         _poly("2+x+x^2", 3) * _poly("1+x^2", 3)),
        ("[8,6] BCH exponent", lambda: bch_code(3, 2, 2, 2, F9.modulus_poly).exponent, 4),
        ("[8,6] BCH generator", lambda: str(bch_code(3, 2, 2, 2, F9.modulus_poly).generator), "x^2 + 1"),
        ("ord of the [8,4] generator", lambda: orders.order_bruteforce(
            _poly("2+x+x^2", 3) * _poly("1+x^2", 3)), 8),
    ]


def run_selftest() -> list[Check]:
    results = []
    for name, fn, expected in _cases():
        check = Check(name, expected)
        try:
            check.got = fn()
        except Exception as exc:  # report, never abort the run
            check.error = f"{type(exc).__name__}: {exc}"
        results.append(check)
    return results
