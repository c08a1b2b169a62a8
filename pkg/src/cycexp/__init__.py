"""Orders of polynomials over finite fields and exponents of cyclic codes."""

from .bch import (BchSpec, bch_code, bch_exponent, bch_generator, check_delta_corollary,
                  check_primitive_independence, rs_code, rs_exponent)
from .census import (CensusReport, census_exact, census_lower_bound, forcing_range,
                     verify_lemmas)
from .cyclotomic import (CosetTable, Factorization, cyclotomic_cosets, factor_xe_minus_1,
                         minimal_polynomial)
from .fields import (CapExceeded, FieldElement, FieldError, FieldSpec, PrimePower,
                     element_order, find_primitive, int_factorize, make_field, mult_order_mod)
from .orders import (OrderResult, order_any, order_bruteforce, order_irreducible, order_power,
                     strip_x)
from .poly import Polynomial, format_poly, gcd, parse_poly

__version__ = "0.1.0"
