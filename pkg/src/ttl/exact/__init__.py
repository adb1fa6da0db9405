"""Exact arithmetic kernel: rational polynomials, prime fields, CRT, factoring."""

from .crt import crt, crt_lift
from .modp import (
    FactorizationModP,
    ModPolynomial,
    factor_mod_p,
    is_irreducible_mod_p,
    is_prime,
    is_squarefree_mod_p,
    small_primes,
)
from .poly import (
    Polynomial,
    composed_sum,
    fmt_rational,
    is_eisenstein,
    is_squarefree,
    poly_exact_sqrt,
    poly_gcd,
    resultant,
    root_transform,
    squarefree_part,
    sturm_real_root_count,
    sturm_sequence,
)
from .zfactor import factor_over_Z, hensel_lift, mignotte_bound

__all__ = [
    "FactorizationModP",
    "ModPolynomial",
    "Polynomial",
    "composed_sum",
    "crt",
    "crt_lift",
    "factor_mod_p",
    "factor_over_Z",
    "fmt_rational",
    "hensel_lift",
    "is_eisenstein",
    "is_irreducible_mod_p",
    "is_prime",
    "is_squarefree",
    "is_squarefree_mod_p",
    "mignotte_bound",
    "poly_exact_sqrt",
    "poly_gcd",
    "resultant",
    "root_transform",
    "small_primes",
    "squarefree_part",
    "sturm_real_root_count",
    "sturm_sequence",
]
