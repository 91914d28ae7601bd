"""Perfect powers that are sums of three squares in arithmetic progression.

Solves (x - r)^2 + x^2 + (x + r)^2 = y^n, i.e. 3x^2 + 2r^2 = y^n, for all
primitive non-trivial (x, y, n) over ranges of the common difference r.
"""

from .lehmer import ExponentBound, PairParams, bound_B, bq, lehmer_term, pair_is_lehmer
from .ntheory import (
    Factorization,
    divisors,
    factorize,
    integer_nth_root,
    is_prime,
    legendre,
    perfect_power,
    primes_up_to,
)
from .quadring import QuadInt
from .rootfind import IntPoly, build_poly, eval_via_ring, integer_roots, root_bound
from .solver import (
    Candidate,
    Solution,
    brute_force_oracle,
    expand_composite,
    recover_solution,
    solve_r,
    solve_range,
    verify_solution,
)

__version__ = "0.1.0"

__all__ = [
    "Candidate",
    "ExponentBound",
    "Factorization",
    "IntPoly",
    "PairParams",
    "QuadInt",
    "Solution",
    "bound_B",
    "bq",
    "brute_force_oracle",
    "build_poly",
    "divisors",
    "eval_via_ring",
    "expand_composite",
    "factorize",
    "integer_nth_root",
    "integer_roots",
    "is_prime",
    "legendre",
    "lehmer_term",
    "pair_is_lehmer",
    "perfect_power",
    "primes_up_to",
    "recover_solution",
    "root_bound",
    "solve_r",
    "solve_range",
    "verify_solution",
]
