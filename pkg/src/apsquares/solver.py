"""Range solver for 3x^2 + 2r^2 = y^n.

The equation is the sum (x-r)^2 + x^2 + (x+r)^2 rewritten; a primitive
solution has gcd(x, y) = 1 and x*y != 0.  For each common difference r the
search runs over divisor splits v | r (both signs), caps the viable prime
exponents through the Lehmer-sequence bound, extracts the integer roots of
the split polynomial, and reconstructs (x, y) exactly from the ring power.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Callable, Iterable

from .lehmer import PairParams, bound_B, pair_is_lehmer
from .ntheory import divisors, perfect_power, primes_up_to
from .quadring import QuadInt
from .rootfind import integer_roots_many

__all__ = [
    "Candidate",
    "Solution",
    "verify_solution",
    "recover_solution",
    "solve_r",
    "expand_composite",
    "brute_force_oracle",
    "solve_range",
]


@dataclass(frozen=True)
class Candidate:
    """A root u of the split polynomial for (r, v, n), awaiting reconstruction."""

    r: int
    v: int
    n: int
    u: int


@dataclass(frozen=True)
class Solution:
    """One table row: 3*x_abs^2 + 2*r^2 = y^n with gcd(x_abs, y) = 1."""

    r: int
    x_abs: int
    y: int
    n: int


def _row_key(s: Solution) -> tuple[int, int, int]:
    return (s.n, s.y, s.x_abs)


def verify_solution(x: int, y: int, r: int, n: int) -> bool:
    """True iff (x, y) is a primitive non-trivial solution for (r, n)."""
    if x == 0 or y == 0:
        return False
    if 3 * x * x + 2 * r * r != y**n:
        return False
    return gcd(x, y) == 1


def recover_solution(c: Candidate) -> Solution | None:
    """Reconstruct the table row behind a polynomial root, or None.

    With gamma = u + v*w, the power W = gamma**n must satisfy
    imag(W) = r * 3^((n-1)/2); the row is x = real(W) / 3^((n+1)/2) and
    y = norm(gamma) / 3.  Non-exact divisions, y < 2, an invalid Lehmer
    pair, or a failed final verification all reject the candidate.
    """
    half_scale = 3 ** ((c.n - 1) // 2)
    w = QuadInt(c.u, c.v) ** c.n
    if w.b != c.r * half_scale:
        return None
    x, rem = divmod(w.a, 3 * half_scale)
    if rem:
        return None
    y, rem = divmod(c.u * c.u + 6 * c.v * c.v, 3)
    if rem or y < 2:
        return None
    if not pair_is_lehmer(PairParams(c.u, c.v)):
        return None
    if not verify_solution(x, y, c.r, c.n):
        return None
    return Solution(c.r, abs(x), y, c.n)


@lru_cache(maxsize=None)
def _odd_primes_to(cap: int) -> tuple[int, ...]:
    return tuple(p for p in primes_up_to(cap) if p >= 3)


def _solve_r_signed(r: int, signs: tuple[int, ...]) -> list[Solution]:
    found = {}
    for d in divisors(r):
        for sign in signs:
            v = sign * d
            cap = bound_B(r // v, v)
            roots_by_n = integer_roots_many(list(_odd_primes_to(cap.B)), v, r)
            for n, roots in roots_by_n.items():
                for u in roots:
                    sol = recover_solution(Candidate(r, v, n, u))
                    if sol is not None:
                        found[(sol.x_abs, sol.y, sol.n)] = sol
    return sorted(found.values(), key=_row_key)


def solve_r(r: int) -> list[Solution]:
    """All primitive non-trivial rows for one r, prime exponents only.

    Multiples of 3 cannot carry a primitive solution (y^n would be divisible
    by 3 but not 9), so they return [] immediately.
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if r % 3 == 0:
        return []
    return _solve_r_signed(r, (1, -1))


def expand_composite(solutions: Iterable[Solution]) -> list[Solution]:
    """Add the composite-exponent aliases of rows whose y is a perfect power.

    y = b**e turns (r, x, y, n) into (r, x, b**(e/f), n*f) for every divisor
    f of e; originals are kept and duplicates collapse.
    """
    out = {}
    for s in solutions:
        out.setdefault((s.r, s.x_abs, s.y, s.n), s)
        power = perfect_power(s.y)
        if power is None:
            continue
        b, e = power
        for f in divisors(e)[1:]:
            alias = Solution(s.r, s.x_abs, b ** (e // f), s.n * f)
            out.setdefault((alias.r, alias.x_abs, alias.y, alias.n), alias)
    return sorted(out.values(), key=lambda s: (s.r, s.n, s.y, s.x_abs))


# Quadratic-residue tables for a cheap perfect-square pre-test.
_SQ_256 = frozenset((i * i) & 255 for i in range(128))
_SQ_63 = frozenset(i * i % 63 for i in range(63))
_SQ_65 = frozenset(i * i % 65 for i in range(65))


def brute_force_oracle(r: int, y_max: int, n_max: int) -> list[Solution]:
    """Exhaustive ground truth: try every y in [2, y_max], n in [2, n_max].

    Shares nothing with the algebraic path; it just checks whether
    (y**n - 2r^2) / 3 is a positive perfect square and the row is primitive.
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    two_r_sq = 2 * r * r
    r_mod3 = two_r_sq % 3
    found = []
    for y in range(2, y_max + 1):
        power = y * y
        p_mod3 = power % 3
        for n in range(2, n_max + 1):
            if n > 2:
                power *= y
                p_mod3 = p_mod3 * y % 3
            if p_mod3 != r_mod3 or power <= two_r_sq:
                continue
            q = (power - two_r_sq) // 3
            if (q & 255) not in _SQ_256 or q % 63 not in _SQ_63 or q % 65 not in _SQ_65:
                continue
            x = isqrt(q)
            if x * x == q and verify_solution(x, y, r, n):
                found.append(Solution(r, x, y, n))
    return sorted(found, key=_row_key)


def solve_range(
    r_min: int,
    r_max: int,
    include_composite: bool = False,
    jobs: int = 1,
    progress: Callable[[int, list[Solution]], None] | None = None,
) -> list[Solution]:
    """Concatenated rows for r in [r_min, r_max], globally ordered.

    With jobs > 1 the per-r work is spread over worker processes; results
    are merged in r order, so the output is identical for any job count.
    """
    if r_min < 1 or r_min > r_max:
        raise ValueError(f"need 1 <= r_min <= r_max, got [{r_min}, {r_max}]")
    rs = range(r_min, r_max + 1)
    rows: list[Solution] = []
    if jobs <= 1:
        for r in rs:
            batch = solve_r(r)
            if progress is not None:
                progress(r, batch)
            rows.extend(batch)
    else:
        chunk = max(1, len(rs) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for r, batch in zip(rs, pool.map(solve_r, rs, chunksize=chunk)):
                if progress is not None:
                    progress(r, batch)
                rows.extend(batch)
    if include_composite:
        rows = expand_composite(rows)
    return sorted(set(rows), key=lambda s: (s.r, s.n, s.y, s.x_abs))
