"""Lehmer-pair validity, Lehmer-term evaluation and prime-exponent caps.

For gamma = u + v*w (w**2 = -6) the pair (gamma/sqrt(3), conj(gamma)/sqrt(3))
is a candidate Lehmer pair; its odd-index terms are plain integers whenever
the pair is valid.  The primitive-divisor theorem for Lehmer sequences then
caps the prime exponents that can carry a solution: a prime q dividing the
cofactor forces the index to stay below q - (-6/q), and below 7 outright
when no such prime is available.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .ntheory import factorize, is_prime, legendre
from .quadring import QuadInt

__all__ = ["PairParams", "ExponentBound", "pair_is_lehmer", "lehmer_term", "bq", "bound_B"]


@dataclass(frozen=True)
class PairParams:
    """Parameters (u, v) of gamma = u + v*w; v must be non-zero."""

    u: int
    v: int

    def __post_init__(self) -> None:
        if self.v == 0:
            raise ValueError("v must be non-zero")


@dataclass(frozen=True)
class ExponentBound:
    """Exponent cap B together with the (q, B_q) pairs that produced it."""

    B: int
    contributors: tuple[tuple[int, int], ...]


def pair_is_lehmer(p: PairParams) -> bool:
    """True when (gamma/sqrt(3), conj(gamma)/sqrt(3)) is a valid Lehmer pair.

    Needs (alpha + beta)^2 = 4u^2/3 and alpha*beta = (u^2 + 6v^2)/3 to be
    coprime non-zero integers; 3 | u makes both integral at once, and u != 0
    keeps alpha/beta off the unit circle.
    """
    u, v = p.u, p.v
    if u == 0 or u % 3 != 0:
        return False
    trace_sq = 4 * u * u // 3
    product = (u * u + 6 * v * v) // 3
    return gcd(trace_sq, product) == 1


def lehmer_term(p: PairParams, k: int) -> int:
    """Odd-index term of the Lehmer sequence attached to (u, v).

    Computed as imag(gamma**k) / (v * 3**((k-1)/2)); the division is exact
    for every valid pair, and a remainder signals a precondition violation.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError(f"lehmer_term needs an odd positive index, got {k}")
    w = QuadInt(p.u, p.v) ** k
    term, rem = divmod(w.b, p.v * 3 ** ((k - 1) // 2))
    if rem:
        raise ValueError(f"non-integral Lehmer term for u={p.u}, v={p.v}, k={k}")
    return term


def bq(q: int) -> int:
    """q - 1 when -6 is a square modulo q, else q + 1 (q a prime not dividing 6)."""
    if q in (2, 3) or not is_prime(q):
        raise ValueError(f"bq needs a prime not dividing 6, got {q}")
    return q - 1 if legendre(-6, q) == 1 else q + 1


def bound_B(r_prime: int, v: int) -> ExponentBound:
    """Exponent cap for the divisor split r = v * r_prime.

    Every prime q | r_prime with q coprime to 6v must divide the Lehmer term
    at the exponent, which forces the exponent <= bq(q); without any such
    prime the unconditional primitive-divisor floor of 7 applies.
    """
    if r_prime == 0 or v == 0:
        raise ValueError("bound_B needs non-zero r_prime and v")
    contributors = []
    for q, _ in factorize(abs(r_prime)).factors:
        if (6 * v) % q == 0:
            continue
        contributors.append((q, bq(q)))
    cap = max([7] + [b for _, b in contributors])
    return ExponentBound(cap, tuple(contributors))
