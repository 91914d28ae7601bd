"""Exact number-theoretic primitives.

Everything here is deterministic and float-free: primality uses a fixed
witness set that is proven correct far beyond 64 bits, and the root and
power helpers work on plain integers of any size.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

__all__ = [
    "Factorization",
    "is_prime",
    "primes_up_to",
    "factorize",
    "divisors",
    "legendre",
    "integer_nth_root",
    "perfect_power",
]

# Strong-pseudoprime witnesses covering every n < 3.3 * 10^24
# (Sorenson-Webster), hence the whole 64-bit range with room to spare.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, exact for all inputs up to 64 bits."""
    if m < 2:
        return False
    for p in _WITNESSES:
        if m % p == 0:
            return m == p
    d = m - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _WITNESSES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: int) -> list[int]:
    """Ascending list of all primes <= limit."""
    if limit < 2:
        return []
    sieve = bytearray((1,)) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ascending (prime, exponent) pairs."""

    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


def factorize(m: int) -> Factorization:
    """Trial-division factorization; inputs here stay word-sized."""
    if m < 1:
        raise ValueError(f"factorize expects m >= 1, got {m}")
    factors = []
    n = m
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            factors.append((p, e))
    d = 5
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            factors.append((d, e))
        # skip multiples of 2 and 3: 5, 7, 11, 13, ...
        d += 2 if d % 6 == 5 else 4
    if n > 1:
        factors.append((n, 1))
    return Factorization(tuple(factors))


def divisors(m: int) -> list[int]:
    """Ascending list of all positive divisors of m >= 1."""
    divs = [1]
    for p, e in factorize(m).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def legendre(a: int, q: int) -> int:
    """Legendre symbol (a/q) for an odd prime q, via Euler's criterion."""
    if q == 2 or not is_prime(q):
        raise ValueError(f"legendre needs an odd prime modulus, got {q}")
    a %= q
    if a == 0:
        return 0
    return 1 if pow(a, (q - 1) // 2, q) == 1 else -1


def integer_nth_root(m: int, k: int) -> int:
    """floor(m ** (1/k)) for m >= 0, k >= 1, computed exactly."""
    if m < 0:
        raise ValueError(f"integer_nth_root expects m >= 0, got {m}")
    if k < 1:
        raise ValueError(f"integer_nth_root expects k >= 1, got {k}")
    if m == 0 or k == 1:
        return m
    if k == 2:
        return isqrt(m)
    if m < (1 << k):
        return 1
    # Newton iteration from an over-estimate; monotone decreasing until fixed.
    x = 1 << -(-m.bit_length() // k)
    while True:
        y = ((k - 1) * x + m // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > m:
        x -= 1
    while (x + 1) ** k <= m:
        x += 1
    return x


def perfect_power(y: int) -> tuple[int, int] | None:
    """Write y = b**e with e maximal (e >= 2), or None if y is no perfect power."""
    if y < 2:
        raise ValueError(f"perfect_power expects y >= 2, got {y}")
    for e in range(y.bit_length(), 1, -1):
        b = integer_nth_root(y, e)
        if b**e == y:
            return b, e
    return None
