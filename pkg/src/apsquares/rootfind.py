"""Divisor-split polynomials and complete extraction of their integer roots.

For an odd prime n, non-zero v and r >= 1 the polynomial in u is

    sum over odd k <= n of  C(n,k) * v^k * (-6)^((k-1)/2) * u^(n-k)
        minus  r * 3^((n-1)/2),

which is exactly imag((u + v*w)**n) - r * 3^((n-1)/2) with w**2 = -6.  Only
even powers of u carry a coefficient, so integer roots come in +/- pairs.

Root extraction never materializes the coefficient list for large n (the
middle binomials run to thousands of digits).  Instead:

  * evaluate the polynomial modulo a few word-sized filter primes p at every
    residue u at once, by powering (u + v*w) in (Z/p)[w]/(w**2 + 6)
    vectorized over u;
  * combine the residue hits of two primes by CRT inside a proven root
    bound, so every true integer root is necessarily among the candidates;
  * discard candidates that miss the hit set of a third prime, then confirm
    the survivors with exact big-integer ring powering.

Filter primes are chosen so that none divides the leading coefficient n*v,
and the first two multiply past twice the root bound, which makes the CRT
lift unambiguous.  If a prime pair degenerates (too many residue hits), the
search restarts with larger primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

import numpy as np

from .ntheory import integer_nth_root, is_prime
from .quadring import QuadInt

__all__ = ["IntPoly", "build_poly", "eval_via_ring", "root_bound", "integer_roots"]

# Residue-hit pairs beyond this are treated as a degenerate filter choice.
_DENSITY_LIMIT = 4096


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial; coefficients[i] multiplies u**i."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, u: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * u + c
        return acc


def _check_params(n: int, v: int, r: int) -> None:
    if n < 3 or n % 2 == 0 or not is_prime(n):
        raise ValueError(f"n must be an odd prime, got {n}")
    if v == 0:
        raise ValueError("v must be non-zero")
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")


def build_poly(n: int, v: int, r: int) -> IntPoly:
    """Materialize the coefficient vector (degree n-1, leading term n*v)."""
    _check_params(n, v, r)
    coeffs = [0] * n
    v_pow = v
    six_pow = 1
    for k in range(1, n + 1, 2):
        coeffs[n - k] = comb(n, k) * v_pow * six_pow
        v_pow *= v * v
        six_pow *= -6
    coeffs[0] -= r * 3 ** ((n - 1) // 2)
    return IntPoly(tuple(coeffs))


def eval_via_ring(u: int, n: int, v: int, r: int) -> int:
    """Exact polynomial value at u via ring powering, no coefficients needed."""
    _check_params(n, v, r)
    return (QuadInt(u, v) ** n).b - r * 3 ** ((n - 1) // 2)


def root_bound(p: IntPoly) -> int:
    """Lagrange bound: every real root z has |z| <= 2 * max |a_i/a_d|^(1/(d-i))."""
    d = p.degree
    lead = abs(p.coefficients[-1])
    if lead == 0:
        raise ValueError("leading coefficient must be non-zero")
    best = 1
    for i in range(d):
        a = abs(p.coefficients[i])
        if a == 0:
            continue
        k = d - i
        ratio = -(-a // lead)  # ceil(a / lead)
        t = integer_nth_root(ratio, k)
        if t**k < ratio:
            t += 1
        if t > best:
            best = t
    return 2 * best


def _param_root_bound(n: int, v: int, r: int) -> int:
    # Same Lagrange shape without touching the big coefficients.  Generic
    # odd-k terms obey |a_(n-k)/a_(n-1)|^(1/(k-1)) <= sqrt(6)*n*|v| because
    # C(n,k) <= n^k; the constant term contributes at most
    # sqrt(6)*|v| + sqrt(3*r) by sub-additivity of the (n-1)-th root.
    av = abs(v)
    m_generic = isqrt(6 * n * n * av * av) + 1
    m_const = isqrt(6 * av * av) + isqrt(3 * r) + 2
    return 2 * max(m_generic, m_const)


def _next_prime(m: int) -> int:
    while not is_prime(m):
        m += 1
    return m


def _pick_primes(start: int, count: int, avoid: int) -> list[int]:
    """`count` ascending primes >= start, none of them dividing `avoid`."""
    avoid = abs(avoid)
    out = []
    p = start
    while len(out) < count:
        p = _next_prime(p)
        if avoid % p != 0:
            out.append(p)
        p += 1
    return out


def _imag_pow_mod(n: int, v: int, p: int) -> np.ndarray:
    """imag((u + v*w)**n) mod p for every residue u in [0, p), vectorized."""
    ra = np.ones(p, dtype=np.int64)
    rb = np.zeros(p, dtype=np.int64)
    ba = np.arange(p, dtype=np.int64)
    bb = np.full(p, v % p, dtype=np.int64)
    e = n
    while True:
        if e & 1:
            ra, rb = (ra * ba - 6 * rb * bb) % p, (ra * bb + rb * ba) % p
        e >>= 1
        if not e:
            return rb
        ba, bb = (ba * ba - 6 * bb * bb) % p, (2 * ba * bb) % p


def _confirm(n, v, r, z1, p1, z2, p2, z3, p3, bound):
    """CRT-combine residue hits, filter by the third prime, verify exactly."""
    inv12 = pow(p1, -1, p2)
    mod = p1 * p2
    half = mod >> 1
    target = r * 3 ** ((n - 1) // 2)
    roots = set()
    for x1 in z1:
        for x2 in z2:
            t = x1 + p1 * ((x2 - x1) * inv12 % p2)
            if t > half:
                t -= mod
            if t < -bound or t > bound or (t % p3) not in z3:
                continue
            if (QuadInt(t, v) ** n).b == target:
                roots.add(t)
    return sorted(roots)


def integer_roots(n: int, v: int, r: int) -> list[int]:
    """The complete, ascending set of integer roots of build_poly(n, v, r)."""
    _check_params(n, v, r)
    bound = _param_root_bound(n, v, r)
    base = max(101, isqrt(2 * bound + 1) + 1)
    target = r * 3 ** ((n - 1) // 2)
    for _ in range(12):
        p1, p2, p3 = _pick_primes(base, 3, n * v)
        hits = []
        for p in (p1, p2, p3):
            im = _imag_pow_mod(n, v, p)
            hits.append([int(t) for t in np.flatnonzero(im == target % p)])
        z1, z2, z3 = hits
        if len(z1) * len(z2) > _DENSITY_LIMIT:
            base *= 4
            continue
        return _confirm(n, v, r, z1, p1, z2, p2, set(z3), p3, bound)
    raise RuntimeError(f"filter primes kept degenerating for n={n}, v={v}, r={r}")


def _sweep_hits(ns: list[int], v: int, r: int, primes: tuple[int, int, int]):
    """Residue hits of the polynomials for each n in ns, all primes at once.

    Walks gamma**k over odd k up to max(ns) with one multiply per step, on a
    single concatenated residue array covering all three primes.  Returns
    {n: [hit list per prime]} with hits as plain ints.
    """
    want = set(ns)
    top = max(ns)
    pvec = np.concatenate([np.full(p, p, dtype=np.int64) for p in primes])
    u = np.concatenate([np.arange(p, dtype=np.int64) for p in primes])
    vvec = np.concatenate([np.full(p, v % p, dtype=np.int64) for p in primes])
    cvec = np.concatenate([np.full(p, (3 * r) % p, dtype=np.int64) for p in primes])
    offsets = [0]
    for p in primes:
        offsets.append(offsets[-1] + p)

    sq_a = (u * u - 6 * vvec * vvec) % pvec  # gamma^2, per residue
    sq_b = (2 * u * vvec) % pvec
    a, b = u, vvec  # gamma^1

    out = {}
    for k in range(3, top + 1, 2):
        a, b = (a * sq_a - 6 * b * sq_b) % pvec, (a * sq_b + b * sq_a) % pvec
        if k in want:
            flat = np.flatnonzero(b == cvec)
            per_prime = []
            for i in range(3):
                lo, hi = offsets[i], offsets[i + 1]
                per_prime.append([int(t) - lo for t in flat[(flat >= lo) & (flat < hi)]])
            out[k] = per_prime
        cvec = cvec * 3 % pvec
    return out


def integer_roots_many(ns: list[int], v: int, r: int) -> dict[int, list[int]]:
    """integer_roots for several odd-prime exponents, sharing one modular sweep.

    Equivalent to {n: integer_roots(n, v, r)} but walks the residue powers
    incrementally, which is what makes large exponent caps affordable.
    """
    ns = sorted(set(ns))
    for n in ns:
        _check_params(n, v, r)
    bound_top = _param_root_bound(ns[-1], v, r)
    base = max(101, isqrt(2 * bound_top + 1) + 1)
    p1, p2, p3 = primes = tuple(_pick_primes(base, 3, v))
    # A sweep prime may coincide with one of the exponents (it then divides
    # that polynomial's leading coefficient); those n fall back to the
    # stand-alone path, which picks its own primes.
    swept = [n for n in ns if n not in primes]
    hits = _sweep_hits(swept, v, r, primes) if swept else {}
    out = {}
    for n in ns:
        if n not in hits:
            out[n] = integer_roots(n, v, r)
            continue
        z1, z2, z3 = hits[n]
        if len(z1) * len(z2) > _DENSITY_LIMIT:
            out[n] = integer_roots(n, v, r)
            continue
        out[n] = _confirm(n, v, r, z1, p1, z2, p2, set(z3), p3, _param_root_bound(n, v, r))
    return out
