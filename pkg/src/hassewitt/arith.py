"""Exact integer and rational arithmetic primitives.

Everything downstream (symbols, forms, trace lattices) reduces to three
operations implemented here: integer factorization, extraction of the
squarefree part of a rational, and the quadratic residue symbol modulo an
odd prime.  All values are plain ``int`` / ``fractions.Fraction``; results
are exact.

Factorization strategy: trial division (wheel mod 30) up to a bound, then
Brent-cycle Pollard rho on whatever survives, with deterministic
Miller-Rabin primality testing throughout.  The trial bound defaults to
10**6 and can be lowered or raised through the ``HASSEWITT_FACTOR_LIMIT``
environment variable; exceeding the overall budget raises
:class:`EffortExceededError` rather than returning a wrong answer.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .errors import DomainError, EffortExceededError, InternalError

DEFAULT_FACTOR_LIMIT = 1_000_000

# Deterministic witness set: correct for all n < 3.317e24, used unchanged
# for larger inputs as a fixed-witness compromise.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _factor_limit() -> int:
    raw = os.environ.get("HASSEWITT_FACTOR_LIMIT", "")
    try:
        limit = int(raw) if raw else DEFAULT_FACTOR_LIMIT
    except ValueError:
        raise DomainError(f"HASSEWITT_FACTOR_LIMIT must be an integer, got {raw!r}")
    return max(limit, 100)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the fixed witness tuple."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, budget: int) -> int:
    """One nontrivial factor of odd composite n, or raise on exhausted budget."""
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        count = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
                count += m
                if count > budget:
                    break
            r *= 2
            if count > budget:
                break
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
                count += 1
                if count > budget:
                    break
        if 1 < g < n:
            return g
    raise EffortExceededError(f"factorization effort exhausted on {n}")


@dataclass(frozen=True)
class Factorization:
    """Signed prime factorization: sign * prod(p**e) reconstructs the input."""

    sign: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), primes ascending

    def value(self) -> int:
        n = self.sign
        for p, e in self.factors:
            n *= p ** e
        return n

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


@lru_cache(maxsize=8192)
def _factor_positive(n: int) -> tuple[tuple[int, int], ...]:
    """Factor n >= 1 into an ascending (prime, exponent) tuple."""
    if n == 1:
        return ()
    limit = _factor_limit()
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # wheel mod 30 starting at 7, with periodic primality checkpoints so a
    # large prime or semiprime cofactor falls through to rho early
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    d, i = 7, 0
    checkpoint = 1_000
    while n > 1 and d * d <= n and d <= limit:
        if d >= checkpoint:
            if is_prime(n):
                break
            if checkpoint >= 10_000 and n > 10**10:
                break  # rho splits survivors this size much faster
            checkpoint *= 10
        if n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
            # cheap exit once the cofactor is proven prime
            if n > 1 and is_prime(n):
                break
        else:
            d += steps[i]
            i = (i + 1) % 8
    # whatever is left: prime, or composite with no divisor below the stage
    # bound; rho plus recursion finishes it
    stack = [n] if n > 1 else []
    budget = max(1 << 22, limit)
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        if isqrt(m) ** 2 == m:
            stack.extend((isqrt(m), isqrt(m)))
            continue
        g = _brent_rho(m, budget)
        stack.extend((g, m // g))
    return tuple(sorted(out.items()))


def factor(n: int) -> Factorization:
    """Factor a nonzero integer; keys are prime, exponents >= 1."""
    if n == 0:
        raise DomainError("cannot factor 0")
    sign = -1 if n < 0 else 1
    fac = Factorization(sign, _factor_positive(abs(n)))
    if fac.value() != n:
        raise InternalError(f"factorization of {n} does not reconstruct")
    return fac


def squarefree_part(q: int | Fraction) -> int:
    """The unique squarefree integer s with q/s a nonzero rational square.

    The sign of s matches the sign of q; squarefree_part(1/2) == 2 because
    1/2 = 2 * (1/2)**2.
    """
    q = Fraction(q)
    if q == 0:
        raise DomainError("0 has no squarefree part")
    n = q.numerator * q.denominator  # same square class as q
    s = -1 if n < 0 else 1
    for p, e in factor(n).factors:
        if e % 2:
            s *= p
    return s


def legendre(a: int, p: int) -> int:
    """Quadratic residue symbol (a/p) for an odd prime p; 0 iff p | a."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else 1


def legendre_fraction(a: Fraction, p: int) -> int:
    """legendre() extended to rational p-adic units (odd denominator part)."""
    num, den = a.numerator, a.denominator
    if num % p == 0 or den % p == 0:
        raise DomainError(f"{a} is not a unit at {p}")
    return legendre(num * den, p)


def padic_split(q: Fraction, p: int) -> tuple[int, Fraction]:
    """Write q = p**v * u with u a p-adic unit; returns (v, u)."""
    if q == 0:
        raise DomainError("0 has no p-adic valuation")
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, Fraction(num, den)
