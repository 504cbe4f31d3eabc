"""Exact integer and rational arithmetic plus divisor-sum functions.

Rational values throughout the package are ``fractions.Fraction`` instances
(always stored reduced, denominator positive), serialized as ``"num/den"``.
Integer-valued coefficients may be carried as plain ``int`` for speed; the
two mix freely in arithmetic and compare equal where expected.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt

Rational = Fraction


def rational_to_str(x: Fraction | int) -> str:
    """Serialize an exact rational as "num/den" in lowest terms ("25/1" style)."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def rational_from_str(s: str) -> Fraction:
    num, sep, den = s.partition("/")
    if not sep:
        raise ValueError(f"expected 'num/den', got {s!r}")
    return Fraction(int(num), int(den))


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n >= 1, by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def prime_factorization(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {p: exponent}."""
    if n < 1:
        raise ValueError(f"prime_factorization requires n >= 1, got {n}")
    fac: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        fac[n] = fac.get(n, 0) + 1
    return fac


def euler_phi(n: int) -> int:
    phi = n
    for p in prime_factorization(n):
        phi -= phi // p
    return phi


def sigma(k: int, n: int) -> int:
    """Sum of k-th powers of the positive divisors of n; 0 when n <= 0.

    The zero convention for non-positive n mirrors the usual one for
    sigma of a non-integer argument (see sigma_at).
    """
    if k < 0:
        raise ValueError(f"sigma requires k >= 0, got {k}")
    if n <= 0:
        return 0
    return sum(d**k for d in divisors(n))


def sigma_at(k: int, n: int, delta: int) -> int:
    """sigma(k, n/delta) when delta | n, else 0."""
    if delta < 1:
        raise ValueError(f"sigma_at requires delta >= 1, got {delta}")
    if n % delta:
        return 0
    return sigma(k, n // delta)


@lru_cache(maxsize=16)
def sigma_table(k: int, n_max: int) -> tuple[int, ...]:
    """sigma_k(n) for n = 0..n_max as a tuple (index 0 holds 0).

    Divisor sieve, O(n_max log n_max); backs the brute-force oracles that
    need O(n) sigma lookups per evaluation.
    """
    if k < 0 or n_max < 0:
        raise ValueError("sigma_table requires k >= 0 and n_max >= 0")
    table = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        dk = d**k
        for m in range(d, n_max + 1, d):
            table[m] += dk
    return tuple(table)
