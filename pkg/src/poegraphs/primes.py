"""Small-number primality and factorization helpers.

Everything here targets desk-scale integers (well below 2**40), so trial
division is fast enough and keeps the arithmetic fully deterministic.
"""

from __future__ import annotations

import numpy as np


def is_prime(m: int) -> bool:
    """Deterministic primality by trial division (m >= 1)."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def prime_flags(limit: int) -> np.ndarray:
    """Boolean sieve of length ``limit + 1``; flags[i] is True iff i is prime."""
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as ascending (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def radical(n: int) -> int:
    """Product of the distinct primes dividing n."""
    r = 1
    for p, _ in factorize(n):
        r *= p
    return r


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def small_divisors(n: int, bound: int) -> list[int]:
    """Divisors of |n| that are <= bound, ascending (n may be a big integer).

    Probes each candidate directly, so the cost is O(bound) big-int
    divisions rather than a full factorization of n.
    """
    n = abs(n)
    if n == 0:
        return list(range(1, bound + 1))
    return [d for d in range(1, bound + 1) if n % d == 0]


def perfect_power(n: int) -> tuple[int, int]:
    """Write n as a**b with b maximal; returns (a, b)."""
    if n < 2:
        return n, 1
    fac = factorize(n)
    from math import gcd

    b = 0
    for _, e in fac:
        b = gcd(b, e)
    if b <= 1:
        return n, 1
    a = 1
    for p, e in fac:
        a *= p ** (e // b)
    return a, b
