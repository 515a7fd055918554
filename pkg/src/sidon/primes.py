"""Small deterministic prime utilities (trial division, desk scale)."""

from __future__ import annotations

from math import isqrt


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    r = isqrt(m)
    while f <= r:
        if m % f == 0:
            return False
        f += 2
    return True


def largest_prime_at_most(m: int) -> int | None:
    """Largest prime <= m, or None when m < 2."""
    while m >= 2:
        if is_prime(m):
            return m
        m -= 1
    return None


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)
