"""Tiny number-theory helpers used across modules."""

from __future__ import annotations


def is_prime(n: int) -> bool:
    """Trial-division primality test. Group orders here are small, so this
    is deliberately the dumbest correct thing."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_divisors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
