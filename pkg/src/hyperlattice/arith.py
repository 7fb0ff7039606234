"""Exact integer helpers: square roots, divisor scans, gcd, primality.

Divisor enumeration is plain trial division up to ``isqrt(n)`` and therefore
costs O(sqrt n).  That is instant for ``n <= 10**12`` and legal but slow beyond.
"""

from __future__ import annotations

import math
from typing import List, Optional

from .model import DivisorPair, DomainError


def isqrt(n: int) -> int:
    """Floor square root; ``r*r <= n < (r+1)*(r+1)``."""
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def perfect_square(n: int) -> Optional[int]:
    """Return ``k`` with ``k*k == n``, or ``None`` (always ``None`` for n < 0)."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def small_divisors(n: int) -> List[int]:
    """Positive divisors of ``n`` not exceeding ``sqrt(n)``, ascending."""
    if n < 1:
        raise DomainError(f"small_divisors needs n >= 1, got {n}")
    return [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]


def divisor_pairs(n: int) -> List[DivisorPair]:
    if n < 1:
        raise DomainError(f"divisor_pairs needs n >= 1, got {n}")
    return [DivisorPair(d2, n // d2) for d2 in small_divisors(n)]


def divisors(n: int) -> List[int]:
    """All positive divisors of ``n``, ascending."""
    small = small_divisors(n)
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


def gcd(u: int, v: int) -> int:
    return math.gcd(u, v)


def is_prime(n: int) -> bool:
    """Deterministic trial division."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for p in range(3, math.isqrt(n) + 1, 2):
        if n % p == 0:
            return False
    return True
