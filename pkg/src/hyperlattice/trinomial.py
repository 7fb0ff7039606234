"""Root nature and integer roots of ``a x^2 + b x + c`` with integer coefficients.

Integer roots exist exactly when the discriminant is a perfect square ``k^2``
and ``a`` divides both ``b`` and ``c``; the roots are then ``(-b +- k) / (2a)``.
For ``a = +-1`` the divisibility condition is vacuous and only the square test
remains.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Tuple

from .arith import perfect_square
from .model import DomainError, checked


class RootNature(str, enum.Enum):
    TWO_RATIONAL = "two_rational"
    TWO_IRRATIONAL = "two_irrational"
    COMPLEX_PAIR = "complex_pair"


@dataclass(frozen=True)
class Trinomial:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a == 0:
            raise DomainError("leading coefficient must be nonzero")

    def __call__(self, x):
        return (self.a * x + self.b) * x + self.c


def discriminant(g: Trinomial) -> int:
    return checked(g.b * g.b - 4 * g.a * g.c)


def classify_roots(g: Trinomial) -> RootNature:
    disc = discriminant(g)
    if disc < 0:
        return RootNature.COMPLEX_PAIR
    if perfect_square(disc) is not None:
        return RootNature.TWO_RATIONAL
    return RootNature.TWO_IRRATIONAL


def integer_roots(g: Trinomial) -> Optional[Tuple[int, int]]:
    """Both roots, ascending, if both are integers; otherwise ``None``."""
    k = perfect_square(discriminant(g))
    if k is None or g.b % g.a or g.c % g.a:
        return None
    two_a = 2 * g.a
    # a | b, a | c and disc = k^2 force 2a | (-b +- k)
    r1, rem1 = divmod(-g.b + k, two_a)
    r2, rem2 = divmod(-g.b - k, two_a)
    assert rem1 == 0 and rem2 == 0, g
    return (r1, r2) if r1 <= r2 else (r2, r1)


def unit_leading_shortcut(g: Trinomial) -> Optional[Tuple[int, int]]:
    """Integer roots for a monic (or negated monic) trinomial via a single square test."""
    if g.a == 1:
        # x^2 + b x + c
        k = perfect_square(checked(g.b * g.b - 4 * g.c))
        if k is None:
            return None
        return ((-g.b - k) // 2, (-g.b + k) // 2)
    if g.a == -1:
        # -x^2 + b x + c = 0  <=>  x^2 - b x - c = 0
        k = perfect_square(checked(g.b * g.b + 4 * g.c))
        if k is None:
            return None
        return ((g.b - k) // 2, (g.b + k) // 2)
    raise DomainError(f"shortcut needs a in {{1, -1}}, got {g.a}")
