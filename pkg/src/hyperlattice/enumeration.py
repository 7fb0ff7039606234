"""Integral points of ``y = (x^2 + b x + c) / (x + a)`` via divisor pairs.

Everything hinges on the fingerprint ``D = a^2 - a b + c``, the remainder of
``x^2 + b x + c`` on division by ``x + a``::

    x^2 + b x + c = (x + a)(x + b - a) + D

``D = 0`` gives a punctured line.  Otherwise each divisor pair ``d2 <= d1`` of
``|D|`` yields the abscissae ``-a + d1, -a + d2, -a - d2, -a - d1`` and the
ordinate of each follows from ``y = x + (b - a) + D / (x + a)``.  The total is
``4N`` points, or ``4N - 2`` when ``|D|`` is a perfect square (the pair
``(k, k)`` collapses to two points).
"""

from __future__ import annotations

from typing import List, Optional

from .arith import divisor_pairs, is_prime, perfect_square, small_divisors
from .model import (
    CountPrediction,
    CurveClass,
    CurveParams,
    DegenerateLine,
    DivisorPair,
    DomainError,
    Finite,
    Fingerprint,
    FormKind,
    Hyperbola,
    Infinite,
    IntegralPoint,
    ParametricLine,
    PointSet,
    SpecialForm,
    checked,
    on_curve,
)


def fingerprint(curve: CurveParams) -> Fingerprint:
    a, b, c = curve.a, curve.b, curve.c
    value = checked(a * a - a * b + c)
    k = perfect_square(abs(value))
    return Fingerprint(value, abs(value), k is not None, k)


def classify(curve: CurveParams) -> CurveClass:
    fp = fingerprint(curve)
    if fp.value == 0:
        return DegenerateLine()
    return Hyperbola(fp.sign, fp.is_square)


def degenerate_family(curve: CurveParams) -> ParametricLine:
    fp = fingerprint(curve)
    if fp.value != 0:
        raise DomainError(f"curve is not degenerate (D = {fp.value})")
    return ParametricLine(curve.b - curve.a, -curve.a)


def _require_hyperbola(curve: CurveParams) -> Fingerprint:
    fp = fingerprint(curve)
    if fp.value == 0:
        raise DomainError("curve degenerates to a line (D = 0); use degenerate_family")
    return fp


def points_for_pair(curve: CurveParams, pair: DivisorPair) -> List[IntegralPoint]:
    """The four points generated by one divisor pair (two when ``d1 == d2``)."""
    fp = _require_hyperbola(curve)
    if pair.product != fp.magnitude:
        raise DomainError(f"pair {pair.d2}*{pair.d1} does not multiply to |D| = {fp.magnitude}")
    a, D = curve.a, fp.value
    shift = curve.b - a
    if D > 0:
        offsets = (pair.d1, pair.d2, -pair.d2, -pair.d1)
    else:
        offsets = (pair.d1, -pair.d2, pair.d2, -pair.d1)
    points: List[IntegralPoint] = []
    for t in offsets:
        x = -a + t
        p = IntegralPoint(x, x + shift + D // t)
        if p not in points:
            points.append(p)
    for p in points:
        if not on_curve(curve, *p):
            raise AssertionError(f"generated point {p} is not on {curve}")
    return points


def enumerate_points(curve: CurveParams) -> PointSet:
    fp = _require_hyperbola(curve)
    found = []
    for pair in divisor_pairs(fp.magnitude):
        found.extend(points_for_pair(curve, pair))
    return PointSet.of(found)


def predicted_count(curve: CurveParams) -> CountPrediction:
    fp = fingerprint(curve)
    if fp.value == 0:
        return Infinite()
    n = len(small_divisors(fp.magnitude))
    return Finite(n, 4 * n - (2 if fp.is_square else 0))


def special_form(curve: CurveParams) -> Optional[SpecialForm]:
    fp = _require_hyperbola(curve)
    n, sign = fp.magnitude, fp.sign
    if n == 1:
        return SpecialForm(FormKind.UNIT, (), sign)
    small = small_divisors(n)
    if small == [1]:
        return SpecialForm(FormKind.PRIME, (n,), sign)
    if len(small) == 2:
        p = small[1]
        # p is the least divisor > 1, hence prime
        q = n // p
        if q == p:
            return SpecialForm(FormKind.PRIME_SQUARE, (p,), sign)
        if is_prime(q):
            return SpecialForm(FormKind.SEMI_PRIME, (p, q), sign)
    return None


def class_label(cls: CurveClass) -> str:
    if isinstance(cls, DegenerateLine):
        return "degenerate_line"
    square = "square" if cls.is_square else "nonsquare"
    return f"hyperbola_{cls.sign.value}_{square}"

