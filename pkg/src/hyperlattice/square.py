"""The square case ``b^2 = 4c``: ``y = (x + d)^2 / (x + a)`` with ``b = 2d``.

For ``a == d`` the curve is the line ``y = x + a`` with a hole at ``x = -a``.
Otherwise ``D = (d - a)^2`` and the integral points split by the sign of y:

* ``y = 0`` only at ``(-d, 0)``;
* ``y >= 1`` and ``y <= -1`` are parametrised by a divisor ``rho`` of ``|d - a|``
  and a coprime factorisation ``m * n = |d - a| / rho`` (see
  :func:`parametric_triples`).

:func:`analyze` returns the exact calculus summary of the graph.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, List, Optional

from .arith import divisors, gcd
from .model import (
    AnalysisReport,
    CurveParams,
    Direction,
    DomainError,
    IntegralPoint,
    Interval,
    LineShape,
    MonotoneInterval,
    ParametricTriple,
    PointSet,
    ProperSquareCase,
    RationalPoint,
    SquareForm,
)

INC, DEC = Direction.INCREASING, Direction.DECREASING


def as_square_form(curve: CurveParams) -> Optional[SquareForm]:
    if curve.b % 2:
        return None
    d = curve.b // 2
    if curve.c != d * d:
        return None
    return SquareForm(curve.a, d)


def analyze(sf: SquareForm) -> AnalysisReport:
    a, d = sf.a, sf.d
    if a == d:
        return AnalysisReport(sf, LineShape(intercept=a, hole_x=-a))

    other = d - 2 * a
    zero = RationalPoint(Fraction(-d), Fraction(0))
    turn = RationalPoint(Fraction(other), Fraction(4 * (d - a)))
    if a < d:
        # -d < -a < d - 2a
        local_max, local_min = zero, turn
        monotone = (
            MonotoneInterval(Interval(None, -d), INC),
            MonotoneInterval(Interval(-d, -a), DEC),
            MonotoneInterval(Interval(-a, other), DEC),
            MonotoneInterval(Interval(other, None), INC),
        )
    else:
        # d - 2a < -a < -d
        local_max, local_min = turn, zero
        monotone = (
            MonotoneInterval(Interval(None, other), INC),
            MonotoneInterval(Interval(other, -a), DEC),
            MonotoneInterval(Interval(-a, -d), DEC),
            MonotoneInterval(Interval(-d, None), INC),
        )
    shape = ProperSquareCase(
        vertical_asymptote_x=-a,
        oblique_intercept=2 * d - a,
        x_intercept=IntegralPoint(-d, 0),
        y_intercept=Fraction(d * d, a) if a != 0 else None,
        critical_xs=(-d, other),
        local_max=local_max,
        local_min=local_min,
        monotone_intervals=monotone,
        concave_down=Interval(None, -a),
        concave_up=Interval(-a, None),
    )
    return AnalysisReport(sf, shape)


def derivative(sf: SquareForm, x):
    """``f'(x) = (x + d)(x + 2a - d) / (x + a)^2``."""
    a, d = sf.a, sf.d
    if not isinstance(x, float):
        x = Fraction(x)
    return (x + d) * (x + 2 * a - d) / (x + a) ** 2


def second_derivative(sf: SquareForm, x):
    """``f''(x) = 2 (a - d)^2 / (x + a)^3``."""
    a, d = sf.a, sf.d
    if not isinstance(x, float):
        x = Fraction(x)
    return 2 * (a - d) ** 2 / (x + a) ** 3


def parametric_triples(gap: int) -> Iterator[ParametricTriple]:
    """All ``(rho, m, n)`` with ``rho | gap``, ``m * n = gap / rho`` and ``gcd(m, n) = 1``."""
    if gap < 1:
        raise DomainError(f"gap must be positive, got {gap}")
    for rho in divisors(gap):
        q = gap // rho
        for m in divisors(q):
            if gcd(m, q // m) == 1:
                yield ParametricTriple(rho, m, q // m)


def _require_proper(sf: SquareForm) -> None:
    if sf.a == sf.d:
        raise DomainError("a == d: the curve is a punctured line with infinitely many points")


def parametric_points_positive(sf: SquareForm) -> PointSet:
    """Integral points with ``y >= 1``."""
    _require_proper(sf)
    a, d = sf.a, sf.d
    pts: List[IntegralPoint] = []
    for t in parametric_triples(abs(d - a)):
        rho, m, n = t.rho, t.m, t.n
        if d > a:
            pts.append(IntegralPoint(-a + rho * m * m, rho * (m + n) ** 2))
        elif m > n:
            y = rho * (m - n) ** 2
            pts.append(IntegralPoint(-a + rho * m * m, y))  # x > -d
            pts.append(IntegralPoint(-a + rho * n * n, y))  # -a < x < -d
    return PointSet.of(pts)


def parametric_points_negative(sf: SquareForm) -> PointSet:
    """Integral points with ``y <= -1``."""
    _require_proper(sf)
    a, d = sf.a, sf.d
    pts: List[IntegralPoint] = []
    for t in parametric_triples(abs(d - a)):
        rho, m, n = t.rho, t.m, t.n
        if d < a:
            pts.append(IntegralPoint(-a - rho * m * m, -rho * (m + n) ** 2))
        elif m > n:
            y = -rho * (m - n) ** 2
            pts.append(IntegralPoint(-a - rho * m * m, y))  # x < -d
            pts.append(IntegralPoint(-a - rho * n * n, y))  # -d < x < -a
    return PointSet.of(pts)


def zero_point(sf: SquareForm) -> IntegralPoint:
    _require_proper(sf)
    return IntegralPoint(-sf.d, 0)


def parametric_points(sf: SquareForm) -> PointSet:
    """All integral points of a proper square-case curve, from the three families."""
    return parametric_points_positive(sf).union(
        parametric_points_negative(sf), PointSet.of([zero_point(sf)])
    )
