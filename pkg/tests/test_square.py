import itertools
import math
import random
from fractions import Fraction

import pytest

from hyperlattice.enumeration import enumerate_points, fingerprint
from hyperlattice.model import (
    CurveParams,
    Direction,
    DomainError,
    LineShape,
    ParametricTriple,
    PointSet,
    SquareForm,
    on_curve,
)
from hyperlattice.square import (
    analyze,
    as_square_form,
    derivative,
    parametric_points,
    parametric_points_negative,
    parametric_points_positive,
    parametric_triples,
    second_derivative,
    zero_point,
)


def test_as_square_form():
    assert as_square_form(CurveParams(0, 4, 4)) == SquareForm(0, 2)
    assert as_square_form(CurveParams(0, 3, 2)) is None
    assert as_square_form(CurveParams(1, 2, 1)) == SquareForm(1, 1)
    assert as_square_form(CurveParams(5, -6, 9)) == SquareForm(5, -3)
    assert as_square_form(CurveParams(5, -6, 8)) is None
    assert SquareForm(5, -3).curve == CurveParams(5, -6, 9)


def test_analyze_line_case():
    report = analyze(SquareForm(1, 1))
    assert report.is_line
    assert report.shape == LineShape(intercept=1, hole_x=-1)


def test_analyze_a_below_d():
    shape = analyze(SquareForm(0, 1)).shape
    assert shape.critical_xs == (-1, 1)
    assert (shape.local_min.x, shape.local_min.y) == (1, 4)
    assert (shape.local_max.x, shape.local_max.y) == (-1, 0)
    assert shape.vertical_asymptote_x == 0
    assert shape.oblique_intercept == 2
    assert shape.y_intercept is None
    assert shape.inflection_points == ()
    dirs = [m.direction for m in shape.monotone_intervals]
    assert dirs == [Direction.INCREASING, Direction.DECREASING, Direction.DECREASING, Direction.INCREASING]


def test_analyze_d_below_a():
    shape = analyze(SquareForm(2, 0)).shape
    assert set(shape.critical_xs) == {0, -4}
    # f(-4) = 16 / (-2)
    assert SquareForm(2, 0).f(-4) == -8
    assert (shape.local_max.x, shape.local_max.y) == (-4, -8)
    assert (shape.local_min.x, shape.local_min.y) == (0, 0)
    assert shape.y_intercept == 0
    assert analyze(SquareForm(3, 1)).shape.y_intercept == Fraction(1, 3)


@pytest.mark.parametrize("a, d", [(a, d) for a, d in itertools.product(range(-7, 8), repeat=2) if a != d])
def test_analysis_consistency(a, d):
    sf = SquareForm(a, d)
    shape = analyze(sf).shape
    for cx in shape.critical_xs:
        assert derivative(sf, cx) == 0
    assert sf.f(shape.local_max.x) == shape.local_max.y
    assert sf.f(shape.local_min.x) == shape.local_min.y
    assert {shape.local_max.y, shape.local_min.y} == {0, 4 * (d - a)}
    # monotone intervals agree with the sign of f' at interior rationals
    for m in shape.monotone_intervals:
        lo = m.interval.lo if m.interval.lo is not None else m.interval.hi - 5
        hi = m.interval.hi if m.interval.hi is not None else m.interval.lo + 5
        for frac in (Fraction(1, 3), Fraction(1, 2), Fraction(7, 9)):
            x = lo + (hi - lo) * frac
            slope = derivative(sf, x)
            assert slope > 0 if m.direction is Direction.INCREASING else slope < 0
    for x in (Fraction(-a) + Fraction(1, 7), Fraction(-a + 3)):
        assert second_derivative(sf, x) > 0 and x in shape.concave_up
    for x in (Fraction(-a) - Fraction(1, 7), Fraction(-a - 3)):
        assert second_derivative(sf, x) < 0 and x in shape.concave_down


def test_parametric_triples():
    assert list(parametric_triples(1)) == [ParametricTriple(1, 1, 1)]
    got = set(parametric_triples(12))
    expected = {
        ParametricTriple(rho, m, (12 // rho) // m)
        for rho in range(1, 13) if 12 % rho == 0
        for m in range(1, 13) if (12 // rho) % m == 0
        and math.gcd(m, (12 // rho) // m) == 1
    }
    assert got == expected
    with pytest.raises(DomainError):
        list(parametric_triples(0))


def test_parametric_examples():
    assert parametric_points_positive(SquareForm(0, 2)).points == ((1, 9), (2, 8), (4, 9))
    assert parametric_points_positive(SquareForm(2, 0)).points == ((-1, 1), (2, 1))
    assert parametric_points_positive(SquareForm(0, 1)).points == ((1, 4),)
    assert parametric_points_negative(SquareForm(0, 2)).points == ((-4, -1), (-1, -1))
    assert parametric_points_negative(SquareForm(2, 0)).points == ((-6, -9), (-4, -8), (-3, -9))
    assert parametric_points_negative(SquareForm(0, 1)) == PointSet()


def test_zero_point():
    assert zero_point(SquareForm(0, 2)) == (-2, 0)
    assert zero_point(SquareForm(0, 1)) == (-1, 0)
    assert zero_point(SquareForm(3, -1)) == (1, 0)


@pytest.mark.parametrize(
    "fn", [parametric_points_positive, parametric_points_negative, zero_point]
)
def test_line_case_rejected(fn):
    with pytest.raises(DomainError):
        fn(SquareForm(4, 4))


@pytest.mark.parametrize("a, d", [(a, d) for a, d in itertools.product(range(-12, 13), repeat=2) if a != d])
def test_partition_matches_enumeration(a, d):
    sf = SquareForm(a, d)
    pos = parametric_points_positive(sf)
    neg = parametric_points_negative(sf)
    zero = zero_point(sf)
    assert fingerprint(sf.curve).value == (a - d) ** 2
    assert all(y >= 1 for _, y in pos) and all(y <= -1 for _, y in neg)
    assert zero not in pos and zero not in neg
    assert parametric_points(sf) == enumerate_points(sf.curve)
    assert all(on_curve(sf.curve, *p) for p in parametric_points(sf))
    if d > a:
        assert (d - 2 * a, 4 * (d - a)) in pos


def test_finite_difference_derivative():
    rng = random.Random(7)
    for _ in range(200):
        a, d = rng.randint(-30, 30), rng.randint(-30, 30)
        if a == d:
            continue
        sf = SquareForm(a, d)
        x = rng.uniform(-80, 80)
        if abs(x + a) < 0.25:
            continue
        fx = Fraction(x)
        h = Fraction(1, 10**7)
        fd = (sf.f(fx + h) - sf.f(fx - h)) / (2 * h)
        exact = derivative(sf, fx)
        assert abs(fd - exact) <= Fraction(1, 10**6) * max(abs(exact), Fraction(1, 10**6))
