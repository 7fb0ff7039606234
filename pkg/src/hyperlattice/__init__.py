"""Integral points on the rational curves ``y = (x^2 + b x + c) / (x + a)``."""

from .arith import divisor_pairs, gcd, isqrt, perfect_square, small_divisors
from .enumeration import (
    classify,
    degenerate_family,
    enumerate_points,
    fingerprint,
    points_for_pair,
    predicted_count,
    special_form,
)
from .model import (
    ArithmeticOverflow,
    BoundError,
    CurveParams,
    DegenerateLine,
    DivisorPair,
    DomainError,
    Finite,
    Hyperbola,
    Infinite,
    IntegralPoint,
    ParametricLine,
    PointSet,
    Sign,
    SquareForm,
    on_curve,
)
from .oracle import completeness_bound, divisor_scan_points, window_scan_points
from .square import (
    analyze,
    as_square_form,
    parametric_points_negative,
    parametric_points_positive,
    zero_point,
)

__version__ = "0.1.0"
