"""Brute-force point finders used to check :mod:`hyperlattice.enumeration`.

Neither function here touches the divisor-pair machinery.  ``window_scan_points``
is as naive as it gets: it tries every abscissa in a window and keeps the ones
where ``x + a`` divides the numerator.
"""

from __future__ import annotations

import numpy as np

from .model import CurveParams, DomainError, PointSet

# largest |numerator| for which the int64 scan is exact
_INT64_SAFE = 2**62


def _fingerprint_value(curve: CurveParams) -> int:
    # remainder of x^2 + b x + c on division by x + a
    return curve.numerator(-curve.a)


def completeness_bound(curve: CurveParams) -> int:
    """Every integral point has ``|x + a| <= |D|``."""
    D = _fingerprint_value(curve)
    if D == 0:
        raise DomainError("D = 0: the curve has infinitely many integral points")
    return abs(D)


def divisor_scan_points(curve: CurveParams) -> PointSet:
    """One point per signed divisor ``t`` of ``D``, at ``x = -a + t``."""
    D = _fingerprint_value(curve)
    if D == 0:
        raise DomainError("D = 0: the curve has infinitely many integral points")
    a, shift = curve.a, curve.b - curve.a
    pts = []
    for t in range(1, abs(D) + 1):
        if D % t:
            continue
        for s in (t, -t):
            x = -a + s
            pts.append((x, x + shift + D // s))
    return PointSet.of(pts)


def window_scan_points(curve: CurveParams, half_width: int) -> PointSet:
    """Points with ``1 <= |x + a| <= half_width``, found by direct divisibility tests."""
    if half_width < 1:
        return PointSet()
    a, b, c = curve.a, curve.b, curve.c
    reach = abs(a) + half_width
    if reach * reach + abs(b) * reach + abs(c) < _INT64_SAFE and half_width < 2**40:
        t = np.arange(-half_width, half_width + 1, dtype=np.int64)
        t = t[t != 0]
        x = t - a
        num = x * x + b * x + c
        hit = num % t == 0
        return PointSet.of(zip(x[hit].tolist(), (num[hit] // t[hit]).tolist()))
    pts = []
    for t in range(-half_width, half_width + 1):
        if t == 0:
            continue
        x = t - a
        num = x * x + b * x + c
        if num % t == 0:
            pts.append((x, num // t))
    return PointSet.of(pts)
