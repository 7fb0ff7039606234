"""The square case b^2 = 4c, i.e. y = (x + d)^2 / (x + a).

Shows the exact calculus report and the three parametric point families,
then checks they add up to the full enumeration.

Run:  python demos/02_square_case.py
"""

from hyperlattice import CurveParams, PointSet, analyze, as_square_form, enumerate_points
from hyperlattice.square import (
    parametric_points_negative,
    parametric_points_positive,
    parametric_triples,
    zero_point,
)

for a, d in [(0, 2), (2, 0), (-3, 5), (4, 4)]:
    sf = as_square_form(CurveParams(a, 2 * d, d * d))
    report = analyze(sf)
    print(f"\n--- a = {a}, d = {d} ---")
    if report.is_line:
        print("line y = x +", report.shape.intercept, " hole at x =", report.shape.hole_x)
        continue
    s = report.shape
    print("vertical asymptote  x =", s.vertical_asymptote_x)
    print(f"oblique asymptote   y = x + ({s.oblique_intercept})")
    print("critical xs        ", s.critical_xs)
    print("local max          ", f"({s.local_max.x}, {s.local_max.y})")
    print("local min          ", f"({s.local_min.x}, {s.local_min.y})")
    for m in s.monotone_intervals:
        print(f"  {m.direction.value:<10} on ({m.interval.lo}, {m.interval.hi})")

    print("(rho, m, n) triples:", [(t.rho, t.m, t.n) for t in parametric_triples(abs(d - a))])
    pos = parametric_points_positive(sf)
    neg = parametric_points_negative(sf)
    print("y >= 1 :", [tuple(p) for p in pos])
    print("y <= -1:", [tuple(p) for p in neg])
    print("y = 0  :", tuple(zero_point(sf)))
    assert pos.union(neg, PointSet.of([zero_point(sf)])) == enumerate_points(sf.curve)
