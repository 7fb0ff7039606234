"""Checking the divisor-pair formula against two brute-force scans, and the
integer-root test for quadratic trinomials that underlies it.

Run:  python demos/03_oracles_and_trinomials.py
"""

import random
import time

from hyperlattice import (
    CurveParams,
    completeness_bound,
    divisor_scan_points,
    enumerate_points,
    window_scan_points,
)
from hyperlattice.trinomial import Trinomial, classify_roots, integer_roots

# %% Random sweep: the formula, the signed-divisor scan and a plain window scan agree.
rng = random.Random(0)
start, checked = time.perf_counter(), 0
while checked < 2000:
    curve = CurveParams(*(rng.randint(-50, 50) for _ in range(3)))
    if curve.numerator(-curve.a) == 0:
        continue
    checked += 1
    assert (
        enumerate_points(curve)
        == divisor_scan_points(curve)
        == window_scan_points(curve, completeness_bound(curve))
    )
print(f"{checked} curves agree ({time.perf_counter() - start:.2f} s)")

# %% Integer roots need a square discriminant *and* a | b, a | c.
for coefs in [(2, -6, 4), (2, -3, 1), (1, 2, 1), (-1, 0, 4), (1, 0, -2), (1, 0, 1)]:
    g = Trinomial(*coefs)
    print(f"{coefs!s:>12}  {classify_roots(g).value:<15} integer roots: {integer_roots(g)}")
