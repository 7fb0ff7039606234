"""Integral points on y = (x^2 + b x + c) / (x + a): enumeration and counting.

Run:  python demos/01_points_and_counts.py
"""

from hyperlattice import (
    CurveParams,
    classify,
    divisor_pairs,
    enumerate_points,
    fingerprint,
    points_for_pair,
    predicted_count,
    special_form,
)
from hyperlattice.enumeration import degenerate_family

# %% Everything is decided by D = a^2 - a b + c, the value of the numerator at x = -a.
curve = CurveParams(2, 1, 10)
fp = fingerprint(curve)
print(curve, "  D =", fp.value, " square:", fp.is_square)
print("class:", classify(curve))

# %% Each divisor pair d2 <= d1 of |D| contributes four points.
for pair in divisor_pairs(fp.magnitude):
    print(f"  pair ({pair.d2}, {pair.d1}) ->", points_for_pair(curve, pair))

points = enumerate_points(curve)
print("all points:", list(points))
print("predicted:", predicted_count(curve))

# %% When |D| is a perfect square the pair (k, k) only gives two points: 4N - 2.
sq = CurveParams(0, 0, -4)
print(sq, "->", list(enumerate_points(sq)), predicted_count(sq))

# %% Small |D| has a closed-form count.
for coefs in [(1, 3, 1), (0, 0, 1), (0, 0, -7), (0, 0, 25), (0, 0, 6), (0, 0, 12)]:
    c = CurveParams(*coefs)
    form = special_form(c)
    label = "-" if form is None else f"{form.kind.value} {form.primes} ({form.sign_of_D.value})"
    print(f"{coefs!s:>14}  D={fingerprint(c).value:>4}  {label:<28} points={len(enumerate_points(c))}")

# %% D = 0: the curve is a line with one point removed.
line = CurveParams(1, 2, 1)
print(line, "->", degenerate_family(line).describe(ascii_only=False))
