"""Write a few SVG plots: a punctured line, both square-case shapes and a
general hyperbola.

Run:  python demos/04_plots.py [output-dir]
"""

import pathlib
import sys

from hyperlattice import CurveParams
from hyperlattice.plot import Viewport, plot_curve

out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "plots")
out.mkdir(parents=True, exist_ok=True)

plots = {
    "line_a_neg.svg": (CurveParams(-2, -4, 4), None),
    "line_a_zero.svg": (CurveParams(0, 0, 0), None),
    "square_a_below_d.svg": (CurveParams(0, 4, 4), Viewport(-8, 8, -12, 12)),
    "square_d_below_a.svg": (CurveParams(2, 0, 0), Viewport(-10, 6, -14, 8)),
    "hyperbola_D12.svg": (CurveParams(2, 1, 10), None),
}
for name, (curve, vp) in plots.items():
    path = out / name
    path.write_text(plot_curve(curve, vp), encoding="utf-8")
    print("wrote", path)
