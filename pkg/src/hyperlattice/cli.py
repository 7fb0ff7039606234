"""Command line front end: ``python -m hyperlattice <command> a b c``.

Exit codes: 0 ok, 1 domain error, 2 parse / bound / overflow / io error,
3 oracle mismatch from ``verify``.  Errors print one line
``error: <kind>: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import enumeration, oracle, square
from .formats import FORMATS, batch_process, dumps, encode_points, points_to_list
from .model import (
    ArithmeticOverflow,
    BoundError,
    CurveParams,
    DegenerateLine,
    DomainError,
    Finite,
    LineShape,
    default_bound,
)
from .plot import Viewport, default_viewport, plot_curve
from .trinomial import (
    Trinomial,
    classify_roots,
    discriminant,
    integer_roots,
    unit_leading_shortcut,
)

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_MISMATCH = 0, 1, 2, 3
DEGENERATE_VERIFY_WIDTH = 16


class Mismatch(Exception):
    pass


class CliError(Exception):
    def __init__(self, kind: str, message: str, code: int):
        super().__init__(message)
        self.kind, self.code = kind, code


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def emit_mapping(record: dict, fmt: str) -> str:
    record = _jsonable(record)
    if fmt == "json":
        return dumps(record) + "\n"
    lines = ["key,value"] if fmt == "csv" else []
    for key, value in record.items():
        text = value if isinstance(value, str) else dumps(value)
        if fmt == "csv":
            text = '"' + text.replace('"', '""') + '"' if ("," in text or '"' in text) else text
            lines.append(f"{key},{text}")
        else:
            lines.append(f"{key}: {text}")
    return "\n".join(lines) + "\n"


# -- commands -----------------------------------------------------------------


def cmd_classify(curve: CurveParams, fmt: str) -> str:
    fp = enumeration.fingerprint(curve)
    cls = enumeration.classify(curve)
    record = {"D": fp.value, "class": enumeration.class_label(cls)}
    if isinstance(cls, DegenerateLine):
        record["family"] = enumeration.degenerate_family(curve).describe()
    else:
        form = enumeration.special_form(curve)
        record["special_form"] = form.to_dict() if form else None
    return emit_mapping(record, fmt)


def cmd_points(curve: CurveParams, fmt: str) -> str:
    ps = enumeration.enumerate_points(curve)
    text = encode_points(ps, fmt)
    return text if text.endswith("\n") else text + "\n"


def cmd_count(curve: CurveParams, fmt: str) -> str:
    pred = enumeration.predicted_count(curve)
    fp = enumeration.fingerprint(curve)
    if not isinstance(pred, Finite):
        family = enumeration.degenerate_family(curve)
        if fmt == "table":
            return f"infinite; family {family.describe(ascii_only=False)}\n"
        return emit_mapping({"D": 0, "count": "infinite", "family": family.describe()}, fmt)
    record = {
        "D": fp.value,
        "count": pred.total,
        "N": pred.n_small_divisors,
        "square": fp.is_square,
    }
    if fmt == "table":
        rule = "4N - 2" if fp.is_square else "4N"
        return f"{pred.total} integral points ({rule}, N = {pred.n_small_divisors}, D = {fp.value})\n"
    return emit_mapping(record, fmt)


def _square_form(curve: CurveParams):
    sf = square.as_square_form(curve)
    if sf is None:
        raise DomainError(f"not a square-case curve: b^2 - 4c = {curve.b ** 2 - 4 * curve.c} != 0")
    return sf


def _interval(iv) -> list:
    return [iv.lo if iv.lo is not None else "-inf", iv.hi if iv.hi is not None else "+inf"]


def cmd_analyze(curve: CurveParams, fmt: str) -> str:
    report = square.analyze(_square_form(curve))
    shape = report.shape
    if isinstance(shape, LineShape):
        record = {
            "shape": "line",
            "slope": shape.slope,
            "intercept": shape.intercept,
            "hole_x": shape.hole_x,
        }
        return emit_mapping(record, fmt)
    record = {
        "shape": "proper_square_case",
        "d": report.square_form.d,
        "vertical_asymptote_x": shape.vertical_asymptote_x,
        "oblique_asymptote": {"slope": 1, "intercept": shape.oblique_intercept},
        "x_intercept": list(shape.x_intercept),
        "y_intercept": shape.y_intercept,
        "critical_xs": list(shape.critical_xs),
        "local_max": [shape.local_max.x, shape.local_max.y],
        "local_min": [shape.local_min.x, shape.local_min.y],
        "monotone": [
            {"interval": _interval(m.interval), "direction": m.direction.value}
            for m in shape.monotone_intervals
        ],
        "concave_down": _interval(shape.concave_down),
        "concave_up": _interval(shape.concave_up),
        "inflection_points": [],
    }
    return emit_mapping(record, fmt)


def cmd_parametric(curve: CurveParams, fmt: str) -> str:
    sf = _square_form(curve)
    pos = square.parametric_points_positive(sf)
    neg = square.parametric_points_negative(sf)
    zero = square.zero_point(sf)
    if fmt == "json":
        record = {
            "positive": points_to_list(pos),
            "negative": points_to_list(neg),
            "zero": {"x": zero.x, "y": zero.y},
        }
        return dumps(record) + "\n"
    rows = [("positive", p) for p in pos] + [("negative", p) for p in neg] + [("zero", zero)]
    if fmt == "csv":
        return "family,x,y\n" + "".join(f"{fam},{p.x},{p.y}\n" for fam, p in rows)
    return "".join(f"{fam:<9} {p.x:>8} {p.y:>8}\n" for fam, p in rows)


def cmd_trinomial(a: int, b: int, c: int, fmt: str) -> str:
    g = Trinomial(a, b, c)
    roots = integer_roots(g)
    record = {
        "discriminant": discriminant(g),
        "nature": classify_roots(g).value,
        "integer_roots": list(roots) if roots else None,
    }
    if abs(a) == 1:
        shortcut = unit_leading_shortcut(g)
        record["unit_shortcut"] = list(shortcut) if shortcut else None
    return emit_mapping(record, fmt)


def cmd_verify(curve: CurveParams, fmt: str) -> str:
    fp = enumeration.fingerprint(curve)
    if fp.value == 0:
        family = enumeration.degenerate_family(curve)
        w = DEGENERATE_VERIFY_WIDTH
        scanned = oracle.window_scan_points(curve, w)
        ok = len(scanned) == 2 * w and all(family.contains(*p) for p in scanned)
        msg = (
            f"degenerate line {family.describe()}: {len(scanned)} = {2 * w} points "
            f"with 1 <= |x+a| <= {w} (family/window-scan)"
        )
        if not ok:
            raise Mismatch(msg)
        return f"OK: {msg}\n"
    formula = enumeration.enumerate_points(curve)
    scan = oracle.divisor_scan_points(curve)
    window = oracle.window_scan_points(curve, oracle.completeness_bound(curve))
    counts = f"{len(formula)} = {len(scan)} = {len(window)} points"
    if not (formula == scan == window):
        raise Mismatch(f"{counts.replace(' = ', ' / ')} differ (formula/divisor-scan/window-scan)")
    return f"OK: {counts} (formula/divisor-scan/window-scan)\n"


def cmd_plot(curve: CurveParams, args) -> str:
    bounds = (args.xmin, args.xmax, args.ymin, args.ymax)
    if all(v is None for v in bounds):
        vp = None
    else:
        base = default_viewport(curve)
        vp = Viewport(
            base.xmin if args.xmin is None else args.xmin,
            base.xmax if args.xmax is None else args.xmax,
            base.ymin if args.ymin is None else args.ymin,
            base.ymax if args.ymax is None else args.ymax,
        )
    return plot_curve(curve, vp)


def cmd_batch(path: str, bound: int) -> str:
    try:
        if path == "-":
            lines = sys.stdin.read().splitlines()
        else:
            with open(path, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise CliError("io", f"cannot read {path}: {exc}", EXIT_PARSE) from None
    return "".join(line + "\n" for line in batch_process(lines, bound))


# -- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--bound", type=int, default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="hyperlattice",
        description="Integral points on y = (x^2 + b x + c) / (x + a).",
    )
    parser.add_argument("--format", choices=FORMATS, default="table")
    parser.add_argument("--bound", type=int, default=None, help="coefficient bound (default 1e9)")
    parser.add_argument("--out", default=None, help="write output here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    helps = {
        "classify": "fingerprint D, curve class and special form",
        "points": "all integral points",
        "count": "predicted number of integral points",
        "analyze": "calculus report for a square-case curve (b^2 = 4c)",
        "parametric": "square-case points by parametric family",
        "trinomial": "root nature and integer roots of a x^2 + b x + c",
        "verify": "cross-check the formula against both brute-force oracles",
        "plot": "SVG plot of the curve and its integral points",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text, parents=[common])
        for coef in ("a", "b", "c"):
            p.add_argument(coef)
        if name == "plot":
            for edge in ("xmin", "xmax", "ymin", "ymax"):
                p.add_argument(f"--{edge}", type=float, default=None)
    batch = sub.add_parser("batch", help="JSON-lines batch mode", parents=[common])
    batch.add_argument("path", help="input file, or - for stdin")
    return parser


def _dispatch(args) -> str:
    bound = args.bound if args.bound is not None else default_bound()
    if bound < 1:
        raise BoundError(f"bound must be positive, got {bound}")
    fmt = args.format
    if args.command == "batch":
        return cmd_batch(args.path, bound)
    if args.command == "trinomial":
        coefs = CurveParams.parse(args.a, args.b, args.c, bound=bound)
        return cmd_trinomial(coefs.a, coefs.b, coefs.c, fmt)
    curve = CurveParams.parse(args.a, args.b, args.c, bound=bound)
    if args.command == "plot":
        return cmd_plot(curve, args)
    handler = {
        "classify": cmd_classify,
        "points": cmd_points,
        "count": cmd_count,
        "analyze": cmd_analyze,
        "parametric": cmd_parametric,
        "verify": cmd_verify,
    }[args.command]
    return handler(curve, fmt)


def run_cli(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK

    def fail(kind: str, message: str, code: int) -> int:
        stderr.write(f"error: {kind}: {' '.join(str(message).split())}\n")
        return code

    try:
        output = _dispatch(args)
    except Mismatch as exc:
        stdout.write(f"MISMATCH: {exc}\n")
        return fail("mismatch", str(exc), EXIT_MISMATCH)
    except CliError as exc:
        return fail(exc.kind, str(exc), exc.code)
    except BoundError as exc:
        return fail("bound", str(exc), EXIT_PARSE)
    except DomainError as exc:
        return fail("domain", str(exc), EXIT_DOMAIN)
    except ArithmeticOverflow as exc:
        return fail("overflow", str(exc), EXIT_PARSE)
    except ValueError as exc:
        return fail("parse", str(exc), EXIT_PARSE)

    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(output)
        except OSError as exc:
            return fail("io", f"cannot write {args.out}: {exc}", EXIT_PARSE)
    else:
        stdout.write(output)
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
