"""Point-set encodings and the JSON-lines batch format.

JSON is compact (``[{"x":1,"y":2}]``), CSV carries an ``x,y`` header, and the
table is right aligned.  All three are deterministic for a given point set.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from typing import Iterable, Iterator, Optional

from .enumeration import (
    class_label,
    classify,
    degenerate_family,
    enumerate_points,
    fingerprint,
    special_form,
)
from .model import BoundError, CurveParams, DegenerateLine, PointSet

FORMATS = ("table", "json", "csv")


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def points_to_list(ps: PointSet) -> list:
    return [{"x": p.x, "y": p.y} for p in ps]


def encode_points(ps: PointSet, fmt: str = "json") -> str:
    if fmt == "json":
        return dumps(points_to_list(ps))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["x", "y"])
        writer.writerows(ps)
        return buf.getvalue()
    if fmt == "table":
        rows = [("x", "y")] + [(str(p.x), str(p.y)) for p in ps]
        wx = max(len(r[0]) for r in rows)
        wy = max(len(r[1]) for r in rows)
        return "".join(f"{x:>{wx}}  {y:>{wy}}\n" for x, y in rows)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def decode_points(text: str, fmt: str = "json") -> PointSet:
    if fmt == "json":
        return PointSet.of((item["x"], item["y"]) for item in json.loads(text))
    if fmt == "csv":
        reader = csv.DictReader(io.StringIO(text))
        return PointSet.of((int(row["x"]), int(row["y"])) for row in reader)
    raise ValueError(f"cannot decode format {fmt!r}")


def curve_record(curve: CurveParams) -> dict:
    """Everything the batch format reports about one curve."""
    fp = fingerprint(curve)
    cls = classify(curve)
    record = {"a": curve.a, "b": curve.b, "c": curve.c, "D": fp.value, "class": class_label(cls)}
    if isinstance(cls, DegenerateLine):
        record["count"] = "infinite"
        record["family"] = degenerate_family(curve).describe()
        return record
    ps = enumerate_points(curve)
    record["count"] = len(ps)
    record["points"] = points_to_list(ps)
    form = special_form(curve)
    if form is not None:
        record["special_form"] = form.to_dict()
    return record


def _parse_line(line: str, bound: Optional[int]) -> CurveParams:
    obj = json.loads(line)
    if not isinstance(obj, dict) or not {"a", "b", "c"} <= set(obj):
        raise ValueError("expected an object with keys a, b, c")
    values = [obj["a"], obj["b"], obj["c"]]
    if any(isinstance(v, bool) or not isinstance(v, int) for v in values):
        raise ValueError("a, b, c must be JSON integers")
    return CurveParams.parse(*values, bound=bound)


def batch_process(lines: Iterable[str], bound: Optional[int] = None) -> Iterator[str]:
    """Yield one JSON line per non-blank input line, then a summary line.

    Bad lines produce ``{"error": reason}`` (reason ``parse`` or ``bound``) and
    processing carries on.
    """
    by_class: Counter = Counter()
    by_form: Counter = Counter()
    n_ok = n_err = 0
    for line in lines:
        if not line.strip():
            continue
        try:
            curve = _parse_line(line, bound)
        except BoundError:
            n_err += 1
            yield dumps({"error": "bound"})
            continue
        except (ValueError, KeyError, TypeError):
            n_err += 1
            yield dumps({"error": "parse"})
            continue
        try:
            record = curve_record(curve)
        except ArithmeticError:
            n_err += 1
            yield dumps({"error": "overflow"})
            continue
        n_ok += 1
        by_class[record["class"]] += 1
        if "special_form" in record:
            by_form[record["special_form"]["form"]] += 1
        yield dumps(record)
    yield dumps(
        {
            "summary": {
                "curves": n_ok,
                "errors": n_err,
                "by_class": dict(sorted(by_class.items())),
                "by_special_form": dict(sorted(by_form.items())),
            }
        }
    )
