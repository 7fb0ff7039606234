"""Value types shared by every module.

All types are frozen; nothing in here does more than construct, validate and
compare values.  The membership predicate :func:`on_curve` lives here because
every producer of points is checked against it.
"""

from __future__ import annotations

import bisect
import enum
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Optional, Tuple, Union

DEFAULT_BOUND = 10**9
BOUND_ENV = "HYPERLATTICE_BOUND"

# magnitude limit for intermediate values; mirrors checked signed 128-bit math
INT128_LIMIT = 2**127


class DomainError(ValueError):
    """An operation was called outside its domain (wrong curve class, bad pair...)."""


class BoundError(ValueError):
    """A curve coefficient exceeds the configured input bound."""


class ArithmeticOverflow(ArithmeticError):
    """An intermediate value left the signed 128-bit range."""


def default_bound() -> int:
    raw = os.environ.get(BOUND_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise BoundError(f"{BOUND_ENV} is not an integer: {raw!r}") from None
    if value < 1:
        raise BoundError(f"{BOUND_ENV} must be positive, got {value}")
    return value


def checked(value: int) -> int:
    if not -INT128_LIMIT <= value < INT128_LIMIT:
        raise ArithmeticOverflow(f"value {value} exceeds signed 128-bit range")
    return value


class Sign(str, enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class CurveParams:
    """The integer triple (a, b, c) of ``y = (x^2 + b x + c) / (x + a)``."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {type(value).__name__}")

    @classmethod
    def parse(cls, a, b, c, bound: Optional[int] = None) -> "CurveParams":
        """Build from ints or decimal strings, rejecting coefficients above ``bound``."""
        if bound is None:
            bound = default_bound()
        values = []
        for name, raw in (("a", a), ("b", b), ("c", c)):
            if isinstance(raw, str):
                try:
                    raw = int(raw.strip())
                except ValueError:
                    raise ValueError(f"{name} is not an integer: {raw!r}") from None
            if isinstance(raw, bool) or not isinstance(raw, int):
                raise ValueError(f"{name} is not an integer: {raw!r}")
            if abs(raw) > bound:
                raise BoundError(f"|{name}| = {abs(raw)} exceeds bound {bound}")
            values.append(raw)
        return cls(*values)

    def numerator(self, x: int) -> int:
        return x * x + self.b * x + self.c

    def __str__(self) -> str:
        num = "x^2" + _signed(self.b, "x") + _signed(self.c, "")
        den = "x" + _signed(self.a, "")
        return f"y = ({num}) / ({den})"


def _signed(coef: int, var: str) -> str:
    if coef == 0:
        return ""
    mag = abs(coef)
    body = var if (mag == 1 and var) else f"{mag}{var}"
    return f" {'+' if coef > 0 else '-'} {body}"


class IntegralPoint(NamedTuple):
    x: int
    y: int


def on_curve(curve: CurveParams, x: int, y: int) -> bool:
    """Exact membership: ``x != -a`` and ``y (x + a) = x^2 + b x + c``."""
    if x == -curve.a:
        return False
    return y * (x + curve.a) == curve.numerator(x)


@dataclass(frozen=True)
class PointSet:
    """Sorted, duplicate-free tuple of integral points."""

    points: Tuple[IntegralPoint, ...] = ()

    def __post_init__(self) -> None:
        pts = self.points
        if any(not (p < q) for p, q in zip(pts, pts[1:])):
            raise ValueError("PointSet points must be strictly ascending; use PointSet.of")

    @classmethod
    def of(cls, points: Iterable[Tuple[int, int]]) -> "PointSet":
        return cls(tuple(sorted({IntegralPoint(int(x), int(y)) for x, y in points})))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[IntegralPoint]:
        return iter(self.points)

    def __contains__(self, item) -> bool:
        item = tuple(item)
        i = bisect.bisect_left(self.points, item)
        return i < len(self.points) and self.points[i] == item

    def union(self, *others: "PointSet") -> "PointSet":
        merged = list(self.points)
        for other in others:
            merged.extend(other.points)
        return PointSet.of(merged)

    def xs(self) -> Tuple[int, ...]:
        return tuple(p.x for p in self.points)


@dataclass(frozen=True)
class Fingerprint:
    """``D = a^2 - a b + c`` and its squareness."""

    value: int
    magnitude: int
    is_square: bool
    sqrt_magnitude: Optional[int] = None

    def __post_init__(self) -> None:
        if self.magnitude != abs(self.value):
            raise ValueError("magnitude must equal |value|")
        if self.is_square != (self.sqrt_magnitude is not None):
            raise ValueError("sqrt_magnitude must be present exactly when is_square")
        if self.sqrt_magnitude is not None and self.sqrt_magnitude**2 != self.magnitude:
            raise ValueError("sqrt_magnitude^2 != magnitude")

    @property
    def sign(self) -> Optional[Sign]:
        if self.value > 0:
            return Sign.POSITIVE
        if self.value < 0:
            return Sign.NEGATIVE
        return None


@dataclass(frozen=True)
class DegenerateLine:
    pass


@dataclass(frozen=True)
class Hyperbola:
    sign: Sign
    is_square: bool


CurveClass = Union[DegenerateLine, Hyperbola]


@dataclass(frozen=True)
class DivisorPair:
    """``(d2, d1)`` with ``d2 <= d1``; ``d1 * d2`` is the magnitude it came from."""

    d2: int
    d1: int

    def __post_init__(self) -> None:
        if not 1 <= self.d2 <= self.d1:
            raise ValueError(f"need 1 <= d2 <= d1, got ({self.d2}, {self.d1})")

    @property
    def product(self) -> int:
        return self.d1 * self.d2

    @property
    def sum(self) -> int:
        return self.d1 + self.d2

    @property
    def diff(self) -> int:
        return self.d1 - self.d2


@dataclass(frozen=True)
class ParametricLine:
    """``{(t, t + intercept_shift) : t != excluded_x}``."""

    intercept_shift: int
    excluded_x: int

    def contains(self, x: int, y: int) -> bool:
        return x != self.excluded_x and y == x + self.intercept_shift

    def point(self, t: int) -> IntegralPoint:
        if t == self.excluded_x:
            raise DomainError(f"t = {t} is the excluded abscissa")
        return IntegralPoint(t, t + self.intercept_shift)

    @property
    def hole(self) -> IntegralPoint:
        """Where the line is punctured: ``(-a, b - 2a)``."""
        return IntegralPoint(self.excluded_x, self.excluded_x + self.intercept_shift)

    def describe(self, ascii_only: bool = True) -> str:
        s = self.intercept_shift
        rhs = "x" if s == 0 else f"x+{s}" if s > 0 else f"x-{-s}"
        if ascii_only:
            return f"y={rhs}, x!={self.excluded_x}"
        rhs = rhs.replace("+", " + ").replace("-", " - ")
        return f"y = {rhs}, x ≠ {self.excluded_x}"


@dataclass(frozen=True)
class SquareForm:
    """A curve with ``b = 2d`` and ``c = d^2``, i.e. ``y = (x + d)^2 / (x + a)``."""

    a: int
    d: int

    @property
    def curve(self) -> CurveParams:
        return CurveParams(self.a, 2 * self.d, self.d * self.d)

    def f(self, x):
        """Evaluate at an int, Fraction or float (exact for the first two)."""
        if isinstance(x, float):
            return (x + self.d) ** 2 / (x + self.a)
        return Fraction(x + self.d) ** 2 / (x + self.a)


@dataclass(frozen=True)
class ParametricTriple:
    rho: int
    m: int
    n: int


@dataclass(frozen=True)
class Infinite:
    pass


@dataclass(frozen=True)
class Finite:
    n_small_divisors: int
    total: int


CountPrediction = Union[Infinite, Finite]


class FormKind(str, enum.Enum):
    UNIT = "unit"
    PRIME = "prime"
    PRIME_SQUARE = "prime_square"
    SEMI_PRIME = "semi_prime"


_FORM_COUNTS = {
    FormKind.UNIT: 2,
    FormKind.PRIME: 4,
    FormKind.PRIME_SQUARE: 6,
    FormKind.SEMI_PRIME: 8,
}


@dataclass(frozen=True)
class SpecialForm:
    """``|D|`` is 1, a prime, a prime square, or a product of two distinct primes."""

    kind: FormKind
    primes: Tuple[int, ...]
    sign_of_D: Sign

    @property
    def expected_count(self) -> int:
        return _FORM_COUNTS[self.kind]

    def to_dict(self) -> dict:
        return {
            "form": self.kind.value,
            "primes": list(self.primes),
            "sign": self.sign_of_D.value,
            "expected_count": self.expected_count,
        }


# -- calculus report for the square case ------------------------------------


class Direction(str, enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


@dataclass(frozen=True)
class Interval:
    """Open interval; ``None`` stands for the matching infinity."""

    lo: Optional[int]
    hi: Optional[int]

    def __contains__(self, x) -> bool:
        return (self.lo is None or x > self.lo) and (self.hi is None or x < self.hi)


@dataclass(frozen=True)
class MonotoneInterval:
    interval: Interval
    direction: Direction


@dataclass(frozen=True)
class RationalPoint:
    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class LineShape:
    """``a == d``: the line ``y = x + intercept`` punctured at ``hole_x``."""

    intercept: int
    hole_x: int
    slope: int = 1


@dataclass(frozen=True)
class ProperSquareCase:
    vertical_asymptote_x: int
    oblique_intercept: int
    x_intercept: IntegralPoint
    y_intercept: Optional[Fraction]
    critical_xs: Tuple[int, int]
    local_max: RationalPoint
    local_min: RationalPoint
    monotone_intervals: Tuple[MonotoneInterval, ...]
    concave_down: Interval
    concave_up: Interval
    inflection_points: Tuple[RationalPoint, ...] = field(default=())
    oblique_slope: int = 1


AnalysisShape = Union[LineShape, ProperSquareCase]


@dataclass(frozen=True)
class AnalysisReport:
    square_form: SquareForm
    shape: AnalysisShape

    @property
    def is_line(self) -> bool:
        return isinstance(self.shape, LineShape)
