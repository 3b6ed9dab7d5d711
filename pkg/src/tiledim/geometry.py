"""Exact axis-parallel boxes.

Coordinates are :class:`fractions.Fraction` values, plus the two float
infinities used only by the exterior boxes.  ``Fraction`` compares exactly
against ``math.inf``, so no wrapper type is needed; infinities are only ever
compared and passed through ``min``/``max``, never added or multiplied.

Axes are 0-based inside this module's helpers that take an ``axis`` index
on tuples, but every public function that reports or accepts a *dimension*
(``touch_dimensions``, :class:`Side`) uses 1-based numbering.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import PreconditionError, UsageError

Coord = Union[Fraction, float]

NEG_INF: float = -math.inf
POS_INF: float = math.inf

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse a ``"p/q"`` or ``"p"`` literal into a reduced Fraction."""
    if not isinstance(text, str):
        raise UsageError(f"rational literal must be a string, got {text!r}")
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise UsageError(f"malformed rational literal {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise UsageError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_coord(value: Coord) -> str:
    """Canonical text for a coordinate: ``"p/q"``, ``"p"``, ``"-inf"`` or ``"+inf"``."""
    if value == POS_INF:
        return "+inf"
    if value == NEG_INF:
        return "-inf"
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_finite(value: Coord) -> bool:
    return not (value == POS_INF or value == NEG_INF)


class Interval(NamedTuple):
    lo: Coord
    hi: Coord

    @property
    def degenerate(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Coord) -> bool:
        return self.lo <= x <= self.hi

    def length(self) -> Fraction:
        if not (is_finite(self.lo) and is_finite(self.hi)):
            raise PreconditionError("length of an unbounded interval")
        return self.hi - self.lo


@dataclass(frozen=True)
class Box:
    """Cartesian product of closed intervals."""

    intervals: tuple[Interval, ...]

    def __post_init__(self):
        ivs = tuple(Interval(lo, hi) for lo, hi in self.intervals)
        if not ivs:
            raise UsageError("a box needs at least one interval")
        for k, (lo, hi) in enumerate(ivs, start=1):
            if not lo <= hi:
                raise UsageError(f"interval {k} has lo > hi: [{format_coord(lo)}, {format_coord(hi)}]")
        object.__setattr__(self, "intervals", ivs)

    @classmethod
    def of(cls, *pairs) -> Box:
        """Convenience constructor: ``Box.of((-1, 0), ("1/2", 1))``."""
        return cls(tuple(Interval(_coerce(lo), _coerce(hi)) for lo, hi in pairs))

    @property
    def d(self) -> int:
        return len(self.intervals)

    @property
    def lo(self) -> tuple[Coord, ...]:
        return tuple(iv.lo for iv in self.intervals)

    @property
    def hi(self) -> tuple[Coord, ...]:
        return tuple(iv.hi for iv in self.intervals)

    @property
    def dim(self) -> int:
        return box_dimension(self)

    def contains_point(self, p: Sequence[Coord]) -> bool:
        return all(iv.lo <= x <= iv.hi for iv, x in zip(self.intervals, p))

    def contains_box(self, other: Box) -> bool:
        return all(a.lo <= b.lo and b.hi <= a.hi for a, b in zip(self.intervals, other.intervals))

    def volume(self) -> Fraction:
        v = Fraction(1)
        for iv in self.intervals:
            v *= iv.length()
        return v

    def replace(self, axis: int, interval: tuple[Coord, Coord]) -> Box:
        """Copy with the interval on 0-based ``axis`` swapped out."""
        ivs = list(self.intervals)
        ivs[axis] = Interval(*interval)
        return Box(tuple(ivs))

    def drop(self, axis: int) -> Box:
        """Copy with 0-based ``axis`` omitted (a box one dimension down)."""
        return Box(self.intervals[:axis] + self.intervals[axis + 1:])

    def __str__(self) -> str:
        return "×".join(f"[{format_coord(iv.lo)},{format_coord(iv.hi)}]" for iv in self.intervals)


def _coerce(x) -> Coord:
    if isinstance(x, float):
        if math.isinf(x):
            return x
        raise UsageError("float coordinates are not accepted; use Fraction or a 'p/q' string")
    if isinstance(x, str):
        if x in ("-inf", "+inf", "inf"):
            return NEG_INF if x == "-inf" else POS_INF
        return parse_rational(x)
    return Fraction(x)


def _check_same_d(a: Box, b: Box) -> None:
    if a.d != b.d:
        raise UsageError(f"ambient dimension mismatch: {a.d} vs {b.d}")


def intersect_boxes(a: Box, b: Box) -> Box | None:
    """Componentwise intersection, or None if it is empty."""
    _check_same_d(a, b)
    out = []
    for x, y in zip(a.intervals, b.intervals):
        lo = x.lo if x.lo >= y.lo else y.lo
        hi = x.hi if x.hi <= y.hi else y.hi
        if lo > hi:
            return None
        out.append(Interval(lo, hi))
    return Box(tuple(out))


def intersection_dimension(a: Box, b: Box) -> int | None:
    """Dimension of ``a ∩ b`` (None if empty), without building the box."""
    dim = 0
    for x, y in zip(a.intervals, b.intervals):
        lo = x.lo if x.lo >= y.lo else y.lo
        hi = x.hi if x.hi <= y.hi else y.hi
        if lo > hi:
            return None
        dim += lo < hi
    return dim


def intersects(a: Box, b: Box) -> bool:
    return all(x.lo <= y.hi and y.lo <= x.hi for x, y in zip(a.intervals, b.intervals))


def intersect_all(boxes: Iterable[Box]) -> Box | None:
    it = iter(boxes)
    acc = next(it)
    for b in it:
        acc = intersect_boxes(acc, b)
        if acc is None:
            return None
    return acc


def box_dimension(b: Box) -> int:
    return sum(1 for iv in b.intervals if iv.lo != iv.hi)


def touch_dimensions(a: Box, b: Box) -> frozenset[int]:
    """1-based dimensions i where ``a_i ∩ b_i`` is a single point.

    Raises PreconditionError if the boxes do not intersect.
    """
    _check_same_d(a, b)
    dims = []
    for i, (x, y) in enumerate(zip(a.intervals, b.intervals), start=1):
        lo = max(x.lo, y.lo)
        hi = min(x.hi, y.hi)
        if lo > hi:
            raise PreconditionError(f"boxes {a} and {b} do not intersect")
        if lo == hi:
            dims.append(i)
    return frozenset(dims)


@dataclass(frozen=True)
class Side:
    """The facet of box ``owner`` obtained by collapsing ``axis`` to one endpoint."""

    owner: int
    axis: int  # 1-based
    sign: str  # "-" or "+"
    region: Box

    @property
    def level(self) -> Coord:
        return self.region.intervals[self.axis - 1].lo


def sides_of(b: Box, owner: int = 0) -> list[Side]:
    """All ``2 * dim(b)`` sides, ordered by axis then sign (``-`` first)."""
    if box_dimension(b) == 0:
        raise PreconditionError("a 0-dimensional box has no sides")
    out = []
    for k, iv in enumerate(b.intervals):
        if iv.degenerate:
            continue
        out.append(Side(owner, k + 1, "-", b.replace(k, (iv.lo, iv.lo))))
        out.append(Side(owner, k + 1, "+", b.replace(k, (iv.hi, iv.hi))))
    return out


def corners_of(b: Box) -> list[tuple[Fraction, ...]]:
    """The ``2**dim(b)`` distinct corners in lexicographic order."""
    if not all(is_finite(iv.lo) and is_finite(iv.hi) for iv in b.intervals):
        raise PreconditionError("corners of an unbounded box")
    choices = [sorted({iv.lo, iv.hi}) for iv in b.intervals]
    return [tuple(p) for p in itertools.product(*choices)]
