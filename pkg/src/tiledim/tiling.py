"""Tilings of [-1,+1]^d, the exterior boxes, validation, slicing and cutting."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError, UsageError
from .geometry import NEG_INF, POS_INF, Box, Coord, Interval, box_dimension, format_coord, intersect_boxes

ONE = Fraction(1)
MINUS_ONE = Fraction(-1)


@dataclass(frozen=True)
class Tiling:
    """A list of d-boxes claimed to tile [-1,+1]^d.

    Box identifiers are positions in ``boxes``.  ``origin[k]`` is the
    identifier of box ``k`` in the tiling this one was derived from (through
    any chain of slice/cut/collapse), so results can be traced back to input.
    Construction does not validate coverage; call :func:`validate`.
    """

    d: int
    boxes: tuple[Box, ...]
    origin: tuple[int, ...] = field(default=None, compare=False)

    def __post_init__(self):
        if self.d < 1:
            raise UsageError(f"dimension must be >= 1, got {self.d}")
        boxes = tuple(self.boxes)
        for k, b in enumerate(boxes):
            if b.d != self.d:
                raise UsageError(f"box {k} has {b.d} intervals, expected {self.d}")
        object.__setattr__(self, "boxes", boxes)
        origin = tuple(range(len(boxes))) if self.origin is None else tuple(self.origin)
        if len(origin) != len(boxes):
            raise UsageError("origin mapping length does not match box count")
        object.__setattr__(self, "origin", origin)

    def __len__(self) -> int:
        return len(self.boxes)

    def __iter__(self):
        return iter(self.boxes)

    def __getitem__(self, k: int) -> Box:
        return self.boxes[k]


def make_exterior(d: int) -> list[Box]:
    """The 2d unbounded boxes tiling R^d minus [-1,+1]^d.

    Order is T(1,-), T(1,+), ..., T(d,-), T(d,+).
    """
    if d < 1:
        raise UsageError(f"dimension must be >= 1, got {d}")
    out = []
    for i in range(d):
        for sign in "-+":
            ivs = []
            for j in range(d):
                if j < i:
                    ivs.append(Interval(MINUS_ONE, ONE))
                elif j == i:
                    ivs.append(Interval(NEG_INF, MINUS_ONE) if sign == "-" else Interval(ONE, POS_INF))
                else:
                    ivs.append(Interval(NEG_INF, POS_INF))
            out.append(Box(tuple(ivs)))
    return out


def exterior_label(d: int, k: int) -> str:
    """Label of the k-th exterior box (0-based within the exterior list)."""
    if not 0 <= k < 2 * d:
        raise UsageError(f"exterior index {k} out of range for d={d}")
    return f"T({k // 2 + 1},{'-+'[k % 2]})"


class ExtendedTiling:
    """A tiling together with its exterior boxes.

    Indices ``0..n-1`` are the base boxes and ``n..n+2d-1`` the exterior
    boxes in :func:`make_exterior` order.
    """

    def __init__(self, base: Tiling):
        self.base = base
        self.d = base.d
        self.n = len(base)
        self.exterior = tuple(make_exterior(base.d))
        self.boxes: tuple[Box, ...] = base.boxes + self.exterior

    def __len__(self) -> int:
        return len(self.boxes)

    def is_exterior(self, k: int) -> bool:
        return k >= self.n

    def label(self, k: int) -> int | str:
        """JSON-friendly identifier: an int for base boxes, ``"T(i,±)"`` for exterior ones."""
        return k if k < self.n else exterior_label(self.d, k - self.n)


def extend(t: Tiling | ExtendedTiling) -> ExtendedTiling:
    return t if isinstance(t, ExtendedTiling) else ExtendedTiling(t)


@dataclass
class Violation:
    kind: str  # "dimension", "outside", "degenerate", "overlap", "coverage"
    boxes: tuple[int, ...]
    detail: str
    witness: Box | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind, "boxes": list(self.boxes), "detail": self.detail}
        if self.witness is not None:
            out["witness"] = [[format_coord(iv.lo), format_coord(iv.hi)] for iv in self.witness.intervals]
        return out


@dataclass
class ValidationReport:
    violations: list[Violation]
    volume: Fraction

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "volume": format_coord(self.volume),
            "violations": [v.to_json() for v in self.violations],
        }


def validate(t: Tiling) -> ValidationReport:
    """Check that ``t`` really tiles [-1,+1]^d.

    Coverage is certified exactly: boxes inside the cube, pairwise interior
    disjoint, with volumes summing to 2^d.  A coverage violation is only
    reported when there are no overlaps, since overlapping volume would mask
    the deficit anyway.
    """
    d = t.d
    violations: list[Violation] = []
    usable = []
    for k, b in enumerate(t.boxes):
        if not all(MINUS_ONE <= iv.lo and iv.hi <= ONE for iv in b.intervals):
            violations.append(Violation("outside", (k,), f"box {k} = {b} is not inside [-1,+1]^{d}"))
            continue
        if box_dimension(b) < d:
            violations.append(Violation("degenerate", (k,), f"box {k} = {b} has dimension {box_dimension(b)} < {d}"))
            continue
        usable.append(k)
    overlaps = 0
    for a, b in itertools.combinations(usable, 2):
        inter = intersect_boxes(t.boxes[a], t.boxes[b])
        if inter is not None and box_dimension(inter) == d:
            overlaps += 1
            violations.append(Violation("overlap", (a, b), f"boxes {a} and {b} overlap in {inter}", inter))
    volume = sum((t.boxes[k].volume() for k in usable), Fraction(0))
    full = Fraction(2) ** d
    if not overlaps and volume != full:
        violations.append(Violation("coverage", (), f"total volume {format_coord(volume)} != {full}"))
    return ValidationReport(violations, volume)


def _check_axis(d: int, axis: int) -> int:
    if not 1 <= axis <= d:
        raise UsageError(f"axis {axis} out of range 1..{d}")
    return axis - 1


def is_generic(t: Tiling, axis: int, x: Coord) -> bool:
    """True iff no box has ``x`` as an endpoint on (1-based) ``axis``."""
    k = _check_axis(t.d, axis)
    if x == POS_INF or x == NEG_INF:
        raise PreconditionError("generic hyperplanes are finite")
    return all(b.intervals[k].lo != x and b.intervals[k].hi != x for b in t.boxes)


def _require_generic(t: Tiling, axis: int, x: Coord) -> int:
    k = _check_axis(t.d, axis)
    if not is_generic(t, axis, x):
        raise PreconditionError(f"hyperplane x_{axis} = {format_coord(x)} is not generic for this tiling")
    return k


def slice_tiling(t: Tiling, axis: int, x: Coord) -> Tiling:
    """The (d-1)-tiling cut out by the hyperplane ``x_axis = x``."""
    if t.d < 2:
        raise PreconditionError("cannot slice a 1-tiling")
    k = _require_generic(t, axis, x)
    boxes, origin = [], []
    for b, o in zip(t.boxes, t.origin):
        if b.intervals[k].lo <= x <= b.intervals[k].hi:
            boxes.append(b.drop(k))
            origin.append(o)
    return Tiling(t.d - 1, tuple(boxes), tuple(origin))


def cut_tiling(t: Tiling, axis: int, x: Coord, sign: str) -> Tiling:
    """Keep the ``sign`` side of ``x_axis = x`` and stretch it back over [-1,+1]^d.

    Boxes on the discarded side vanish; boxes crossing the hyperplane are
    prolonged to the far boundary.
    """
    if sign not in ("-", "+"):
        raise UsageError(f"sign must be '-' or '+', got {sign!r}")
    k = _require_generic(t, axis, x)
    boxes, origin = [], []
    for b, o in zip(t.boxes, t.origin):
        lo, hi = b.intervals[k]
        if sign == "-":
            if x <= lo:
                continue
            new = b if hi < x else b.replace(k, (lo, ONE))
        else:
            if hi <= x:
                continue
            new = b if x < lo else b.replace(k, (MINUS_ONE, hi))
        boxes.append(new)
        origin.append(o)
    return Tiling(t.d, tuple(boxes), tuple(origin))


def coordinate_set(t: Tiling | ExtendedTiling) -> list[list[Coord]]:
    """Per-axis sorted distinct endpoints of all boxes of T ∪ T_ext."""
    ext = extend(t)
    out = []
    for k in range(ext.d):
        vals = set()
        for b in ext.boxes:
            vals.add(b.intervals[k].lo)
            vals.add(b.intervals[k].hi)
        out.append(sorted(vals))
    return out


def rank_boxes(boxes: Sequence[Box]) -> list[tuple[tuple[int, int], ...]]:
    """Boxes with each endpoint replaced by its rank on its axis.

    Ranks preserve order and equality, so comparisons on them are exact and
    much cheaper than on Fractions.
    """
    if not boxes:
        return []
    d = boxes[0].d
    ranks = []
    for k in range(d):
        vals = sorted({v for b in boxes for v in b.intervals[k]})
        ranks.append({v: r for r, v in enumerate(vals)})
    return [tuple((ranks[k][iv.lo], ranks[k][iv.hi]) for k, iv in enumerate(b.intervals)) for b in boxes]


def ranked_intersection_dimension(a, b) -> int | None:
    """:func:`intersection_dimension` on boxes from :func:`rank_boxes`."""
    dim = 0
    for (alo, ahi), (blo, bhi) in zip(a, b):
        lo = alo if alo >= blo else blo
        hi = ahi if ahi <= bhi else bhi
        if lo > hi:
            return None
        dim += lo < hi
    return dim


def endpoints(t: Tiling, axis: int) -> list[Fraction]:
    """Sorted distinct endpoints of the base boxes on 1-based ``axis``."""
    k = _check_axis(t.d, axis)
    return sorted({v for b in t.boxes for v in (b.intervals[k].lo, b.intervals[k].hi)})


def random_generic_value(t: Tiling, axis: int, rng) -> Fraction:
    """A uniformly chosen midpoint between two consecutive endpoints on ``axis``.

    Always generic and strictly inside (-1, +1).
    """
    vals = endpoints(t, axis)
    a = rng.randrange(len(vals) - 1)
    return (vals[a] + vals[a + 1]) / 2


def boxes_from_lists(d: int, boxes: Sequence[Sequence[tuple]]) -> Tiling:
    """Build a Tiling from nested ``(lo, hi)`` literals (ints, Fractions or strings)."""
    return Tiling(d, tuple(Box.of(*b) for b in boxes))
