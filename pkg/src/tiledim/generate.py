"""Named fixtures and seeded random proper tilings."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import GenerationError, UsageError
from .geometry import Box, Interval
from .properness import check_pairwise
from .tiling import MINUS_ONE, ONE, Tiling, boxes_from_lists, validate

FIXTURES = ("single", "split", "grid2x2", "pinwheel", "three_row_coplanar", "fig1_left_like")

_H = Fraction(1, 2)
_T = Fraction(1, 3)


def fixture(name: str, d: int = 2) -> Tiling:
    """A named deterministic tiling.

    ``single`` and ``split`` take ``d``; the others have a fixed dimension.
    ``fig1_left_like`` is our own reconstruction of a 3D configuration where
    no point is in more than four boxes of T but two points are in five boxes
    once the exterior is counted.
    """
    if name == "single":
        return boxes_from_lists(d, [[(-1, 1)] * d])
    if name == "split":
        rest = [(-1, 1)] * (d - 1)
        return boxes_from_lists(d, [[(-1, 0)] + rest, [(0, 1)] + rest])
    if name == "grid2x2":
        return boxes_from_lists(2, [
            [(-1, 0), (-1, 0)],
            [(0, 1), (-1, 0)],
            [(-1, 0), (0, 1)],
            [(0, 1), (0, 1)],
        ])
    if name == "pinwheel":
        return boxes_from_lists(2, [
            [(-1, _H), (-1, -_H)],
            [(_H, 1), (-1, _H)],
            [(-_H, 1), (_H, 1)],
            [(-1, -_H), (-_H, 1)],
            [(-_H, _H), (-_H, _H)],
        ])
    if name == "three_row_coplanar":
        return boxes_from_lists(2, [
            [(-1, 0), (-1, -_T)],
            [(0, 1), (-1, -_T)],
            [(-1, 1), (-_T, _T)],
            [(-1, 0), (_T, 1)],
            [(0, 1), (_T, 1)],
        ])
    if name == "fig1_left_like":
        # four boxes around the segment y = z = 0, spanning x from -1 to 1
        return boxes_from_lists(3, [
            [(-1, 1), (-1, 0), (-1, 0)],
            [(-1, 1), (0, 1), (-1, 0)],
            [(-1, 1), (-1, 0), (0, 1)],
            [(-1, 1), (0, 1), (0, 1)],
        ])
    raise UsageError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")


@dataclass(frozen=True)
class GenSpec:
    d: int
    target_boxes: int
    seed: int
    max_retries: int = 20
    pinwheel_rate: float = 0.3

    def __post_init__(self):
        if self.d < 1:
            raise UsageError(f"d must be >= 1, got {self.d}")
        if self.target_boxes < 1:
            raise UsageError(f"target_boxes must be >= 1, got {self.target_boxes}")
        if self.max_retries < 1:
            raise UsageError("max_retries must be >= 1")


DENOM = 2 ** 16


def _fresh(rng: random.Random, lo: Fraction, hi: Fraction, used: set, count: int = 1) -> list[Fraction] | None:
    """``count`` sorted distinct unused values k/DENOM strictly inside (lo, hi)."""
    a = math.floor(lo * DENOM) + 1
    b = math.ceil(hi * DENOM) - 1
    if b - a + 1 < count:
        return None
    picked: set[Fraction] = set()
    for _ in range(50 * count):
        v = Fraction(rng.randint(a, b), DENOM)
        if v not in used:
            picked.add(v)
        if len(picked) == count:
            return sorted(picked)
    return None


def _split(box: Box, axis: int, x: Fraction) -> tuple[Box, Box]:
    lo, hi = box.intervals[axis]
    return box.replace(axis, (lo, x)), box.replace(axis, (x, hi))


def _pinwheel(box: Box, a: int, b: int, xs: list[Fraction], ys: list[Fraction], mirror: bool) -> list[Box]:
    """Five boxes tiling ``box`` in a pinwheel pattern on axes ``a`` and ``b``."""
    (xl, xh), (yl, yh) = box.intervals[a], box.intervals[b]
    x1, x2 = xs
    y1, y2 = ys
    if not mirror:
        rects = [((xl, x2), (yl, y1)), ((x2, xh), (yl, y2)), ((x1, xh), (y2, yh)),
                 ((xl, x1), (y1, yh)), ((x1, x2), (y1, y2))]
    else:
        rects = [((x1, xh), (yl, y1)), ((xl, x1), (yl, y2)), ((xl, x2), (y2, yh)),
                 ((x2, xh), (y1, yh)), ((x1, x2), (y1, y2))]
    out = []
    for ra, rb in rects:
        ivs = list(box.intervals)
        ivs[a] = Interval(*ra)
        ivs[b] = Interval(*rb)
        out.append(Box(tuple(ivs)))
    return out


def _grow(spec: GenSpec, rng: random.Random) -> Tiling:
    d = spec.d
    boxes = [Box(tuple(Interval(MINUS_ONE, ONE) for _ in range(d)))]
    used = [{MINUS_ONE, ONE} for _ in range(d)]
    stalls = 0
    while len(boxes) < spec.target_boxes and stalls < 100:
        weights = [float(b.volume()) for b in boxes]
        k = rng.choices(range(len(boxes)), weights=weights)[0]
        box = boxes[k]
        room = spec.target_boxes - len(boxes)
        if d >= 2 and room >= 4 and rng.random() < spec.pinwheel_rate:
            a, b = rng.sample(range(d), 2)
            xs = _fresh(rng, *box.intervals[a], used[a], 2)
            ys = _fresh(rng, *box.intervals[b], used[b], 2)
            if xs is None or ys is None:
                stalls += 1
                continue
            used[a].update(xs)
            used[b].update(ys)
            pieces = _pinwheel(box, a, b, xs, ys, rng.random() < 0.5)
        else:
            axis = rng.randrange(d)
            xs = _fresh(rng, *box.intervals[axis], used[axis])
            if xs is None:
                stalls += 1
                continue
            used[axis].add(xs[0])
            pieces = list(_split(box, axis, xs[0]))
        boxes[k] = pieces[0]
        boxes.extend(pieces[1:])
    return Tiling(d, tuple(boxes))


def random_proper(spec: GenSpec) -> Tiling:
    """A random proper d-tiling, deterministic in ``spec``.

    Built from guillotine splits and pinwheel insertions, every cut at a
    coordinate never used before on its axis.  Each candidate is checked with
    :func:`validate` and :func:`check_pairwise`; a failing candidate is
    discarded and regenerated from the same RNG stream.
    """
    rng = random.Random(spec.seed)
    for _ in range(spec.max_retries):
        t = _grow(spec, rng)
        if 2 * len(t) >= spec.target_boxes and validate(t).valid and check_pairwise(t).proper:
            return t
    raise GenerationError(f"no proper tiling after {spec.max_retries} attempts for {spec}")


def generate(d: int, boxes: int, seed: int, **kwargs) -> Tiling:
    return random_proper(GenSpec(d, boxes, seed, **kwargs))


def random_coarse(spec: GenSpec, grid: int = 4) -> Tiling:
    """A random guillotine tiling with cuts on the coarse lattice k/grid.

    Cut coordinates are reused freely, so crossings (and improper tilings)
    are common.  Always a valid tiling; used to exercise the negative side of
    the properness checks.
    """
    rng = random.Random(spec.seed)
    boxes = [Box(tuple(Interval(MINUS_ONE, ONE) for _ in range(spec.d)))]
    for _ in range(50 * spec.target_boxes):
        if len(boxes) >= spec.target_boxes:
            break
        k = rng.randrange(len(boxes))
        axis = rng.randrange(spec.d)
        lo, hi = boxes[k].intervals[axis]
        inside = [Fraction(j, grid) for j in range(-grid + 1, grid) if lo < Fraction(j, grid) < hi]
        if not inside:
            continue
        a, b = _split(boxes[k], axis, rng.choice(inside))
        boxes[k] = a
        boxes.append(b)
    return Tiling(spec.d, tuple(boxes))
