"""Properness of a tiling, checked three independent ways.

* ``max_depth``: the raw definition, at most d+1 boxes of T ∪ T_ext on any point.
* ``check_pairwise``: every intersecting pair meets in a (d-1)-dimensional box.
* ``check_families``: every pairwise-intersecting family of k boxes meets in
  dimension d+1-k.

The three agree on every tiling; the test suite leans on that.  Witnesses are
always the first violation in lexicographic order of box indices, where base
boxes come before the exterior ones (see :class:`ExtendedTiling`).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import IntegrityError, PreconditionError, UsageError
from .geometry import Box, Coord, box_dimension, format_coord, intersect_boxes, intersects, is_finite, touch_dimensions
from .tiling import ExtendedTiling, Tiling, coordinate_set, extend, rank_boxes, ranked_intersection_dimension


@dataclass(frozen=True)
class Witness:
    """Evidence that a tiling is not proper.

    kind is ``"depth"`` (a point in >= d+2 boxes), ``"pair"`` (two boxes
    meeting in dimension < d-1) or ``"family"`` (a pairwise-intersecting
    family whose intersection has the wrong dimension).
    """

    kind: str
    boxes: tuple[int, ...]
    point: tuple[Coord, ...] | None = None
    dimension: int | None = None

    def to_json(self, ext: ExtendedTiling) -> dict:
        out: dict = {"kind": self.kind, "boxes": [ext.label(k) for k in self.boxes]}
        if self.point is not None:
            out["point"] = [format_coord(x) for x in self.point]
        if self.dimension is not None:
            out["dimension"] = self.dimension
        return out


@dataclass(frozen=True)
class PropernessReport:
    method: str
    proper: bool
    witness: Witness | None = None

    def to_json(self, ext: ExtendedTiling) -> dict:
        out: dict = {"method": self.method, "proper": self.proper}
        if self.witness is not None:
            out["witness"] = self.witness.to_json(ext)
        return out


@dataclass(frozen=True)
class DepthResult:
    depth: int
    point: tuple[Coord, ...]
    boxes: tuple[int, ...]


def max_depth(t: Tiling | ExtendedTiling, within: Box | None = None) -> DepthResult:
    """Largest number of boxes of T ∪ T_ext sharing a point.

    Closed boxes reach their maximum coverage at a point whose coordinates are
    all box endpoints, so it is enough to scan the grid of finite endpoints.
    The scan walks axes in order keeping the running set of candidate boxes as
    a bitmask, and drops any prefix that cannot beat the best depth so far.
    The lexicographically smallest maximiser is returned.

    ``within`` restricts the search to points of a box whose endpoints are
    themselves box endpoints (e.g. the intersection of two boxes).
    """
    ext = extend(t)
    grid = [[v for v in axis_vals if is_finite(v)] for axis_vals in coordinate_set(ext)]
    if within is not None:
        grid = [[v for v in vals if iv.lo <= v <= iv.hi] for vals, iv in zip(grid, within.intervals)]
    masks = []
    for k, vals in enumerate(grid):
        row = []
        for v in vals:
            m = 0
            for idx, b in enumerate(ext.boxes):
                iv = b.intervals[k]
                if iv.lo <= v <= iv.hi:
                    m |= 1 << idx
            row.append(m)
        masks.append(row)

    best = [0, None, 0]  # depth, point indices, mask
    d = ext.d
    choice = [0] * d

    def walk(k: int, running: int) -> None:
        if k == d:
            c = running.bit_count()
            if c > best[0]:
                best[0], best[1], best[2] = c, tuple(choice), running
            return
        for j, m in enumerate(masks[k]):
            nxt = running & m
            if nxt.bit_count() <= best[0]:
                continue
            choice[k] = j
            walk(k + 1, nxt)

    walk(0, (1 << len(ext.boxes)) - 1)
    if best[1] is None:
        raise IntegrityError("no grid point is covered by any box" + (" in the given region" if within else ""))
    point = tuple(grid[k][j] for k, j in enumerate(best[1]))
    return DepthResult(best[0], point, _bits(best[2]))


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    idx = 0
    while mask:
        if mask & 1:
            out.append(idx)
        mask >>= 1
        idx += 1
    return tuple(out)


def check_depth(t: Tiling | ExtendedTiling) -> PropernessReport:
    ext = extend(t)
    res = max_depth(ext)
    if res.depth <= ext.d + 1:
        return PropernessReport("depth", True)
    return PropernessReport("depth", False, Witness("depth", res.boxes, point=res.point))


def check_pairwise(t: Tiling | ExtendedTiling) -> PropernessReport:
    """Proper iff every intersecting pair of T ∪ T_ext meets in dimension d-1."""
    ext = extend(t)
    d = ext.d
    boxes = rank_boxes(ext.boxes)
    for a, b in itertools.combinations(range(len(boxes)), 2):
        dim = ranked_intersection_dimension(boxes[a], boxes[b])
        if dim is not None and dim != d - 1:
            return PropernessReport("pairwise", False, Witness("pair", (a, b), dimension=dim))
    return PropernessReport("pairwise", True)


def intersection_adjacency(boxes: Sequence[Box]) -> list[int]:
    """Bitmask adjacency of the intersection graph (no self loops)."""
    adj = [0] * len(boxes)
    for a, b in itertools.combinations(range(len(boxes)), 2):
        if intersects(boxes[a], boxes[b]):
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return adj


def check_families(t: Tiling | ExtendedTiling) -> PropernessReport:
    """Proper iff every pairwise-intersecting family of size k has an intersection of dimension d+1-k.

    Families are enumerated depth-first in lexicographic order and capped at
    size d+2; a family that large is itself a witness.
    """
    ext = extend(t)
    d = ext.d
    boxes = ext.boxes
    adj = intersection_adjacency(boxes)

    def grow(members: tuple[int, ...], inter: Box, cand: int) -> Witness | None:
        k = len(members)
        dim = box_dimension(inter)
        if k == d + 2 or dim != d + 1 - k:
            return Witness("family", members, dimension=dim)
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            nxt = intersect_boxes(inter, boxes[u])
            if nxt is None:
                # boxes are Helly, so this means the adjacency lied
                raise IntegrityError(f"pairwise-intersecting family {members + (u,)} has empty intersection")
            w = grow(members + (u,), nxt, cand & adj[u])
            if w is not None:
                return w
        return None

    for v in range(len(boxes)):
        higher = adj[v] & ~((1 << (v + 1)) - 1)
        w = grow((v,), boxes[v], higher)
        if w is not None:
            return PropernessReport("families", False, w)
    return PropernessReport("families", True)


METHODS = {"depth": check_depth, "pairwise": check_pairwise, "families": check_families}


def check(t: Tiling | ExtendedTiling, method: str = "pairwise") -> PropernessReport:
    try:
        fn = METHODS[method]
    except KeyError:
        raise UsageError(f"unknown properness method {method!r}; choose from {sorted(METHODS)}") from None
    return fn(t)


def is_proper(t: Tiling | ExtendedTiling) -> bool:
    return check_pairwise(t).proper


def touch_witness(t: Tiling | ExtendedTiling, a: int, p: Sequence[Coord], axis: int) -> int:
    """A box B != A containing ``p`` that touches A only in ``axis`` (1-based).

    ``p`` must lie in A with ``p[axis]`` an endpoint of A's interval there.
    Found by exact search over the boxes containing ``p``; the smallest index
    wins.
    """
    ext = extend(t)
    if not 0 <= a < len(ext.boxes):
        raise UsageError(f"box index {a} out of range")
    if not 1 <= axis <= ext.d:
        raise UsageError(f"axis {axis} out of range 1..{ext.d}")
    if len(p) != ext.d:
        raise UsageError(f"point has {len(p)} coordinates, expected {ext.d}")
    A = ext.boxes[a]
    if not A.contains_point(p):
        raise PreconditionError("point is not in box A")
    iv = A.intervals[axis - 1]
    if p[axis - 1] not in (iv.lo, iv.hi):
        raise PreconditionError(f"point coordinate {axis} is not an endpoint of box A")
    target = frozenset({axis})
    for b, B in enumerate(ext.boxes):
        if b == a or not B.contains_point(p):
            continue
        if touch_dimensions(A, B) == target:
            return b
    raise IntegrityError(f"no box touches box {a} only in dimension {axis} at {p}; input is not a tiling")
