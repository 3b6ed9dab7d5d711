"""Separations: maximal connected unions of coplanar sides, and general position."""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import IntegrityError, PreconditionError, UsageError
from .geometry import (
    Box,
    Coord,
    Interval,
    Side,
    format_coord,
    intersects,
    is_finite,
    sides_of,
    touch_dimensions,
)
from .properness import is_proper
from .tiling import ExtendedTiling, Tiling, endpoints, extend, rank_boxes, ranked_intersection_dimension


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller index as root so class order is stable
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass(frozen=True)
class Separation:
    """An equivalence class of sides, all lying in the hyperplane ``x_axis = level``."""

    axis: int  # 1-based
    level: Coord
    sides: tuple[Side, ...]
    box: Box | None  # the union as a single box, when it is one

    @property
    def pieces(self) -> tuple[Box, ...]:
        return tuple(s.region for s in self.sides)

    @property
    def owners(self) -> tuple[int, ...]:
        return tuple(sorted({s.owner for s in self.sides}))

    def sort_key(self):
        return (self.axis, self.level, min(s.owner for s in self.sides))

    def to_json(self, ext: ExtendedTiling | None = None) -> dict:
        label = ext.label if ext is not None else (lambda k: k)
        out = {
            "axis": self.axis,
            "level": format_coord(self.level),
            "sides": [{"box": label(s.owner), "sign": s.sign} for s in self.sides],
        }
        if self.box is not None:
            out["box"] = _box_json(self.box)
        else:
            out["pieces"] = [_box_json(p) for p in self.pieces]
        return out


def _box_json(b: Box) -> list[list[str]]:
    return [[format_coord(iv.lo), format_coord(iv.hi)] for iv in b.intervals]


def all_sides(t: Tiling | ExtendedTiling) -> list[Side]:
    """Sides of every box of T ∪ T_ext that lie in a finite hyperplane."""
    ext = extend(t)
    out = []
    for k, b in enumerate(ext.boxes):
        out.extend(s for s in sides_of(b, k) if is_finite(s.level))
    return out


def _side_classes(t: Tiling | ExtendedTiling) -> list[list[Side]]:
    ext = extend(t)
    d = ext.d
    sides = all_sides(ext)
    ranked = rank_boxes([s.region for s in sides])
    uf = _UnionFind(len(sides))
    buckets: dict[tuple, list[int]] = defaultdict(list)
    for idx, s in enumerate(sides):
        buckets[(s.axis, s.level)].append(idx)
    for members in buckets.values():
        for a, b in itertools.combinations(members, 2):
            if ranked_intersection_dimension(ranked[a], ranked[b]) == d - 1:
                uf.union(a, b)
    classes: dict[int, list[Side]] = defaultdict(list)
    for idx, s in enumerate(sides):
        classes[uf.find(idx)].append(s)
    return list(classes.values())


def compute_separations(t: Tiling | ExtendedTiling) -> list[Separation]:
    """Group the sides of T ∪ T_ext into separations.

    Two sides are linked when they meet in a (d-1)-dimensional box; that can
    only happen for sides in the same hyperplane, so linking is done within
    each (axis, level) bucket.  Sides at an infinite level (the far faces of
    exterior boxes) are left out.  Result is sorted by (axis, level, smallest
    owner).
    """
    seps = []
    for members in _side_classes(t):
        members.sort(key=lambda s: (s.owner, s.sign))
        first = members[0]
        sep = Separation(first.axis, first.level, tuple(members), None)
        ok, shape = separation_is_box(sep)
        seps.append(Separation(sep.axis, sep.level, sep.sides, shape if ok else None))
    seps.sort(key=Separation.sort_key)
    return seps


def _cell_probe(lo: Coord, hi: Coord) -> Fraction:
    if is_finite(lo) and is_finite(hi):
        return (lo + hi) / 2
    if is_finite(hi):
        return hi - 1
    if is_finite(lo):
        return lo + 1
    return Fraction(0)


def separation_is_box(s: Separation) -> tuple[bool, Box | tuple[Coord, ...]]:
    """Whether the union of the separation's sides is one box.

    Works inside the hyperplane: the per-axis endpoints of the pieces cut the
    bounding box into elementary cells, and the union is the bounding box iff
    every cell is inside some piece.  This stays exact with infinite extents.
    Returns ``(True, box)`` or ``(False, point)`` with a point of the bounding
    box that no piece covers.
    """
    if not s.sides:
        raise UsageError("empty separation")
    if s.sides[0].region.d == 1:
        # in a line every side is the same point
        return True, s.sides[0].region
    pieces = [p.drop(s.axis - 1) for p in s.pieces]
    m = pieces[0].d
    bbox = [
        Interval(min(p.intervals[k].lo for p in pieces), max(p.intervals[k].hi for p in pieces))
        for k in range(m)
    ]
    cuts = []
    for k in range(m):
        vals = sorted({v for p in pieces for v in (p.intervals[k].lo, p.intervals[k].hi)})
        cuts.append(list(zip(vals, vals[1:])))
    for cell in itertools.product(*cuts):
        covered = any(
            all(p.intervals[k].lo <= lo and hi <= p.intervals[k].hi for k, (lo, hi) in enumerate(cell))
            for p in pieces
        )
        if not covered:
            point = [_cell_probe(lo, hi) for lo, hi in cell]
            point.insert(s.axis - 1, s.level)
            return False, tuple(point)
    bbox.insert(s.axis - 1, Interval(s.level, s.level))
    return True, Box(tuple(bbox))


def coplanar_pairs(seps: Sequence[Separation]) -> list[tuple[Separation, Separation]]:
    """Pairs of distinct separations lying in the same hyperplane."""
    by_plane: dict[tuple, list[Separation]] = defaultdict(list)
    for s in seps:
        by_plane[(s.axis, s.level)].append(s)
    out = []
    for group in by_plane.values():
        out.extend(itertools.combinations(group, 2))
    out.sort(key=lambda pair: (pair[0].sort_key(), pair[1].sort_key()))
    return out


def in_general_position(t: Tiling | ExtendedTiling) -> bool:
    planes = [(c[0].axis, c[0].level) for c in _side_classes(t)]
    return len(planes) == len(set(planes))


def separations_intersect(a: Separation, b: Separation) -> bool:
    return any(intersects(p, q) for p in a.pieces for q in b.pieces)


def shift_separation(t: Tiling, sep: Separation, level: Fraction) -> Tiling:
    """Translate a separation to a new level along its axis.

    Every box with its upper side in ``sep`` gets that endpoint moved to
    ``level``, and likewise for lower sides.  The separation must consist of
    base boxes only; the boundary of [-1,+1]^d never moves.
    """
    k = sep.axis - 1
    boxes = list(t.boxes)
    for s in sep.sides:
        if s.owner >= len(boxes):
            raise PreconditionError("cannot move a separation that involves an exterior box")
        lo, hi = boxes[s.owner].intervals[k]
        lo, hi = (level, hi) if s.sign == "-" else (lo, level)
        if not lo < hi:
            raise PreconditionError(f"moving separation to {format_coord(level)} collapses box {s.owner}")
        boxes[s.owner] = boxes[s.owner].replace(k, (lo, hi))
    return Tiling(t.d, tuple(boxes), t.origin)


@dataclass(frozen=True)
class Move:
    axis: int
    level: Fraction
    epsilon: Fraction


@dataclass(frozen=True)
class PerturbationResult:
    tiling: Tiling
    correspondence: dict[int, int]
    moves: tuple[Move, ...]

    @property
    def epsilon(self) -> Fraction | None:
        """Smallest shift used, or None when the input was already in general position."""
        return min((m.epsilon for m in self.moves), default=None)

    def to_json(self) -> dict:
        from .jsonio import tiling_to_obj

        return {
            "tiling": tiling_to_obj(self.tiling),
            "correspondence": [[a, b] for a, b in sorted(self.correspondence.items())],
            "epsilon": None if self.epsilon is None else format_coord(self.epsilon),
            "moves": [
                {"axis": m.axis, "level": format_coord(m.level), "epsilon": format_coord(m.epsilon)}
                for m in self.moves
            ],
        }


def _min_gap(t: Tiling, axis: int) -> Fraction:
    vals = endpoints(t, axis)
    return min(b - a for a, b in zip(vals, vals[1:]))


def perturb_general_position(t: Tiling) -> PerturbationResult:
    """Move coplanar separations apart until no two share a hyperplane.

    Each round picks the first separation (by axis, level, smallest owner)
    that is coplanar with another one and translates it by a quarter of the
    smallest gap between distinct endpoints on its axis.  The new level is
    strictly between two old endpoint values, so it is coplanar with nothing.
    Boxes keep their positions, so the correspondence is the identity.
    """
    if not is_proper(t):
        raise PreconditionError("perturbation needs a proper tiling")
    cur = t
    seps = compute_separations(cur)
    limit = len(seps) ** 2
    moves: list[Move] = []
    while True:
        pairs = coplanar_pairs(seps)
        if not pairs:
            break
        if len(moves) >= limit:
            raise IntegrityError("perturbation did not reach general position")
        involved = {id(s) for pair in pairs for s in pair}
        target = next(s for s in seps if id(s) in involved)
        if any(s.owner >= len(cur) for s in target.sides):
            raise IntegrityError("boundary separation reported as coplanar")
        eps = _min_gap(cur, target.axis) / 4
        cur = shift_separation(cur, target, target.level + eps)
        moves.append(Move(target.axis, target.level, eps))
        seps = compute_separations(cur)
    return PerturbationResult(cur, {k: k for k in range(len(t))}, tuple(moves))


def touch_relation(t: Tiling | ExtendedTiling) -> dict[tuple[int, int], frozenset[int]]:
    """Touch dimensions of every intersecting pair of T ∪ T_ext."""
    ext = extend(t)
    out = {}
    for a, b in itertools.combinations(range(len(ext.boxes)), 2):
        if intersects(ext.boxes[a], ext.boxes[b]):
            out[(a, b)] = touch_dimensions(ext.boxes[a], ext.boxes[b])
    return out
