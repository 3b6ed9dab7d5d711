"""The dominance digraph, realizers of d+1 orders, and the induced simplicial complex."""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import IntegrityError, PreconditionError, UsageError
from .geometry import Box, touch_dimensions
from .properness import check_pairwise, intersection_adjacency
from .separations import in_general_position
from .tiling import MINUS_ONE, ExtendedTiling, Tiling, validate


@dataclass(frozen=True)
class Digraph:
    vertices: tuple[int, ...]
    arcs: frozenset[tuple[int, int]]

    def successors(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in self.vertices}
        for a, b in sorted(self.arcs):
            out[a].append(b)
        return out

    def to_dot(self) -> str:
        lines = ["digraph G {"]
        lines += [f"  {v};" for v in self.vertices]
        lines += [f"  {a} -> {b};" for a, b in sorted(self.arcs)]
        lines.append("}")
        return "\n".join(lines) + "\n"


def has_arc(a: Box, b: Box) -> bool:
    """Arc a -> b: some point of b is strictly below some point of a on every axis."""
    return all(y.lo < x.hi for x, y in zip(a.intervals, b.intervals))


def build_digraph(t: Tiling) -> Digraph:
    n = len(t)
    arcs = frozenset(
        (a, b) for a in range(n) for b in range(n) if a != b and has_arc(t.boxes[a], t.boxes[b])
    )
    return Digraph(tuple(range(n)), arcs)


def is_acyclic(g: Digraph) -> tuple[bool, list[int]]:
    """Topological order (smallest available vertex first), or a directed cycle.

    The cycle is returned closed, e.g. ``[a, b, a]``.
    """
    indeg = {v: 0 for v in g.vertices}
    succ = g.successors()
    for _, b in g.arcs:
        indeg[b] += 1
    heap = [v for v, k in indeg.items() if k == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) == len(g.vertices):
        return True, order
    # every leftover vertex has a leftover predecessor; walk back until we repeat
    left = {v for v in g.vertices if indeg[v] > 0}
    pred: dict[int, int] = {}
    for a, b in sorted(g.arcs):
        if a in left and b in left and b not in pred:
            pred[b] = a
    seen: dict[int, int] = {}
    walk = []
    v = min(left)
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = pred[v]
    cycle = walk[seen[v]:][::-1]
    # rotate so the cycle starts at its smallest vertex
    start = cycle.index(min(cycle))
    cycle = cycle[start:] + cycle[:start]
    return False, cycle + [cycle[0]]


@dataclass(frozen=True)
class CollapseResult:
    removed: int
    partner: int
    axis: int  # 1-based
    tiling: Tiling


def corner_box(t: Tiling) -> int:
    """Index of the box containing (-1, ..., -1)."""
    for k, b in enumerate(t.boxes):
        if all(iv.lo == MINUS_ONE for iv in b.intervals):
            return k
    raise PreconditionError("no box contains the corner (-1,...,-1)")


def collapse_corner(t: Tiling, check: bool = True) -> CollapseResult:
    """Remove the corner box X and grow its neighbours across it.

    Finds Y and an axis i with ``X_i^+ = Y_i^-`` and ``X_j^+ = Y_j^+`` for
    j != i, then stretches every box touching X in dimension i down to -1 on
    that axis.  The input must be proper and in general position; the result
    is re-validated and re-checked for properness.
    """
    if len(t) < 2:
        raise PreconditionError("collapse needs at least two boxes")
    if check:
        if not check_pairwise(t).proper:
            raise PreconditionError("collapse needs a proper tiling")
        if not in_general_position(t):
            raise PreconditionError("collapse needs a tiling in general position")
    d = t.d
    x = corner_box(t)
    X = t.boxes[x]
    found = None
    for y, Y in enumerate(t.boxes):
        if y == x:
            continue
        for i in range(d):
            if X.intervals[i].hi != Y.intervals[i].lo:
                continue
            if all(X.intervals[j].hi == Y.intervals[j].hi for j in range(d) if j != i):
                found = (y, i)
                break
        if found:
            break
    if found is None:
        raise PreconditionError("no partner box for the corner box; input is not proper or not in general position")
    y, i = found
    boxes, origin = [], []
    for k, B in enumerate(t.boxes):
        if k == x:
            continue
        iv = B.intervals[i]
        if _touches_in(X, B, i + 1):
            B = B.replace(i, (MINUS_ONE, iv.hi))
        boxes.append(B)
        origin.append(t.origin[k])
    out = Tiling(d, tuple(boxes), tuple(origin))
    if not validate(out).valid:
        raise IntegrityError("collapsed tiling is not a tiling")
    if not check_pairwise(out).proper:
        raise IntegrityError("collapsed tiling is not proper")
    return CollapseResult(x, y, i + 1, out)


def _touches_in(a: Box, b: Box, axis: int) -> bool:
    if not all(x.lo <= y.hi and y.lo <= x.hi for x, y in zip(a.intervals, b.intervals)):
        return False
    return axis in touch_dimensions(a, b)


@dataclass(frozen=True)
class Realizer:
    orders: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"orders": [list(o) for o in self.orders]}


def construct_realizer(t: Tiling, check: bool = True) -> Realizer:
    """d+1 linear orders realizing the complex of a proper tiling.

    The last order is a topological order of the dominance digraph.  Order i
    sorts boxes by their lower endpoint on axis i, breaking ties with the last
    order.
    """
    if check and not check_pairwise(t).proper:
        raise PreconditionError("realizer construction needs a proper tiling")
    ok, order = is_acyclic(build_digraph(t))
    if not ok:
        raise IntegrityError(f"dominance digraph has a cycle {order}")
    rank = {v: r for r, v in enumerate(order)}
    orders = [
        tuple(sorted(range(len(t)), key=lambda v, i=i: (t.boxes[v].intervals[i].lo, rank[v])))
        for i in range(t.d)
    ]
    orders.append(tuple(order))
    return Realizer(tuple(orders))


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[int, ...]
    maximal_faces: tuple[tuple[int, ...], ...]

    @classmethod
    def from_faces(cls, vertices: Iterable[int], faces: Iterable[Iterable[int]]) -> SimplicialComplex:
        """Normalise: sort everything and keep only inclusion-maximal faces.

        Vertices not covered by any face get a singleton face.
        """
        verts = tuple(sorted(set(vertices)))
        fs = {frozenset(f) for f in faces}
        for f in fs:
            if not f <= set(verts):
                raise UsageError(f"face {sorted(f)} uses unknown vertices")
        fs |= {frozenset({v}) for v in verts if not any(v in f for f in fs)}
        maximal = [f for f in fs if not any(f < g for g in fs)]
        return cls(verts, tuple(sorted(tuple(sorted(f)) for f in maximal)))

    def faces(self) -> Iterator[frozenset[int]]:
        """Every non-empty face, each exactly once."""
        seen: set[frozenset[int]] = set()
        for f in self.maximal_faces:
            for r in range(1, len(f) + 1):
                for sub in itertools.combinations(f, r):
                    s = frozenset(sub)
                    if s not in seen:
                        seen.add(s)
                        yield s

    @property
    def max_face_size(self) -> int:
        return max((len(f) for f in self.maximal_faces), default=0)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "maximal_faces": [list(f) for f in self.maximal_faces]}


def maximal_cliques(adj: Sequence[int]) -> list[tuple[int, ...]]:
    """Bron-Kerbosch with pivoting over bitmask adjacency."""
    out: list[tuple[int, ...]] = []

    def expand(r: tuple[int, ...], p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot_pool = p | x
        pivot = max(_iter_bits(pivot_pool), key=lambda u: (adj[u] & p).bit_count())
        for v in _iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r + (v,), p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand((), (1 << len(adj)) - 1, 0)
    return sorted(out)


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_complex(t: Tiling, include_exterior: bool = False) -> SimplicialComplex:
    """Faces are the sets of boxes with a common point.

    Boxes are Helly, so these are exactly the cliques of the intersection
    graph.  ``include_exterior`` adds T_ext as vertices ``n..n+2d-1``; that is
    for export only.
    """
    boxes = ExtendedTiling(t).boxes if include_exterior else t.boxes
    adj = intersection_adjacency(boxes)
    return SimplicialComplex(tuple(range(len(boxes))), tuple(maximal_cliques(adj)))


def _check_vertices(c: SimplicialComplex, r: Realizer) -> None:
    want = sorted(c.vertices)
    for k, o in enumerate(r.orders):
        if sorted(o) != want or len(set(o)) != len(o):
            raise UsageError(f"order {k + 1} is not a permutation of the complex's vertices")


def verify_realizer(
    c: SimplicialComplex, r: Realizer, literal: bool = False
) -> tuple[bool, tuple[tuple[int, ...], int] | None]:
    """Check that every face is dominated by every vertex in some order.

    By default only maximal faces are tested, which is equivalent: a vertex
    dominating a face in some order dominates all its subfaces there.
    ``literal=True`` walks every face instead.  Returns ``(ok, (face, u))``
    with the first failing pair.
    """
    if not r.orders:
        raise UsageError("a realizer needs at least one order")
    _check_vertices(c, r)
    pos = [{v: k for k, v in enumerate(o)} for o in r.orders]
    if literal:
        faces = sorted((tuple(sorted(f)) for f in c.faces()), key=lambda f: (len(f), f))
    else:
        faces = list(c.maximal_faces)
    for f in faces:
        tops = [max(p[v] for v in f) for p in pos]
        for u in c.vertices:
            if not any(top <= p[u] for top, p in zip(tops, pos)):
                return False, (f, u)
    return True, None


def find_realizer(c: SimplicialComplex, k: int) -> Realizer | None:
    """Exhaustive search for a realizer with exactly ``k`` orders.

    Each permutation is reduced to the bitmask of (face, vertex) requirements
    it satisfies; dominated masks are dropped.  The search then always
    branches on the first unmet requirement, and gives up on a branch once the
    remaining orders cannot cover what is left even in the best case.
    """
    verts = c.vertices
    reqs = [(f, u) for f in c.maximal_faces for u in verts]
    full = (1 << len(reqs)) - 1
    best_perm: dict[int, tuple[int, ...]] = {}
    for perm in itertools.permutations(verts):
        pos = {v: i for i, v in enumerate(perm)}
        mask = 0
        for bit, (f, u) in enumerate(reqs):
            if max(pos[v] for v in f) <= pos[u]:
                mask |= 1 << bit
        best_perm.setdefault(mask, perm)
    masks = sorted(best_perm, key=lambda m: (-m.bit_count(), best_perm[m]))
    kept: list[int] = []
    for m in masks:
        if not any(m | q == q for q in kept):
            kept.append(m)
    kept.sort(key=lambda m: best_perm[m])
    widest = max(m.bit_count() for m in kept)

    def search(covered: int, left: int, chosen: list[int]) -> list[int] | None:
        if covered == full:
            return chosen
        missing = (full & ~covered).bit_count()
        if left == 0 or left * widest < missing:
            return None
        need = (full & ~covered) & -(full & ~covered)
        for m in kept:
            if m & need:
                got = search(covered | m, left - 1, chosen + [m])
                if got is not None:
                    return got
        return None

    found = search(0, k, [])
    if found is None:
        return None
    orders = [best_perm[m] for m in found]
    while len(orders) < k:
        orders.append(orders[-1])
    return Realizer(tuple(orders))


def dm_dimension(
    c: SimplicialComplex, kmax: int, max_vertices: int = 7, force: bool = False
) -> int | None:
    """Smallest k <= kmax admitting a realizer, or None if there is none.

    The search starts at the size of the largest face, which is a lower
    bound: each member of that face must be on top of it in some order.
    """
    if not c.vertices:
        raise UsageError("empty complex")
    if len(c.vertices) > max_vertices and not force:
        raise UsageError(
            f"{len(c.vertices)} vertices exceeds the brute-force limit of {max_vertices}; pass force to override"
        )
    for k in range(max(1, c.max_face_size), kmax + 1):
        if find_realizer(c, k) is not None:
            return k
    return None
