from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest

from tiledim import fixture
from tiledim.tiling import ExtendedTiling

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def pinwheel():
    return fixture("pinwheel")


@pytest.fixture
def three_row():
    return fixture("three_row_coplanar")


# Independent oracles.  These deliberately avoid the library's predicates and
# work from the raw definitions on plain (lo, hi) tuples.


def raw_boxes(t, exterior=True):
    boxes = ExtendedTiling(t).boxes if exterior else t.boxes
    return [tuple((iv.lo, iv.hi) for iv in b.intervals) for b in boxes]


def fine_grid_depth(t, exterior=True):
    """Max coverage over a lattice finer than every endpoint, including points outside the cube."""
    boxes = raw_boxes(t, exterior)
    den = 1
    for b in raw_boxes(t, exterior=False):
        for lo, hi in b:
            den = den * Fraction(lo).denominator // math.gcd(den, Fraction(lo).denominator)
            den = den * Fraction(hi).denominator // math.gcd(den, Fraction(hi).denominator)
    step = Fraction(1, 2 * den)
    axis_vals = [step * k for k in range(-2 * den - 2, 2 * den + 3)]
    best = 0
    for p in itertools.product(axis_vals, repeat=t.d):
        c = sum(all(lo <= x <= hi for (lo, hi), x in zip(b, p)) for b in boxes)
        best = max(best, c)
    return best


def pair_dims_oracle(t):
    """Dimension of every intersecting pair of T ∪ T_ext, from the definition."""
    boxes = raw_boxes(t)
    out = {}
    for a, b in itertools.combinations(range(len(boxes)), 2):
        dims = []
        for (alo, ahi), (blo, bhi) in zip(boxes[a], boxes[b]):
            lo, hi = max(alo, blo), min(ahi, bhi)
            if lo > hi:
                break
            dims.append(lo < hi)
        else:
            out[(a, b)] = sum(dims)
    return out


def dominates(orders, face, u):
    return any(all(o.index(v) <= o.index(u) for v in face) for o in orders)


def literal_realizer_check(vertices, maximal_faces, orders):
    """Every face (all subsets of maximal faces) against every vertex."""
    for f in maximal_faces:
        for r in range(1, len(f) + 1):
            for sub in itertools.combinations(f, r):
                for u in vertices:
                    if not dominates(orders, sub, u):
                        return False
    return True


def complex_oracle(t):
    """Maximal sets of base boxes with a common point, by subset enumeration."""
    boxes = raw_boxes(t, exterior=False)
    n = len(boxes)
    faces = []
    for r in range(1, n + 1):
        for sub in itertools.combinations(range(n), r):
            if all(max(boxes[k][i][0] for k in sub) <= min(boxes[k][i][1] for k in sub) for i in range(t.d)):
                faces.append(frozenset(sub))
    return sorted(tuple(sorted(f)) for f in faces if not any(f < g for g in faces))


def brute_realizer_exists(vertices, maximal_faces, k):
    """Try every k-tuple of permutations (multiset, so order of orders is ignored)."""
    perms = list(itertools.permutations(vertices))
    for combo in itertools.combinations_with_replacement(perms, k):
        if literal_realizer_check(vertices, maximal_faces, combo):
            return True
    return False
