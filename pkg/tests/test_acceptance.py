"""Acceptance criteria, one test per criterion.

Each test records a ``[PASS]``/``[FAIL]`` line that is printed immediately and
again in the terminal summary.
"""
import random
import time
from pathlib import Path

import pytest

from tiledim import (
    FIXTURES,
    GenSpec,
    SimplicialComplex,
    build_complex,
    build_digraph,
    check_families,
    check_pairwise,
    collapse_corner,
    compute_separations,
    construct_realizer,
    coplanar_pairs,
    cut_tiling,
    dm_dimension,
    fixture,
    is_acyclic,
    max_depth,
    perturb_general_position,
    random_proper,
    separation_is_box,
    slice_tiling,
    validate,
)
from tiledim.generate import random_coarse
from tiledim.geometry import intersect_boxes, touch_dimensions
from tiledim.jsonio import dumps_tiling, loads_tiling
from tiledim.order import maximal_cliques, verify_realizer
from tiledim.properness import intersection_adjacency
from tiledim.render import render_svg
from tiledim.separations import in_general_position, separations_intersect, touch_relation
from tiledim.tiling import ExtendedTiling, random_generic_value

from conftest import ACCEPTANCE_LINES, brute_realizer_exists

GOLDEN = Path(__file__).parent / "golden"
SIZES = ((2, 200, 30), (3, 50, 20), (4, 20, 12))


def record(n, ok, text):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {text}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def suite():
    out = []
    for d, count, boxes in SIZES:
        out += [random_proper(GenSpec(d, boxes, 1000 * d + s)) for s in range(count)]
    return out


@pytest.fixture(scope="module")
def proper_fixtures():
    return [fixture(n) for n in FIXTURES if check_pairwise(fixture(n)).proper]


@pytest.fixture(scope="module")
def coplanar_suite():
    """Proper tilings on a coarse lattice that have coplanar separations."""
    out = []
    seed = 0
    while len(out) < 50:
        d = 2 + seed % 2
        t = random_coarse(GenSpec(d, 10, seed))
        seed += 1
        if check_pairwise(t).proper and coplanar_pairs(compute_separations(t)):
            out.append(t)
    return out


@pytest.fixture(scope="module")
def improper_suite():
    out = []
    for seed in range(200):
        t = random_coarse(GenSpec(2 + seed % 3, 10, seed))
        if not check_pairwise(t).proper:
            out.append(t)
    return out


def test_criterion_1_three_way_properness(suite, improper_suite):
    start = time.perf_counter()
    tilings = suite + [fixture(n) for n in FIXTURES] + improper_suite
    disagreements = 0
    for t in tilings:
        verdicts = (max_depth(t).depth <= t.d + 1, check_pairwise(t).proper, check_families(t).proper)
        disagreements += len(set(verdicts)) != 1
    elapsed = time.perf_counter() - start
    n_improper = sum(not check_pairwise(t).proper for t in tilings)
    record(1, disagreements == 0 and elapsed < 60,
           f"{len(tilings)} tilings ({n_improper} improper), {disagreements} disagreements, {elapsed:.1f}s")


def test_criterion_2_realizer(suite, proper_fixtures, coplanar_suite):
    failures = 0
    tilings = suite + proper_fixtures + coplanar_suite
    for t in tilings:
        r = construct_realizer(t)
        failures += len(r.orders) != t.d + 1 or not verify_realizer(build_complex(t), r)[0]
    record(2, failures == 0, f"{len(tilings)} realizers of d+1 orders verified, {failures} failures")


def test_criterion_3_dm_dimension():
    start = time.perf_counter()
    single = dm_dimension(SimplicialComplex.from_faces([0], []), 4)
    paths = [
        dm_dimension(SimplicialComplex.from_faces(range(n), [(k, k + 1) for k in range(n - 1)]), 4)
        for n in (2, 3, 4)
    ]
    c = build_complex(fixture("pinwheel"))
    pin = dm_dimension(c, 4)
    no_two = not brute_realizer_exists(c.vertices, c.maximal_faces, 2)
    elapsed = time.perf_counter() - start
    ok = single == 1 and paths == [2, 2, 2] and pin == 3 and no_two and elapsed < 30
    record(3, ok, f"single={single}, paths={paths}, pinwheel={pin}, brute force excludes 2: {no_two}, {elapsed:.1f}s")


def test_criterion_4_slice_cut():
    failures = checks = 0
    rng = random.Random(4)
    for s in range(50):
        d = 2 + s % 3
        t = random_proper(GenSpec(d, 12, 4000 + s))
        for _ in range(5):
            axis = rng.randint(1, d)
            x = random_generic_value(t, axis, rng)
            parts = [slice_tiling(t, axis, x)] + [cut_tiling(t, axis, x, sign) for sign in "-+"]
            checks += 1
            failures += not (parts[0].d == d - 1 and all(validate(p).valid and check_pairwise(p).proper for p in parts))
    record(4, failures == 0, f"{checks} hyperplanes on 50 tilings, {failures} failures")


def test_criterion_5_separation_shape(suite, proper_fixtures, coplanar_suite):
    bad_shape = bad_pairs = total = 0
    for t in suite + proper_fixtures + coplanar_suite:
        seps = compute_separations(t)
        total += len(seps)
        bad_shape += sum(not separation_is_box(s)[0] for s in seps)
        bad_pairs += sum(separations_intersect(a, b) for a, b in coplanar_pairs(seps))
    record(5, bad_shape == 0 and bad_pairs == 0,
           f"{total} separations, {bad_shape} not boxes, {bad_pairs} intersecting coplanar pairs")


def test_criterion_6_general_position(coplanar_suite):
    tilings = [fixture("three_row_coplanar")] + coplanar_suite
    failures = 0
    for t in tilings:
        res = perturb_general_position(t)
        u = res.tiling
        ok = (
            validate(u).valid
            and check_pairwise(u).proper
            and in_general_position(u)
            and touch_relation(u) == touch_relation(t)
            and build_complex(u) == build_complex(t)
        )
        failures += not ok
    record(6, failures == 0, f"{len(tilings)} tilings with coplanar separations perturbed, {failures} failures")


def _collapse_all(t):
    """Collapse down to one box; return the number of violated steps."""
    bad = 0
    while len(t) > 1:
        t = perturb_general_position(t).tiling
        g = build_digraph(t)
        if not is_acyclic(g)[0]:
            return bad + 1
        res = collapse_corner(t)
        x = res.removed
        # boxes after X shift down by one
        shift = {k: k - (k > x) for k in range(len(t)) if k != x}
        after = build_digraph(res.tiling).arcs
        kept = {(shift[a], shift[b]) for a, b in g.arcs if x not in (a, b)}
        bad += not kept <= after or any(a == x for a, _ in g.arcs)
        t = res.tiling
    return bad


def test_criterion_7_acyclic_collapse(suite, proper_fixtures, coplanar_suite):
    tilings = suite + proper_fixtures + coplanar_suite
    cyclic = sum(not is_acyclic(build_digraph(t))[0] for t in tilings)
    bad = sum(_collapse_all(t) for t in tilings)
    record(7, cyclic == 0 and bad == 0,
           f"{len(tilings)} tilings collapsed to one box, {cyclic} cyclic digraphs, {bad} bad steps")


def test_criterion_8_families(suite, proper_fixtures, coplanar_suite, improper_suite):
    too_big = 0
    tilings = suite + proper_fixtures + coplanar_suite
    for t in tilings:
        adj = intersection_adjacency(ExtendedTiling(t).boxes)
        too_big += max(len(c) for c in maximal_cliques(adj)) > t.d + 1
    pairs = missed = 0
    for t in improper_suite + [fixture("grid2x2")]:
        ext = ExtendedTiling(t)
        for a in range(len(ext.boxes)):
            for b in range(a + 1, len(ext.boxes)):
                inter = intersect_boxes(ext.boxes[a], ext.boxes[b])
                if inter is None or len(touch_dimensions(ext.boxes[a], ext.boxes[b])) < 2:
                    continue
                pairs += 1
                missed += max_depth(ext, within=inter).depth < t.d + 2
    record(8, too_big == 0 and missed == 0 and pairs > 0,
           f"{len(tilings)} proper tilings with no family of size d+2 ({too_big} bad); "
           f"{pairs} multi-touch pairs in improper tilings, {missed} without a deep point")


def test_criterion_9_io(suite):
    mismatches = 0
    for t in suite + [fixture(n) for n in FIXTURES]:
        text = dumps_tiling(t)
        mismatches += loads_tiling(text) != t or dumps_tiling(loads_tiling(text)) != text
    svgs = [n for n in FIXTURES if fixture(n).d == 2]
    svg_bad = [n for n in svgs if render_svg(fixture(n)) != (GOLDEN / f"{n}.svg").read_text()]
    svg_bad += [] if render_svg(fixture("pinwheel"), separations=True) == (
        GOLDEN / "pinwheel_separations.svg").read_text() else ["pinwheel+separations"]
    record(9, mismatches == 0 and not svg_bad,
           f"{len(suite) + len(FIXTURES)} JSON round trips ({mismatches} mismatches), "
           f"{len(svgs) + 1} SVG goldens ({len(svg_bad)} differ)")
