from fractions import Fraction as F

import pytest

from tiledim import check_families, check_pairwise, fixture, max_depth, touch_witness
from tiledim.geometry import Box
from tiledim.errors import IntegrityError, PreconditionError
from tiledim.generate import GenSpec, random_coarse, random_proper
from tiledim.properness import check, check_depth
from tiledim.tiling import ExtendedTiling, boxes_from_lists

from conftest import fine_grid_depth, pair_dims_oracle

H = F(1, 2)
FIXED = ["grid2x2", "pinwheel", "three_row_coplanar", "fig1_left_like", "single", "split"]


def test_depth_grid2x2():
    res = max_depth(fixture("grid2x2"))
    assert res.depth == 4
    assert res.point == (0, 0)
    assert res.boxes == (0, 1, 2, 3)


def test_depth_pinwheel(pinwheel):
    assert max_depth(pinwheel).depth == 3
    # every box around (1/2, -1/2)
    assert max_depth(pinwheel, within=Box.of((H, H), (-H, -H))).boxes == (0, 1, 4)


def test_depth_single():
    res = max_depth(fixture("single"))
    assert res.depth == 3
    assert res.point == (-1, -1)
    ext = ExtendedTiling(fixture("single"))
    assert [ext.label(k) for k in res.boxes] == [0, "T(1,-)", "T(2,-)"]


@pytest.mark.parametrize("name", FIXED)
def test_depth_matches_fine_grid(name):
    t = fixture(name)
    assert max_depth(t).depth == fine_grid_depth(t)


@pytest.mark.parametrize("seed", range(6))
def test_depth_matches_fine_grid_random(seed):
    t = random_coarse(GenSpec(2, 7, seed))
    assert max_depth(t).depth == fine_grid_depth(t)


def test_fig1_like_depths():
    t = fixture("fig1_left_like")
    assert fine_grid_depth(t, exterior=False) == 4
    res = max_depth(t)
    assert res.depth == 5
    assert res.point == (-1, 0, 0)


def test_pairwise_grid2x2():
    rep = check_pairwise(fixture("grid2x2"))
    assert not rep.proper
    assert rep.witness.boxes == (0, 3)
    assert rep.witness.dimension == 0


@pytest.mark.parametrize("name", ["pinwheel", "three_row_coplanar", "single", "split"])
def test_pairwise_proper_fixtures(name):
    assert check_pairwise(fixture(name)).proper


@pytest.mark.parametrize("name", FIXED)
def test_pairwise_matches_oracle(name):
    t = fixture(name)
    expected = all(dim == t.d - 1 for dim in pair_dims_oracle(t).values())
    assert check_pairwise(t).proper == expected


def test_families_pinwheel_triangle(pinwheel):
    assert check_families(pinwheel).proper


def test_families_grid2x2():
    rep = check_families(fixture("grid2x2"))
    assert not rep.proper
    assert rep.witness.boxes == (0, 1, 2, 3)
    assert rep.witness.dimension == 0


@pytest.mark.parametrize("name", FIXED)
def test_three_methods_agree(name):
    t = fixture(name)
    verdicts = {check(t, m).proper for m in ("depth", "pairwise", "families")}
    assert len(verdicts) == 1


def test_depth_witness_rechecks():
    t = fixture("grid2x2")
    w = check_depth(t).witness
    ext = ExtendedTiling(t)
    assert len(w.boxes) >= t.d + 2
    assert all(ext.boxes[k].contains_point(w.point) for k in w.boxes)


def test_touch_witness(pinwheel):
    assert touch_witness(pinwheel, 0, (H, F(-3, 4)), 1) == 1
    assert touch_witness(pinwheel, 4, (F(0), -H), 2) == 0
    single = fixture("single")
    k = touch_witness(single, 0, (F(-1), F(0)), 1)
    assert ExtendedTiling(single).label(k) == "T(1,-)"


def test_touch_witness_preconditions(pinwheel):
    with pytest.raises(PreconditionError):
        touch_witness(pinwheel, 0, (F(0), F(0)), 1)
    with pytest.raises(PreconditionError):
        touch_witness(pinwheel, 0, (F(0), F(-3, 4)), 1)


def test_touch_witness_on_non_tiling():
    # a lone box in the middle has nothing on its sides
    t = boxes_from_lists(2, [[(-H, H), (-H, H)]])
    with pytest.raises(IntegrityError):
        touch_witness(t, 0, (H, F(0)), 1)


@pytest.mark.parametrize("seed", range(5))
def test_touch_witness_random(seed):
    t = random_proper(GenSpec(3, 10, seed))
    ext = ExtendedTiling(t)
    for a, box in enumerate(t.boxes):
        for axis in (1, 2, 3):
            iv = box.intervals[axis - 1]
            p = [(j.lo + j.hi) / 2 for j in box.intervals]
            p[axis - 1] = iv.hi
            b = touch_witness(ext, a, tuple(p), axis)
            assert b != a
            assert ext.boxes[b].contains_point(p)
