from pathlib import Path

import pytest

from tiledim import FIXTURES, GenSpec, fixture, random_proper
from tiledim.errors import UsageError
from tiledim.generate import generate, random_coarse
from tiledim.jsonio import dumps_tiling, loads_tiling
from tiledim.properness import check_pairwise
from tiledim.render import render_svg
from tiledim.separations import compute_separations, coplanar_pairs, in_general_position
from tiledim.tiling import validate

GOLDEN = Path(__file__).parent / "golden"


def test_deterministic():
    assert random_proper(GenSpec(3, 15, 7)) == random_proper(GenSpec(3, 15, 7))
    assert random_proper(GenSpec(3, 15, 7)) != random_proper(GenSpec(3, 15, 8))


def test_golden_json():
    text = dumps_tiling(generate(2, 10, 1))
    assert text == (GOLDEN / "gen_d2_b10_s1.json").read_text()
    assert loads_tiling(text) == generate(2, 10, 1)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_generated_is_proper(d):
    for seed in range(5):
        t = random_proper(GenSpec(d, 10, seed))
        assert validate(t).valid
        assert check_pairwise(t).proper
        assert 5 <= len(t) <= 10


def test_d1_is_a_partition():
    t = random_proper(GenSpec(1, 6, 3))
    ivs = sorted(b.intervals[0] for b in t.boxes)
    assert ivs[0].lo == -1 and ivs[-1].hi == 1
    assert all(a.hi == b.lo for a, b in zip(ivs, ivs[1:]))


def test_genspec_rejects_bad_arguments():
    for args in ((0, 5, 1), (2, 0, 1)):
        with pytest.raises(UsageError):
            GenSpec(*args)
    with pytest.raises(UsageError):
        GenSpec(2, 5, 1, max_retries=0)


def test_fixture_properties(pinwheel, three_row):
    assert check_pairwise(pinwheel).proper and in_general_position(pinwheel)
    assert not check_pairwise(fixture("grid2x2")).proper
    assert len(coplanar_pairs(compute_separations(three_row))) == 1
    assert check_pairwise(three_row).proper
    for name in FIXTURES:
        assert validate(fixture(name)).valid
    with pytest.raises(UsageError):
        fixture("nope")


@pytest.mark.parametrize("seed", range(5))
def test_coarse_tilings_are_valid(seed):
    t = random_coarse(GenSpec(2, 8, seed))
    assert validate(t).valid


@pytest.mark.parametrize("name", ["single", "split", "grid2x2", "pinwheel", "three_row_coplanar"])
def test_svg_golden(name):
    assert render_svg(fixture(name)) == (GOLDEN / f"{name}.svg").read_text()


def test_svg_separations_golden(pinwheel):
    assert render_svg(pinwheel, separations=True) == (GOLDEN / "pinwheel_separations.svg").read_text()


def test_svg_rejects_3d():
    with pytest.raises(UsageError):
        render_svg(fixture("fig1_left_like"))
