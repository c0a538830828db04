import logging
from itertools import combinations

import pytest
from hypothesis import given

from toricample import catalog
from toricample.errors import FanError
from toricample.fan import build_fan, enumerate_walls, is_complete, is_smooth, transform
from strategies import unimodular


def test_p2_and_p1xp1_are_valid(p2, p1xp1):
    assert len(p2.max_cones) == 3 and len(p1xp1.max_cones) == 4


def test_overlapping_cones_rejected():
    with pytest.raises(FanError, match="not a fan"):
        build_fan(2, [(1, 0), (1, 1), (0, 1)], [(0, 1), (0, 2)])


def test_overlap_in_dim3_rejected():
    # cone{e1,e2,e3} and cone{e1,e2,e1+e2+e3}: second lies inside the first
    with pytest.raises(FanError, match="not a fan"):
        build_fan(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], [(0, 1, 2), (0, 1, 3)])


def test_crossing_cones_rejected():
    # cones meet in a proper 2-dimensional region that is not a common face
    with pytest.raises(FanError, match="not a fan"):
        build_fan(2, [(1, 0), (0, 1), (1, 1), (-1, 0)], [(0, 1), (2, 3)])


def test_bad_rays():
    with pytest.raises(FanError, match="invalid rays"):
        build_fan(2, [(0, 0), (0, 1)], [(0, 1)])
    with pytest.raises(FanError, match="invalid rays"):
        build_fan(2, [(1, 0), (2, 0), (0, 1)], [(0, 2)])
    with pytest.raises(FanError, match="not smooth"):
        build_fan(2, [(1, 0), (1, 2)], [(0, 1)])


def test_non_primitive_rays_are_normalized(caplog):
    with caplog.at_level(logging.WARNING):
        fan = build_fan(2, [(2, 0), (0, 1), (-3, -3)], [(0, 1), (1, 2), (2, 0)])
    assert fan == catalog.p2()
    assert "not primitive" in caplog.text


def test_is_smooth():
    assert is_smooth(catalog.p2()) == (True, None)
    singular = build_fan(2, [(1, 0), (1, 2)], [(0, 1)], check_smooth=False)
    assert is_smooth(singular) == (False, 0)
    assert is_smooth(build_fan(2, [(1, 0), (0, 1)], [(0, 1)])) == (True, None)


def test_is_complete(p2, f1):
    assert is_complete(p2)
    assert is_complete(f1)
    assert not is_complete(build_fan(2, [(1, 0), (0, 1)], [(0, 1)]))


def test_enumerate_walls_counts(p2, p1xp1, p3):
    assert len(enumerate_walls(p2)) == 3
    assert len(enumerate_walls(p1xp1)) == 4
    # brute force: 2-subsets of rays lying in some maximal cone
    brute = {s for cone in p3.max_cones for s in combinations(cone, 2)}
    assert len(enumerate_walls(p3)) == len(brute) == 6


def test_incomplete_walls_error():
    with pytest.raises(FanError, match="fan not complete"):
        enumerate_walls(build_fan(2, [(1, 0), (0, 1)], [(0, 1)]))


ALL = [catalog.p2(), catalog.p1xp1(), catalog.f1(), catalog.hirzebruch(3),
       *catalog.threefolds().values(), catalog.projective_space(4)]


@pytest.mark.parametrize("fan", ALL, ids=lambda f: f.name)
def test_wall_structure(fan):
    walls = fan.walls
    assert len({w.shared_rays for w in walls}) == len(walls)
    for w in walls:
        assert w.side_a != w.side_b
        assert set(w.shared_rays) | {w.opposite_a} == set(fan.max_cones[w.side_a])
        assert set(w.shared_rays) | {w.opposite_b} == set(fan.max_cones[w.side_b])
    facets = {f for cone in fan.max_cones for f in combinations(cone, fan.dim - 1)}
    assert facets == {w.shared_rays for w in walls}


@pytest.mark.parametrize("fan", ALL, ids=lambda f: f.name)
def test_build_is_idempotent(fan):
    again = build_fan(fan.dim, fan.rays, fan.max_cones, fan.name)
    assert again == fan and again.walls == fan.walls


def test_surfaces_have_as_many_cones_as_rays():
    for a in range(5):
        f = catalog.hirzebruch(a)
        assert len(f.max_cones) == len(f.rays) == len(f.walls)


@given(unimodular(2))
def test_transformed_fan_stays_valid(m):
    f = transform(catalog.f1(), m)
    assert is_complete(f) and is_smooth(f)[0]
