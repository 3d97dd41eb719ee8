import math

import pytest

from sofl.candidates import (
    KIND_BLUE,
    KIND_BLUE_RED,
    KIND_POINT_SITE,
    KIND_ZERO,
    candidate_radii_discrete,
    candidate_radii_line,
    candidate_radii_tlines,
)
from sofl.geom import Disk, Region, classify
from conftest import B, R, random_instance


def values(cands):
    return [c.value for c in cands]


def test_two_blues():
    cands = candidate_radii_line([B(0, 0, 1), B(1, 2, 1)])
    assert values(cands) == pytest.approx([0.0, 1.0, math.sqrt(2)])


def test_all_red_only_zero():
    cands = candidate_radii_line([R(0, 0, 1), R(1, 5, 2)])
    assert values(cands) == [0.0]
    assert cands[0].kind == KIND_ZERO


def test_blue_red_pair():
    cands = candidate_radii_line([B(0, 0, 1), R(1, 1, 2)])
    assert values(cands) == pytest.approx([0.0, 1.0, math.sqrt(5)])
    assert [c.kind for c in cands] == [KIND_ZERO, KIND_BLUE, KIND_BLUE_RED]


def test_empty_input():
    assert values(candidate_radii_line([])) == [0.0]


def test_duplicate_radii_merged():
    cands = candidate_radii_line([B(0, 0, 1), B(1, 10, 1)])
    assert values(cands).count(1.0) == 1


def test_counting_bound():
    for seed in range(25):
        inst = random_instance(seed, 8, 1)
        nb = sum(1 for p in inst.points if p.is_blue)
        nr = len(inst.points) - nb
        cands = candidate_radii_line(inst.points)
        assert len(cands) <= 1 + nb + nb * (nb - 1) // 2 + nb * nr


def test_witness_property():
    for seed in range(20):
        inst = random_instance(seed, 7, 1)
        by_id = {p.id: p for p in inst.points}
        for c in candidate_radii_line(inst.points):
            if c.kind == KIND_ZERO:
                continue
            if c.kind == KIND_BLUE:
                p = by_id[c.ids[0]]
                d = Disk(p.x, 0.0, c.value)
                assert classify(p, d) is Region.ON_BOUNDARY
            else:
                p, q = (by_id[i] for i in c.ids)
                # the disk of this radius centered where the pair is equidistant
                # has both points on its boundary
                from sofl.geom import center_on_line_through

                cx, r = center_on_line_through(p, q, 0.0)
                assert r == c.value
                d = Disk(cx, 0.0, r)
                assert classify(p, d) is Region.ON_BOUNDARY
                assert classify(q, d) is Region.ON_BOUNDARY


def test_tlines_single_line_matches_line():
    pts = [B(0, 1, 2), R(1, 4, 1), B(2, 6, 3)]
    one = candidate_radii_line(pts, 0.0)
    t = candidate_radii_tlines(pts, [0.0])
    assert values(t) == values(one)
    assert [c.kind for c in t] == [c.kind for c in one]


def test_tlines_height_per_line():
    cands = candidate_radii_tlines([B(0, 0, 1)], [0.0, 2.0])
    assert values(cands) == pytest.approx([0.0, 1.0, 1.0])
    assert [c.line_index for c in cands] == [None, 0, 1]


def test_tlines_vertical_pair_no_center():
    cands = candidate_radii_tlines([B(0, 0, 3), R(1, 0, 1)], [0.0])
    assert values(cands) == pytest.approx([0.0, 3.0])


def test_tlines_point_on_line_merges_into_zero():
    cands = candidate_radii_tlines([B(0, 5, 0)], [0.0])
    assert values(cands) == [0.0]


def test_discrete_single():
    cands = candidate_radii_discrete([B(0, 0, 1)], [(0.0, 0.0)])
    assert values(cands) == [0.0, 1.0]
    assert cands[1].kind == KIND_POINT_SITE


def test_discrete_pairwise_distances():
    pts = [B(0, 0, 1), R(1, 3, 0)]
    sites = [(0.0, 0.0), (4.0, 0.0)]
    cands = candidate_radii_discrete(pts, sites)
    assert values(cands) == pytest.approx([0.0, 1.0, 3.0, math.sqrt(17)])


def test_discrete_empty_points():
    assert values(candidate_radii_discrete([], [(0.0, 0.0)])) == [0.0]


def test_sorted_and_unique():
    for seed in range(10):
        inst = random_instance(seed, 8, 1)
        vals = values(candidate_radii_line(inst.points))
        assert vals == sorted(vals)
        assert all(b - a > 1e-9 for a, b in zip(vals, vals[1:]))
