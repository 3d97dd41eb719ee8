import math
import random
from itertools import combinations

import pytest

from sofl.candidates import candidate_radii_line
from sofl.geom import DEFAULT_TOL, Disk, disk_weight
from sofl.klink import (
    build_center_sequence,
    build_dp_tables,
    edge_weight,
    influence_intervals,
    max_weight_k_links,
    predecessor_array,
    solve_fixed_radius,
    weight_array,
)
from conftest import B, R, random_instance


def brute_best_subsets(xs, w, lam, k):
    """All optimal (value, subset) pairs by raw enumeration."""
    need = 2.0 * lam - DEFAULT_TOL.x_slack(2.0 * lam)
    best = 0.0
    sets = [()]
    idx = range(len(xs))
    for size in range(1, k + 1):
        for combo in combinations(idx, size):
            if all(xs[b] - xs[a] >= need for a, b in zip(combo, combo[1:])):
                val = sum(w[i] for i in combo)
                if val > best:
                    best = val
                    sets = [combo]
                elif val == best:
                    sets.append(combo)
    return best, sets


def canonical(sets, xs):
    return min(sets, key=lambda c: (len(c), tuple(sorted((xs[i] for i in c), reverse=True))))


# --- influence intervals ---------------------------------------------------


def test_interval_basic():
    (iv,) = influence_intervals([B(0, 3, 1)], 0.0, 2.0)
    assert iv.l == pytest.approx(3 - math.sqrt(3))
    assert iv.r == pytest.approx(3 + math.sqrt(3))


def test_interval_tangent():
    (iv,) = influence_intervals([B(0, 3, 1)], 0.0, 1.0)
    assert (iv.l, iv.r) == (3.0, 3.0)


def test_interval_out_of_reach():
    assert influence_intervals([B(0, 3, 2)], 0.0, 1.0) == []


# --- center sequence -------------------------------------------------------


def test_sequence_k1():
    seq = build_center_sequence(influence_intervals([B(0, 1, 1)], 0.0, 1.0), 1.0, 1)
    assert seq.xs == pytest.approx((-1.0, 1.0, 3.0))  # interval [1,1] degenerate


def test_sequence_k1_interval():
    ivs = influence_intervals([B(0, 1, 1)], 0.0, math.sqrt(2))
    seq = build_center_sequence(ivs, 1.0, 1)
    assert seq.xs == pytest.approx((-2.0, 0.0, 2.0, 4.0))


def test_sequence_k2_shifts_merge():
    ivs = influence_intervals([B(0, 1, 1)], 0.0, math.sqrt(2))
    # interval is [0, 2]; with lam=1, k=2 the shifts interleave
    seq = build_center_sequence(ivs, 1.0, 2)
    assert seq.xs == pytest.approx((-4.0, -2.0, 0.0, 2.0, 4.0, 6.0))
    assert seq.source[0] == ("sentinel-s",)
    assert seq.source[-1] == ("sentinel-t",)


def test_sequence_empty_intervals():
    seq = build_center_sequence([], 1.0, 2)
    assert seq.xs == (0.0, 4.0)


def test_sequence_strictly_increasing():
    for seed in range(15):
        inst = random_instance(seed, 8, 3)
        for cand in candidate_radii_line(inst.points):
            if cand.value <= 0:
                continue
            ivs = influence_intervals(inst.points, 0.0, cand.value)
            seq = build_center_sequence(ivs, cand.value, 3)
            assert all(a < b for a, b in zip(seq.xs, seq.xs[1:]))


# --- weights and predecessors ----------------------------------------------


def test_weight_array_values():
    pts = [B(0, 1, 1, 5.0), R(1, 1.2, 0.4, -2.0)]
    ivs = influence_intervals(pts, 0.0, 1.0)
    seq = build_center_sequence(ivs, 1.0, 1)
    w = weight_array(seq, pts, 0.0, 1.0)
    assert w[0] == 0.0 and w[-1] == 0.0  # sentinels never cover
    i = seq.xs.index(1.0)
    assert w[i] == 3.0  # blue on boundary plus red strictly inside


def test_weight_array_bulk_matches_scalar():
    rng = random.Random(7)
    pts = []
    for i in range(40):  # above the numpy threshold
        if rng.random() < 0.5:
            pts.append(B(i, rng.randint(0, 30), rng.randint(1, 8), rng.randint(1, 9)))
        else:
            pts.append(R(i, rng.randint(0, 30), rng.randint(1, 8), -rng.randint(1, 9)))
    ivs = influence_intervals(pts, 0.0, 3.0)
    seq = build_center_sequence(ivs, 3.0, 2)
    bulk = weight_array(seq, pts, 0.0, 3.0)
    scalar = [disk_weight(Disk(x, 0.0, 3.0), pts) for x in seq.xs]
    assert bulk == scalar


def test_predecessor_examples():
    class Seq:
        pass

    s = Seq()
    s.xs = (0.0, 1.9, 4.0)
    assert predecessor_array(s, 1.0) == [None, None, 1]
    s.xs = (0.0, 2.0, 4.0)
    assert predecessor_array(s, 1.0) == [None, 0, 1]
    s.xs = (0.0,)
    assert predecessor_array(s, 1.0) == [None]


def test_predecessor_matches_definition():
    rng = random.Random(3)
    for _ in range(50):
        xs = sorted(rng.sample(range(100), rng.randint(1, 20)))
        xs = tuple(float(x) for x in xs)
        lam = rng.uniform(0.5, 5)

        class Seq:
            pass

        s = Seq()
        s.xs = xs
        p = predecessor_array(s, lam)
        need = 2 * lam - DEFAULT_TOL.x_slack(2 * lam)
        for i, x in enumerate(xs):
            want = [j for j in range(i) if x - xs[j] >= need]
            assert p[i] == (max(want) if want else None)


# --- the DP ----------------------------------------------------------------


def test_dp_example():
    xs = (0.0, 2.0, 4.0, 6.0, 8.0)
    w = [0.0, 5.0, -2.0, 7.0, 0.0]

    class Seq:
        pass

    s = Seq()
    s.xs = xs
    p = predecessor_array(s, 1.0)
    value, chosen = max_weight_k_links(w, p, 2)
    ref, _sets = brute_best_subsets(xs, w, 1.0, 2)
    assert ref == 12.0
    assert value == 12.0
    assert [w[i] for i in chosen] == [5.0, 7.0]


def test_dp_k1_is_max():
    w = [0.0, 5.0, -2.0, 7.0, 0.0]
    xs = (0.0, 2.0, 4.0, 6.0, 8.0)

    class Seq:
        pass

    s = Seq()
    s.xs = xs
    p = predecessor_array(s, 1.0)
    value, chosen = max_weight_k_links(w, p, 1)
    assert value == 7.0 and chosen == [3]


def test_dp_all_nonpositive():
    xs = (0.0, 2.0, 4.0)
    w = [-1.0, 0.0, -3.0]

    class Seq:
        pass

    s = Seq()
    s.xs = xs
    p = predecessor_array(s, 1.0)
    value, chosen = max_weight_k_links(w, p, 2)
    assert value == 0.0 and chosen == []


def test_dp_matches_enumeration_with_canonical_ties():
    rng = random.Random(11)
    for _ in range(200):
        m = rng.randint(2, 18)
        xs = tuple(sorted(rng.uniform(0, 20) for _ in range(m)))
        if any(b - a < 1e-6 for a, b in zip(xs, xs[1:])):
            continue
        w = [float(rng.randint(-5, 9)) for _ in range(m)]
        lam = rng.uniform(0.3, 4)
        k = rng.randint(1, 3)

        class Seq:
            pass

        s = Seq()
        s.xs = xs
        p = predecessor_array(s, lam)
        value, chosen = max_weight_k_links(w, p, k)
        ref, sets = brute_best_subsets(xs, w, lam, k)
        assert value == ref
        assert tuple(chosen) == canonical(sets, xs)


def test_phi_monotone_in_index():
    rng = random.Random(5)
    for _ in range(30):
        m = rng.randint(2, 12)
        xs = tuple(sorted(rng.uniform(0, 20) for _ in range(m)))
        w = [float(rng.randint(-5, 9)) for _ in range(m)]

        class Seq:
            pass

        s = Seq()
        s.xs = xs
        p = predecessor_array(s, 1.0)
        tables = build_dp_tables(w, p, 3)
        for j in range(4):
            col = [tables.phi[i][j][0] for i in range(m)]
            assert all(b >= a for a, b in zip(col, col[1:]))


# --- edge weights and the concave Monge inequality --------------------------


def test_edge_weight_rules():
    class Seq:
        pass

    s = Seq()
    s.xs = (0.0, 1.5, 10.0)
    w = [3.0, 4.0, 0.0]
    assert edge_weight(0, 1, s, w, 1.0) == math.inf
    s.xs = (0.0, 2.0, 10.0)
    assert edge_weight(0, 1, s, w, 1.0) == -7.0
    assert edge_weight(0, 2, s, w, 1.0) == -3.0


def test_concave_monge_on_random_instances():
    checked = 0
    for seed in range(100):
        inst = random_instance(seed, 6, 2)
        cands = candidate_radii_line(inst.points)
        cand = cands[seed % len(cands)]
        if cand.value <= 0:
            cand = cands[-1]
        lam = cand.value
        ivs = influence_intervals(inst.points, 0.0, lam)
        seq = build_center_sequence(ivs, lam, 2)
        w = weight_array(seq, inst.points, 0.0, lam)
        m = len(seq.xs)
        for i in range(m - 3):
            for j in range(i + 2, m - 1):
                lhs = edge_weight(i, j, seq, w, lam) + edge_weight(i + 1, j + 1, seq, w, lam)
                rhs = edge_weight(i, j + 1, seq, w, lam) + edge_weight(i + 1, j, seq, w, lam)
                assert lhs <= rhs
                checked += 1
    assert checked >= 10_000


# --- fixed-radius solves ----------------------------------------------------


def test_fixed_radius_single_blue():
    pl = solve_fixed_radius([B(0, 0, 1)], 0.0, 1.0, 1)
    assert pl.total_weight == 1.0
    assert [c.x for c in pl.centers] == [0.0]


def test_fixed_radius_red_blocks():
    pts = [R(0, 0, 0.5, -9.0), B(1, 0, 1, 1.0)]
    pl = solve_fixed_radius(pts, 0.0, 1.0, 1)
    assert pl.total_weight == 0.0
    assert pl.centers == ()


def test_fixed_radius_two_disks():
    pts = [B(0, -5, 1), B(1, 5, 1)]
    pl = solve_fixed_radius(pts, 0.0, 1.0, 2)
    assert pl.total_weight == 2.0
    assert sorted(c.x for c in pl.centers) == [-5.0, 5.0]


def test_fixed_radius_zero_lambda():
    pl = solve_fixed_radius([B(0, 0, 1)], 0.0, 0.0, 1)
    assert pl.total_weight == 0.0 and pl.centers == ()


def test_double_coverage_impossible():
    for seed in range(30):
        inst = random_instance(seed, 7, 3)
        for cand in candidate_radii_line(inst.points)[::3]:
            pl = solve_fixed_radius(inst.points, 0.0, cand.value, 3)
            disks = [Disk(c.x, 0.0, pl.radius) for c in pl.centers]
            from sofl.geom import is_covered

            for p in inst.points:
                assert sum(1 for d in disks if is_covered(p, d)) <= 1


def test_monotone_in_k():
    for seed in range(20):
        inst = random_instance(seed, 7, 1)
        for cand in candidate_radii_line(inst.points)[::4]:
            weights = [
                solve_fixed_radius(inst.points, 0.0, cand.value, k).total_weight
                for k in (1, 2, 3)
            ]
            assert weights == sorted(weights)


def test_endpoint_optimality_when_positive():
    # some optimal placement touches an interval endpoint whenever weight > 0
    for seed in range(40):
        inst = random_instance(seed, 6, 2)
        for cand in candidate_radii_line(inst.points)[::2]:
            lam = cand.value
            if lam <= 0:
                continue
            ivs = influence_intervals(inst.points, 0.0, lam)
            seq = build_center_sequence(ivs, lam, 2)
            w = weight_array(seq, inst.points, 0.0, lam)
            value, _ = max_weight_k_links(w, predecessor_array(seq, lam), 2)
            if value <= 0:
                continue
            _, sets = brute_best_subsets(seq.xs, w, lam, 2)
            endpoint_idx = {
                i for i, tag in enumerate(seq.source) if tag[0] == "endpoint"
            }
            assert any(any(i in endpoint_idx for i in s) for s in sets)
