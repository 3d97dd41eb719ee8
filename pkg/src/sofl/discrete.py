"""Budgeted placement at candidate sites in convex position, fixed radius.

Chosen sites of any solution lie in convex position (they are a subset of a
convex ring), so their adjacency structure is an outerplanar triangulation
that can be grown by a chord recursion: fix three chosen sites as the
starting triangle, then repeatedly attach a next site inside a contiguous
arc of the remaining ring, splitting both the arc and the leftover disk
budget between the two new chords. A site is admitted only while it keeps
distance 2*lam from the three anchors of its triangle, which mirrors how a
new triangle is attached to an existing triangulation. That guard does not
literally imply pairwise feasibility of the whole selection, so the final
set is re-validated and the solver falls back to plain subset enumeration
in the (never yet observed) case the guard proves too weak.

Budgets of one or two disks are handled by direct enumeration; the chord
recursion needs three anchors to start from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .candidates import MERGE_EPS, candidate_radii_discrete
from .geom import (
    DEFAULT_TOL,
    Disk,
    TolerancePolicy,
    centers_compatible,
    disk_weight,
    dist2,
)
from .placement import Placement, empty_placement, site_placement

__all__ = [
    "ConvexPositionError",
    "SiteRing",
    "GammaKey",
    "canonical_ring",
    "site_weights",
    "zeta",
    "solve_discrete_fixed_radius",
    "solve_discrete",
]


class ConvexPositionError(ValueError):
    """Candidate sites are not in strictly convex position."""


@dataclass(frozen=True)
class SiteRing:
    """Candidate sites in strictly convex position, ordered clockwise."""

    sites: tuple[tuple[float, float], ...]

    def __len__(self) -> int:
        return len(self.sites)


@dataclass(frozen=True)
class GammaKey:
    """Memo key for the chord recursion: chord ends a and b, the apex of the
    triangle across the chord, the contiguous arc of open sites, and the
    remaining disk budget."""

    a: int
    b: int
    apex: int
    arc: tuple[int, ...]
    budget: int


def _cross(o, p, q) -> float:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def canonical_ring(sites) -> SiteRing:
    """Clockwise strictly convex ring starting at the lexicographic minimum.

    Raises ConvexPositionError for duplicates, collinear triples, or any
    point not on the hull.
    """
    pts = [(float(x), float(y)) for x, y in sites]
    if len(set(pts)) != len(pts):
        raise ConvexPositionError("duplicate candidate sites")
    if len(pts) <= 2:
        return SiteRing(tuple(sorted(pts)))
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    pts.sort(key=lambda p: (-math.atan2(p[1] - cy, p[0] - cx), p))
    start = pts.index(min(pts))
    ring = pts[start:] + pts[:start]
    s = len(ring)
    for i in range(s):
        if _cross(ring[i], ring[(i + 1) % s], ring[(i + 2) % s]) >= 0:
            raise ConvexPositionError("sites must be in strictly convex position")
    return SiteRing(tuple(ring))


def site_weights(sites, points, lam: float, tol: TolerancePolicy = DEFAULT_TOL):
    return [disk_weight(Disk(sx, sy, lam), points, tol) for sx, sy in sites]


def zeta(candidate_xy, anchors_xy) -> float:
    """Minimum distance from a candidate site to the three anchor sites."""
    cx, cy = candidate_xy
    return math.sqrt(min(dist2(cx, cy, ax, ay) for ax, ay in anchors_xy))


def _arc_between(s: int, after: int, before: int) -> tuple[int, ...]:
    """Ring indices strictly between `after` and `before`, clockwise."""
    out = []
    i = (after + 1) % s
    while i != before:
        out.append(i)
        i = (i + 1) % s
    return tuple(out)


class _ChordSolver:
    def __init__(self, sites, w, lam, tol):
        self.sites = sites
        self.w = w
        self.lam = lam
        self.tol = tol
        self.memo: dict[GammaKey, float] = {}
        self.choice: dict[GammaKey, tuple[int, int] | None] = {}

    def admissible(self, cand: int, anchors) -> bool:
        c = self.sites[cand]
        return all(
            centers_compatible(c, self.sites[a], self.lam, self.tol) for a in anchors
        )

    def gamma(self, a: int, b: int, apex: int, arc: tuple[int, ...], budget: int) -> float:
        if budget == 0 or not arc:
            return 0.0
        key = GammaKey(a, b, apex, arc, budget)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        best = 0.0  # placing nothing more is always allowed
        pick = None
        for m, cand in enumerate(arc):
            if not self.admissible(cand, (a, b, apex)):
                continue
            left = arc[:m]  # between b and cand
            right = arc[m + 1 :]  # between cand and a
            for kp in range(budget):
                val = (
                    self.w[cand]
                    + self.gamma(a, cand, b, right, kp)
                    + self.gamma(cand, b, a, left, budget - 1 - kp)
                )
                if val > best:
                    best = val
                    pick = (cand, kp)
        self.memo[key] = best
        self.choice[key] = pick
        return best

    def collect(self, a: int, b: int, apex: int, arc: tuple[int, ...], budget: int, out: list[int]):
        if budget == 0 or not arc:
            return
        pick = self.choice.get(GammaKey(a, b, apex, arc, budget))
        if pick is None:
            return
        cand, kp = pick
        m = arc.index(cand)
        out.append(cand)
        self.collect(a, cand, b, arc[m + 1 :], kp, out)
        self.collect(cand, b, a, arc[:m], budget - 1 - kp, out)


def _enumerate_best(sites, w, lam, k, tol, max_subsets=200_000):
    """Canonical best over all feasible subsets of at most k sites."""
    s = len(sites)
    total = sum(math.comb(s, j) for j in range(min(k, s) + 1))
    if total > max_subsets:
        raise RuntimeError(f"enumeration fallback too large ({total} subsets)")
    best_ids: tuple[int, ...] = ()
    best_key = (0.0, 0, ())  # the empty selection
    for size in range(1, min(k, s) + 1):
        for combo in combinations(range(s), size):
            ok = all(
                centers_compatible(sites[a], sites[b], lam, tol)
                for a, b in combinations(combo, 2)
            )
            if not ok:
                continue
            weight = sum(w[i] for i in combo)
            keys = tuple(sorted((sites[i] for i in combo), reverse=True))
            key = (-weight, len(combo), keys)
            if key < best_key:
                best_key = key
                best_ids = combo
    return best_ids, -best_key[0]


def solve_discrete_fixed_radius(sites, points, lam: float, k: int, tol: TolerancePolicy = DEFAULT_TOL) -> Placement:
    """Best placement of at most k radius-lam disks at the given ring sites."""
    ring = sites.sites if isinstance(sites, SiteRing) else tuple(sites)
    if k < 1:
        raise ValueError("k must be at least 1")
    if lam <= 0.0:
        return empty_placement(max(lam, 0.0))
    s = len(ring)
    w = site_weights(ring, points, lam, tol)

    best_ids, best_weight = _enumerate_best(ring, w, lam, min(k, 2), tol)

    if k >= 3 and s >= 3:
        dp = _ChordSolver(ring, w, lam, tol)
        for a in range(s):
            for b in range(s):
                if a == b:
                    continue
                mid = _arc_between(s, a, b)
                outer = _arc_between(s, b, a)
                for apex in mid:
                    if not (
                        centers_compatible(ring[a], ring[b], lam, tol)
                        and dp.admissible(apex, (a, b))
                    ):
                        continue
                    val = w[a] + w[apex] + w[b] + dp.gamma(a, b, apex, outer, k - 3)
                    if val < best_weight:
                        continue
                    ids = [a, apex, b]
                    dp.collect(a, b, apex, outer, k - 3, ids)
                    keys = tuple(sorted((ring[i] for i in ids), reverse=True))
                    key = (-val, len(ids), keys)
                    cur = (
                        -best_weight,
                        len(best_ids),
                        tuple(sorted((ring[i] for i in best_ids), reverse=True)),
                    )
                    if key < cur:
                        best_weight = val
                        best_ids = tuple(sorted(ids))

    chosen = tuple(sorted(best_ids))
    feasible = all(
        centers_compatible(ring[a], ring[b], lam, tol)
        for a, b in combinations(chosen, 2)
    )
    if not feasible:
        # The three-anchor guard missed a far pair; recover exactly.
        chosen, _ = _enumerate_best(ring, w, lam, k, tol)
        chosen = tuple(sorted(chosen))
    return site_placement(points, ring, lam, chosen, tol)


def solve_discrete(sites, points, k: int, tol: TolerancePolicy = DEFAULT_TOL) -> Placement:
    """Candidate-radius loop over the discrete site ring."""
    ring = sites if isinstance(sites, SiteRing) else canonical_ring(sites)
    if k < 1:
        raise ValueError("k must be at least 1")
    if k >= len(ring):
        raise ValueError("k must be smaller than the number of sites")
    values = sorted({c.value for c in candidate_radii_discrete(points, ring.sites, tol)})
    merged = []
    for v in values:
        if merged and v - merged[-1] <= MERGE_EPS:
            continue
        merged.append(v)
    best = None
    for v in merged:
        pl = solve_discrete_fixed_radius(ring, points, v, k, tol)
        if best is None or pl.total_weight > best.total_weight:
            best = pl
    return best
