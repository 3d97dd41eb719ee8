"""Placement across several horizontal lines for a common radius.

Candidate centers per line are the influence-interval endpoints plus chains
of hops at center distance exactly 2*lam: along a line a hop moves 2*lam in
x, across two lines closer than 2*lam it moves the reduced offset
sqrt(4*lam^2 - dy^2). Selection is an exact depth-first search over the
x-sorted candidates with an optimistic bound, because non-overlap between
centers on different lines is a pairwise Euclidean constraint that a simple
left-to-right link cannot capture. The returned placement is re-validated
pairwise and its weight recomputed as union coverage.
"""

from __future__ import annotations

import math
from bisect import bisect_left, insort
from dataclasses import dataclass

from .candidates import MERGE_EPS, candidate_radii_tlines
from .geom import (
    DEFAULT_TOL,
    Disk,
    TolerancePolicy,
    centers_compatible,
    is_covered,
)
from .klink import influence_intervals
from .placement import LineCenter, Placement, empty_placement, line_placement

__all__ = [
    "LineSet",
    "MultiCenter",
    "ValidationFailureError",
    "multiline_centers",
    "solve_tlines_fixed_radius",
    "solve_tlines",
]

# A multi-line candidate is just a line-indexed center.
MultiCenter = LineCenter


class ValidationFailureError(RuntimeError):
    """The search returned a pairwise-infeasible selection (a bug)."""


@dataclass(frozen=True)
class LineSet:
    """Strictly increasing horizontal line heights."""

    ys: tuple[float, ...]

    def __post_init__(self):
        if not self.ys:
            raise ValueError("at least one line is required")
        if any(b <= a for a, b in zip(self.ys, self.ys[1:])):
            raise ValueError("lines must be strictly increasing")

    def __len__(self) -> int:
        return len(self.ys)


def _check_lines(lines) -> list[float]:
    if isinstance(lines, LineSet):
        return list(lines.ys)
    return list(LineSet(tuple(float(y) for y in lines)).ys)


def multiline_centers(points, lines, lam: float, k: int, tol: TolerancePolicy = DEFAULT_TOL):
    """Candidate centers across lines: endpoints, hop chains, sentinels."""
    lines = _check_lines(lines)
    if lam <= 0:
        raise ValueError("candidate centers require a positive radius")

    endpoints: list[tuple[float, int]] = []
    for li, ly in enumerate(lines):
        for iv in influence_intervals(points, ly, lam, tol):
            endpoints.append((iv.l, li))
            endpoints.append((iv.r, li))

    per_line: list[list[float]] = [[] for _ in lines]

    def add(x: float, li: int) -> bool:
        row = per_line[li]
        i = bisect_left(row, x)
        for j in (i - 1, i):
            if 0 <= j < len(row) and tol.close(row[j], x):
                return False
        insort(row, x)
        return True

    if not endpoints:
        for li in range(len(lines)):
            add(0.0, li)
            add(2.0 * k * lam, li)
    else:
        frontier = []
        for x, li in sorted(endpoints):
            if add(x, li):
                frontier.append((x, li))
        need2 = 4.0 * lam * lam
        band = tol.band(need2)
        for _ in range(k - 1):
            nxt = []
            for x, li in frontier:
                hops = [(x - 2.0 * lam, li), (x + 2.0 * lam, li)]
                for lj, ly in enumerate(lines):
                    if lj == li:
                        continue
                    dy2 = (ly - lines[li]) ** 2
                    if dy2 - need2 > band:
                        continue
                    off = math.sqrt(max(0.0, need2 - dy2))
                    hops.append((x - off, lj))
                    hops.append((x + off, lj))
                for hx, hl in hops:
                    if add(hx, hl):
                        nxt.append((hx, hl))
            frontier = nxt
        margin = 2.0 * k * lam
        lo = min(x for x, _ in endpoints) - margin
        hi = max(x for x, _ in endpoints) + margin
        for li in range(len(lines)):
            add(lo, li)
            add(hi, li)

    out = [MultiCenter(x, li) for li, row in enumerate(per_line) for x in row]
    out.sort(key=lambda c: (c.x, c.line_index))
    return out


def _search_best(points, lines, lam, k, centers, tol):
    """Exact DFS over candidates; returns the canonical best index tuple."""
    n = len(points)
    masks = []
    weights = []
    gains = []  # optimistic per-center gain: its covered positive weight
    for c in centers:
        d = Disk(c.x, lines[c.line_index], lam)
        m = 0
        w = 0.0
        gain = 0.0
        for i, p in enumerate(points):
            if is_covered(p, d, tol):
                m |= 1 << i
                w += p.weight
                if p.weight > 0:
                    gain += p.weight
        masks.append(m)
        weights.append(w)
        gains.append(gain)

    # Centers whose own disk nets nothing can never improve a union of
    # non-overlapping disks, and the fewest-centers tie rule drops them.
    order = [i for i in range(len(centers)) if weights[i] > 0]
    point_w = [p.weight for p in points]

    def union_weight(mask: int) -> float:
        total = 0.0
        i = 0
        while mask:
            if mask & 1:
                total += point_w[i]
            mask >>= 1
            i += 1
        return total

    best_key = None
    best_ids: tuple[int, ...] = ()

    def consider(chosen: list[int], mask: int):
        nonlocal best_key, best_ids
        w = union_weight(mask)
        keys = [centers[i].sort_key() for i in chosen]
        key = (-w, len(keys), tuple(sorted(keys, reverse=True)))
        if best_key is None or key < best_key:
            best_key = key
            best_ids = tuple(chosen)

    coords = [(centers[i].x, lines[centers[i].line_index]) for i in range(len(centers))]

    def rec(pos: int, chosen: list[int], mask: int, current: float):
        nonlocal best_key
        consider(chosen, mask)
        if len(chosen) == k or pos >= len(order):
            return
        budget = k - len(chosen)
        top = sorted((gains[i] for i in order[pos:]), reverse=True)[:budget]
        if best_key is not None and current + sum(top) < -best_key[0]:
            return
        for at in range(pos, len(order)):
            ci = order[at]
            if all(
                centers_compatible(coords[ci], coords[cj], lam, tol) for cj in chosen
            ):
                chosen.append(ci)
                rec(at + 1, chosen, mask | masks[ci], union_weight(mask | masks[ci]))
                chosen.pop()

    rec(0, [], 0, 0.0)
    return best_ids


def solve_tlines_fixed_radius(points, lines, lam: float, k: int, tol: TolerancePolicy = DEFAULT_TOL) -> Placement:
    """Best placement of at most k radius-lam disks centered on the lines."""
    lines = _check_lines(lines)
    if k < 1:
        raise ValueError("k must be at least 1")
    if lam <= 0.0:
        return empty_placement(max(lam, 0.0))
    centers = multiline_centers(points, lines, lam, k, tol)
    best_ids = _search_best(points, lines, lam, k, centers, tol)
    chosen = [centers[i] for i in best_ids]
    for i, a in enumerate(chosen):
        for b in chosen[i + 1 :]:
            pa = (a.x, lines[a.line_index])
            pb = (b.x, lines[b.line_index])
            if not centers_compatible(pa, pb, lam, tol):
                raise ValidationFailureError(f"overlapping selection {a} / {b}")
    chosen.sort(key=lambda c: (c.x, c.line_index))
    return line_placement(points, lines, lam, chosen, tol)


def solve_tlines(points, lines, k: int, tol: TolerancePolicy = DEFAULT_TOL) -> Placement:
    """Candidate-radius loop over all lines with the standard objective."""
    lines = _check_lines(lines)
    values = sorted({c.value for c in candidate_radii_tlines(points, lines, tol)})
    merged = []
    for v in values:
        if merged and v - merged[-1] <= MERGE_EPS:
            continue
        merged.append(v)
    best = None
    for v in merged:
        pl = solve_tlines_fixed_radius(points, lines, v, k, tol)
        if best is None or pl.total_weight > best.total_weight:
            best = pl
    return best
