"""Single-line fixed-radius machinery: influence intervals, the candidate
center grid, and the budgeted center-selection dynamic program.

For a fixed radius lam, every point within lam of the line contributes an
influence interval of center positions whose disk covers it. Candidate
centers are the interval endpoints plus copies shifted by multiples of
2*lam on both sides, because a chain of touching disks may hang off a
single contact, plus two far-away sentinel positions that can never cover
anything. Choosing at most k centers with pairwise gap >= 2*lam so as to
maximize covered weight is then a two-index DP: phi(i, j) looks at the
first i+1 centers with j picks left and either skips center i or takes it
on top of the best solution ending at p[i], the rightmost center at gap
>= 2*lam to its left.

Ties are broken deterministically: maximum weight, then fewest centers,
then the selection whose largest center is smallest (continuing leftward).
The brute-force oracle applies the same rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geom import (
    DEFAULT_TOL,
    Color,
    Disk,
    TolerancePolicy,
    disk_weight,
)
from .placement import LineCenter, Placement, empty_placement, line_placement

__all__ = [
    "InfluenceInterval",
    "CenterSequence",
    "DpTables",
    "influence_intervals",
    "build_center_sequence",
    "weight_array",
    "predecessor_array",
    "build_dp_tables",
    "max_weight_k_links",
    "solve_fixed_radius",
    "edge_weight",
]


@dataclass(frozen=True)
class InfluenceInterval:
    point_id: int
    l: float
    r: float
    color: Color


@dataclass(frozen=True)
class CenterSequence:
    """Strictly increasing candidate center abscissae with provenance tags."""

    xs: tuple[float, ...]
    source: tuple[tuple, ...]


@dataclass
class DpTables:
    w: list[float]
    p: list[int | None]
    phi: list[list[tuple[float, int]]]  # (weight, -centers used), per (i, j)
    back: list[list[bool]]  # True where center i is taken at budget j


def influence_intervals(points, line_y: float, lam: float, tol: TolerancePolicy = DEFAULT_TOL):
    """[x-h, x+h] per point within lam of the line, h = sqrt(lam^2 - dy^2)."""
    lam2 = lam * lam
    band = tol.band(lam2)
    out = []
    for p in points:
        dy = p.y - line_y
        dy2 = dy * dy
        if dy2 - lam2 > band:
            continue
        h = math.sqrt(max(0.0, lam2 - dy2))
        out.append(InfluenceInterval(p.id, p.x - h, p.x + h, p.color))
    return out


def build_center_sequence(intervals, lam: float, k: int, tol: TolerancePolicy = DEFAULT_TOL) -> CenterSequence:
    if lam <= 0:
        raise ValueError("center sequence requires a positive radius")
    if k < 1:
        raise ValueError("k must be at least 1")
    if not intervals:
        return CenterSequence((0.0, 2.0 * k * lam), (("sentinel-s",), ("sentinel-t",)))
    raw = []
    for iv in intervals:
        for side, e in (("l", iv.l), ("r", iv.r)):
            raw.append((e, ("endpoint", iv.point_id, side)))
            for j in range(1, k):
                off = 2.0 * j * lam
                raw.append((e - off, ("shift", iv.point_id, side, -j)))
                raw.append((e + off, ("shift", iv.point_id, side, j)))
    margin = 2.0 * k * lam
    raw.append((min(iv.l for iv in intervals) - margin, ("sentinel-s",)))
    raw.append((max(iv.r for iv in intervals) + margin, ("sentinel-t",)))
    raw.sort(key=lambda item: item[0])
    xs = [raw[0][0]]
    src = [raw[0][1]]
    for x, tag in raw[1:]:
        if tol.close(x, xs[-1]):
            continue  # coincident centers are merged, never perturbed
        xs.append(x)
        src.append(tag)
    return CenterSequence(tuple(xs), tuple(src))


def weight_array(seq: CenterSequence, points, line_y: float, lam: float, tol: TolerancePolicy = DEFAULT_TOL):
    """Covered weight of a radius-lam disk at every candidate center.

    The bulk path evaluates the same predicates as geom.classify with numpy
    and sums selected weights in point order, so results match the scalar
    path bit for bit.
    """
    if not points or len(points) * len(seq.xs) < 64:
        return [disk_weight(Disk(x, line_y, lam), points, tol) for x in seq.xs]
    px = np.array([p.x for p in points])
    dy2 = (np.array([p.y for p in points]) - line_y) ** 2
    is_blue = np.array([p.is_blue for p in points])
    ws = [p.weight for p in points]
    xs = np.array(seq.xs)
    r2 = lam * lam
    band = tol.band(r2)
    s = (px[None, :] - xs[:, None]) ** 2 + dy2[None, :] - r2
    covered = np.where(is_blue[None, :], s <= band, s < -band)
    out = [0.0] * len(seq.xs)
    rows, cols = np.nonzero(covered)  # row-major, so per-center point order
    for i, j in zip(rows.tolist(), cols.tolist()):
        out[i] += ws[j]
    return out


def predecessor_array(seq: CenterSequence, lam: float, tol: TolerancePolicy = DEFAULT_TOL):
    """p[i] = rightmost i' < i with xs[i] - xs[i'] >= 2*lam, or None."""
    xs = seq.xs
    need = 2.0 * lam - tol.x_slack(2.0 * lam)
    out: list[int | None] = []
    last = -1
    for i, x in enumerate(xs):
        while last + 1 < i and x - xs[last + 1] >= need:
            last += 1
        out.append(last if last >= 0 else None)
    return out


_BASE = (0.0, 0)


def build_dp_tables(w, p, k: int) -> DpTables:
    m = len(w)
    phi = [[_BASE] * (k + 1) for _ in range(m)]
    back = [[False] * (k + 1) for _ in range(m)]
    for i in range(m):
        pi = p[i]
        row = phi[i]
        for j in range(1, k + 1):
            skip = phi[i - 1][j] if i > 0 else _BASE
            prev = phi[pi][j - 1] if pi is not None else _BASE
            take = (prev[0] + w[i], prev[1] - 1)
            if take > skip:
                row[j] = take
                back[i][j] = True
            else:
                row[j] = skip
    return DpTables(list(w), list(p), phi, back)


def max_weight_k_links(w, p, k: int):
    """Best total weight over at most k centers linked through p[].

    Unused budget costs nothing, so the value is never negative. Returns the
    value and the chosen indices under the canonical tie rule.
    """
    m = len(w)
    if m == 0:
        return 0.0, []
    tables = build_dp_tables(w, p, k)
    chosen = []
    i, j = m - 1, k
    while i >= 0 and j > 0:
        if tables.back[i][j]:
            chosen.append(i)
            j -= 1
            i = p[i] if p[i] is not None else -1
        else:
            i -= 1
    chosen.reverse()
    return tables.phi[m - 1][k][0], chosen


def solve_fixed_radius(points, line_y: float, lam: float, k: int, tol: TolerancePolicy = DEFAULT_TOL) -> Placement:
    """Best placement of at most k radius-lam disks centered on one line."""
    if lam <= 0.0:
        return empty_placement(max(lam, 0.0))
    intervals = influence_intervals(points, line_y, lam, tol)
    seq = build_center_sequence(intervals, lam, k, tol)
    w = weight_array(seq, points, line_y, lam, tol)
    p = predecessor_array(seq, lam, tol)
    _, chosen = max_weight_k_links(w, p, k)
    centers = tuple(LineCenter(seq.xs[i], 0) for i in chosen)
    return line_placement(points, [line_y], lam, centers, tol)


def edge_weight(i: int, j: int, seq: CenterSequence, w, lam: float, tol: TolerancePolicy = DEFAULT_TOL) -> float:
    """Pairwise link cost used only for property testing the selection graph:
    +inf when the centers are too close, otherwise -(w[i] + w[j])."""
    if not i < j:
        raise ValueError("edge requires i < j")
    gap = seq.xs[j] - seq.xs[i]
    if gap < 2.0 * lam - tol.x_slack(2.0 * lam):
        return math.inf
    return -(w[i] + w[j])
