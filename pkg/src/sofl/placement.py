"""Solution containers and tie-break helpers shared by solvers and oracles."""

from __future__ import annotations

from dataclasses import dataclass

from .geom import DEFAULT_TOL, Disk, TolerancePolicy, is_covered

__all__ = [
    "LineCenter",
    "SiteCenter",
    "Placement",
    "empty_placement",
    "union_coverage",
    "line_placement",
    "site_placement",
    "selection_key",
]


@dataclass(frozen=True)
class LineCenter:
    x: float
    line_index: int = 0

    def sort_key(self) -> tuple[float, int]:
        return (self.x, self.line_index)


@dataclass(frozen=True)
class SiteCenter:
    site_id: int
    x: float
    y: float

    def sort_key(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class Placement:
    radius: float
    centers: tuple
    total_weight: float
    covered_blue: frozenset
    covered_red: frozenset


def empty_placement(lam: float = 0.0) -> Placement:
    return Placement(lam, (), 0.0, frozenset(), frozenset())


def union_coverage(disks, points, tol: TolerancePolicy = DEFAULT_TOL):
    """Union-coverage weight plus covered id sets; each point counted once."""
    weight = 0.0
    blue_ids = set()
    red_ids = set()
    for p in points:
        if any(is_covered(p, d, tol) for d in disks):
            weight += p.weight
            (blue_ids if p.is_blue else red_ids).add(p.id)
    return weight, frozenset(blue_ids), frozenset(red_ids)


def line_placement(points, lines, lam, centers, tol: TolerancePolicy = DEFAULT_TOL) -> Placement:
    """Placement for centers on horizontal lines, weight recomputed as union."""
    disks = [Disk(c.x, lines[c.line_index], lam) for c in centers]
    weight, blue_ids, red_ids = union_coverage(disks, points, tol)
    return Placement(lam, tuple(centers), weight, blue_ids, red_ids)


def site_placement(points, sites, lam, site_ids, tol: TolerancePolicy = DEFAULT_TOL) -> Placement:
    centers = tuple(SiteCenter(i, sites[i][0], sites[i][1]) for i in sorted(site_ids))
    disks = [Disk(c.x, c.y, lam) for c in centers]
    weight, blue_ids, red_ids = union_coverage(disks, points, tol)
    return Placement(lam, centers, weight, blue_ids, red_ids)


def selection_key(weight: float, center_keys) -> tuple:
    """Canonical comparison key for equally deep searches; minimize it.

    Rule: largest weight first, then fewest centers, then the selection
    whose largest center key is smallest, continuing leftward. The same rule
    is applied by the optimized solvers and the brute-force oracles so that
    chosen centers agree, not just optimal values.
    """
    return (-weight, len(center_keys), tuple(sorted(center_keys, reverse=True)))
