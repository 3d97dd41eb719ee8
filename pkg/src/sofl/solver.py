"""Full single-line pipeline plus the two special-case reweightings.

The general solve tries every candidate radius and keeps the placement with
the largest weight, preferring the smallest radius among ties (candidates
are visited in ascending order, so only strict improvements replace the
incumbent). The special cases are handled by reweighting: to cover all
blues while touching as few reds as possible, give each red a small
negative weight and each blue more than all reds combined; to cover as many
blues as possible while covering no red, give each blue a small positive
weight and each red less than all blues combined.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .candidates import candidate_radii_line
from .geom import DEFAULT_TOL, TolerancePolicy
from .klink import solve_fixed_radius
from .placement import Placement

__all__ = [
    "InvalidDeltaError",
    "VariantSpec",
    "SpecialResult",
    "solve_csofl",
    "reduce_allblue_minred",
    "reduce_maxblue_nored",
    "solve_special",
]


class InvalidDeltaError(ValueError):
    """A reduction delta with the wrong sign."""


@dataclass(frozen=True)
class VariantSpec:
    """Which special objective to solve and the base weight magnitude."""

    name: str  # "allblue-minred" or "maxblue-nored"
    delta: float | None = None

    def resolved_delta(self) -> float:
        if self.delta is not None:
            return self.delta
        return -1.0 if self.name == "allblue-minred" else 1.0


@dataclass(frozen=True)
class SpecialResult:
    placement: Placement
    blue_covered: int
    red_covered: int
    all_blue_covered: bool


def _solve_one(args):
    points, line_y, lam, k, tol = args
    return solve_fixed_radius(points, line_y, lam, k, tol)


def solve_csofl(points, line_y: float = 0.0, k: int = 1,
                tol: TolerancePolicy = DEFAULT_TOL, jobs: int = 1) -> Placement:
    """Max-weight placement of at most k disks of a common minimum radius.

    With jobs > 1 the per-radius solves run in a process pool; the final
    reduction is order-independent so results do not depend on jobs.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    cands = candidate_radii_line(points, line_y, tol)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(
                    _solve_one,
                    [(points, line_y, c.value, k, tol) for c in cands],
                    chunksize=max(1, len(cands) // (4 * jobs)),
                )
            )
    else:
        results = [solve_fixed_radius(points, line_y, c.value, k, tol) for c in cands]
    best = results[0]
    for pl in results[1:]:
        if pl.total_weight > best.total_weight:
            best = pl
    return best


def reduce_allblue_minred(points, delta: float = -1.0):
    """Reweight so every blue outweighs all reds together: red -> delta,
    blue -> -(#red)*delta + 1."""
    if delta >= 0:
        raise InvalidDeltaError("allblue-minred reduction needs delta < 0")
    n_red = sum(1 for p in points if not p.is_blue)
    blue_w = -n_red * delta + 1.0
    return [
        dataclasses.replace(p, weight=blue_w if p.is_blue else delta) for p in points
    ]


def reduce_maxblue_nored(points, delta: float = 1.0):
    """Reweight so any red loss dwarfs all blues: blue -> delta,
    red -> -(#blue)*delta - 1."""
    if delta <= 0:
        raise InvalidDeltaError("maxblue-nored reduction needs delta > 0")
    n_blue = sum(1 for p in points if p.is_blue)
    red_w = -n_blue * delta - 1.0
    return [
        dataclasses.replace(p, weight=delta if p.is_blue else red_w) for p in points
    ]


def solve_special(points, line_y: float, k: int, variant: VariantSpec,
                  tol: TolerancePolicy = DEFAULT_TOL) -> SpecialResult:
    """Solve a special objective via its reduction and report plain counts.

    For allblue-minred the returned flag records whether every blue point
    ended up covered; it can be False only when no k disks of any candidate
    radius can cover all blues at once.
    """
    delta = variant.resolved_delta()
    if variant.name == "allblue-minred":
        reduced = reduce_allblue_minred(points, delta)
    elif variant.name == "maxblue-nored":
        reduced = reduce_maxblue_nored(points, delta)
    else:
        raise ValueError(f"not a special variant: {variant.name!r}")
    placement = solve_csofl(reduced, line_y, k, tol)
    blue_ids = {p.id for p in points if p.is_blue}
    return SpecialResult(
        placement=placement,
        blue_covered=len(placement.covered_blue),
        red_covered=len(placement.covered_red),
        all_blue_covered=placement.covered_blue == frozenset(blue_ids),
    )
