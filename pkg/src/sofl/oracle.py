"""Brute-force reference solvers used by the test suite and `sofl check`.

These share only the geometry predicates and the candidate generators with
the optimized code; every optimum here comes from explicit subset
enumeration, with the same deterministic tie rule as the solvers. The one
shortcut taken is sound dominance: disks at pairwise distance >= 2*lam are
disjoint, so a center whose own disk nets a non-positive weight can never
improve a selection and is skipped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .candidates import (
    MERGE_EPS,
    candidate_radii_discrete,
    candidate_radii_line,
    candidate_radii_tlines,
)
from .geom import (
    DEFAULT_TOL,
    Disk,
    Region,
    TolerancePolicy,
    centers_compatible,
    classify,
    is_covered,
)
from .klink import build_center_sequence, influence_intervals
from .multiline import multiline_centers
from .variants_k1 import pair_disk

__all__ = [
    "TooLargeError",
    "OracleResult",
    "brute_fixed_radius",
    "brute_csofl",
    "brute_k1_maxblue",
    "brute_k1_allblue",
    "brute_tlines",
    "brute_discrete",
    "brute_special_counts",
]


class TooLargeError(ValueError):
    """Instance exceeds the oracle's enumeration guards."""


@dataclass(frozen=True)
class OracleResult:
    weight: float
    radius: float
    placements: tuple  # chosen center coordinates (x, y) or site ids
    counts: tuple[int, int]  # covered (blue, red)


def _coverage(points, centers, lam, tol):
    disks = [Disk(x, y, lam) for x, y in centers]
    weight = 0.0
    nb = nr = 0
    for p in points:
        if any(is_covered(p, d, tol) for d in disks):
            weight += p.weight
            if p.is_blue:
                nb += 1
            else:
                nr += 1
    return weight, (nb, nr)


def brute_fixed_radius(points, centers, lam: float, k: int,
                       tol: TolerancePolicy = DEFAULT_TOL,
                       max_centers: int = 20, max_k: int = 4) -> OracleResult:
    """Exhaustive search over all feasible subsets of at most k centers."""
    if len(centers) > max_centers:
        raise TooLargeError(f"{len(centers)} centers exceeds the guard {max_centers}")
    if k > max_k:
        raise TooLargeError(f"k={k} exceeds the guard {max_k}")
    centers = sorted(centers)
    n = len(points)
    masks = []
    for x, y in centers:
        d = Disk(x, y, lam)
        m = 0
        for i, p in enumerate(points):
            if is_covered(p, d, tol):
                m |= 1 << i
        masks.append(m)
    point_w = [p.weight for p in points]
    weight_cache: dict[int, float] = {0: 0.0}

    def union_weight(mask: int) -> float:
        got = weight_cache.get(mask)
        if got is None:
            got = sum(point_w[i] for i in range(n) if mask >> i & 1)
            weight_cache[mask] = got
        return got

    best_key = (0.0, 0, ())
    best: tuple[int, ...] = ()

    def rec(start: int, chosen: list[int], mask: int):
        nonlocal best_key, best
        key = (
            -union_weight(mask),
            len(chosen),
            tuple(sorted((centers[i] for i in chosen), reverse=True)),
        )
        if key < best_key:
            best_key = key
            best = tuple(chosen)
        if len(chosen) == k:
            return
        for i in range(start, len(centers)):
            if all(centers_compatible(centers[i], centers[j], lam, tol) for j in chosen):
                chosen.append(i)
                rec(i + 1, chosen, mask | masks[i])
                chosen.pop()

    rec(0, [], 0)
    chosen_centers = tuple(centers[i] for i in best)
    weight, counts = _coverage(points, chosen_centers, lam, tol)
    return OracleResult(weight, lam, chosen_centers, counts)


def _line_center_grid(points, line_y, lam, k, tol):
    intervals = influence_intervals(points, line_y, lam, tol)
    seq = build_center_sequence(intervals, lam, k, tol)
    return [(x, line_y) for x in seq.xs]


def brute_csofl(points, line_y: float, k: int, tol: TolerancePolicy = DEFAULT_TOL,
                max_n: int = 8, max_k: int = 3) -> OracleResult:
    """Candidate-radius loop over exhaustive fixed-radius searches."""
    if len(points) > max_n:
        raise TooLargeError(f"n={len(points)} exceeds the guard {max_n}")
    if k > max_k:
        raise TooLargeError(f"k={k} exceeds the guard {max_k}")
    best = OracleResult(0.0, 0.0, (), (0, 0))
    for cand in candidate_radii_line(points, line_y, tol):
        lam = cand.value
        if lam <= 0.0:
            continue
        grid = _line_center_grid(points, line_y, lam, k, tol)
        useful = [
            c
            for c in grid
            if sum(p.weight for p in points if is_covered(p, Disk(c[0], c[1], lam), tol)) > 0
        ]
        res = brute_fixed_radius(
            points, useful, lam, k, tol, max_centers=len(useful), max_k=max_k
        )
        if res.weight > best.weight:
            best = res
    return best


def _k1_candidate_disks(points, include_vertical=True):
    blues = [p for p in points if p.is_blue]
    disks = []
    for i, p in enumerate(points):
        for q in points[i + 1 :]:
            if not p.is_blue and not q.is_blue:
                continue
            try:
                pc = pair_disk(p, q)
            except ValueError:
                continue
            if pc is not None:
                disks.append((pc.center_x, pc.radius))
    if include_vertical:
        disks.extend((b.x, b.y) for b in blues)
    return disks


def brute_k1_maxblue(points, tol: TolerancePolicy = DEFAULT_TOL, max_n: int = 12):
    """Reference for the single-disk max-blue objective; same tuple contract
    as the optimized algorithms, or None when nothing feasible exists."""
    if len(points) > max_n:
        raise TooLargeError(f"n={len(points)} exceeds the guard {max_n}")
    blues = [p for p in points if p.is_blue]
    reds = [p for p in points if not p.is_blue]
    best = None
    best_key = None
    for cx, rad in _k1_candidate_disks(points):
        d = Disk(cx, 0.0, rad)
        if any(classify(r, d, tol) is Region.INSIDE for r in reds):
            continue
        count = sum(1 for b in blues if classify(b, d, tol) is not Region.OUTSIDE)
        if not count:
            continue
        key = (-count, rad, cx)
        if best_key is None or key < best_key:
            best_key = key
            best = (cx, rad, count)
    return best


def brute_k1_allblue(points, tol: TolerancePolicy = DEFAULT_TOL, max_n: int = 12):
    """Reference for the single-disk cover-all-blues objective."""
    if len(points) > max_n:
        raise TooLargeError(f"n={len(points)} exceeds the guard {max_n}")
    blues = [p for p in points if p.is_blue]
    reds = [p for p in points if not p.is_blue]
    if not blues:
        raise ValueError("at least one blue point is required")
    best = None
    best_key = None
    for cx, rad in _k1_candidate_disks(points):
        d = Disk(cx, 0.0, rad)
        if any(classify(b, d, tol) is Region.OUTSIDE for b in blues):
            continue
        count = sum(1 for r in reds if classify(r, d, tol) is Region.INSIDE)
        key = (count, rad, cx)
        if best_key is None or key < best_key:
            best_key = key
            best = (cx, rad, count)
    return best


def brute_tlines(points, lines, k: int, tol: TolerancePolicy = DEFAULT_TOL,
                 max_centers: int = 16, max_k: int = 3) -> OracleResult:
    """Candidate-radius loop over exhaustive multi-line subset search."""
    if k > max_k:
        raise TooLargeError(f"k={k} exceeds the guard {max_k}")
    values = sorted({c.value for c in candidate_radii_tlines(points, lines, tol)})
    merged: list[float] = []
    for v in values:
        if merged and v - merged[-1] <= MERGE_EPS:
            continue
        merged.append(v)
    best = OracleResult(0.0, 0.0, (), (0, 0))
    lines = list(lines)
    for lam in merged:
        if lam <= 0.0:
            continue
        cents = multiline_centers(points, lines, lam, k, tol)
        coords = [(c.x, lines[c.line_index]) for c in cents]
        if len(coords) > max_centers:
            raise TooLargeError(
                f"{len(coords)} candidate centers exceeds the guard {max_centers}"
            )
        res = brute_fixed_radius(points, coords, lam, k, tol,
                                 max_centers=max_centers, max_k=max_k)
        if res.weight > best.weight:
            best = res
    return best


def brute_discrete(sites, points, k: int, lambda_set=None,
                   tol: TolerancePolicy = DEFAULT_TOL,
                   max_sites: int = 10, max_k: int = 4) -> OracleResult:
    """Exhaustive subset search over sites for each candidate radius."""
    sites = tuple(tuple(s) for s in sites)
    if len(sites) > max_sites:
        raise TooLargeError(f"s={len(sites)} exceeds the guard {max_sites}")
    if k > max_k:
        raise TooLargeError(f"k={k} exceeds the guard {max_k}")
    if lambda_set is None:
        lambda_set = [c.value for c in candidate_radii_discrete(points, sites, tol)]
    merged: list[float] = []
    for v in sorted(lambda_set):
        if merged and v - merged[-1] <= MERGE_EPS:
            continue
        merged.append(v)
    best = OracleResult(0.0, 0.0, (), (0, 0))
    for lam in merged:
        if lam <= 0.0:
            continue
        res = brute_fixed_radius(points, list(sites), lam, k, tol,
                                 max_centers=max_sites, max_k=max_k)
        if res.weight > best.weight:
            best = res
    return best


def brute_special_counts(points, line_y: float, k: int, variant: str,
                         tol: TolerancePolicy = DEFAULT_TOL,
                         max_n: int = 8, max_k: int = 3):
    """Reference counts for the special objectives with k disks.

    For "maxblue-nored": (max blue count with zero reds covered). For
    "allblue-minred": (feasible, min red count over selections covering all
    blues); feasible is False when no k disks cover every blue at any
    candidate radius.
    """
    if len(points) > max_n:
        raise TooLargeError(f"n={len(points)} exceeds the guard {max_n}")
    if k > max_k:
        raise TooLargeError(f"k={k} exceeds the guard {max_k}")
    all_blue_mask = 0
    for i, p in enumerate(points):
        if p.is_blue:
            all_blue_mask |= 1 << i
    best_blue = 0
    best_red = None
    for cand in candidate_radii_line(points, line_y, tol):
        lam = cand.value
        if lam <= 0.0:
            continue
        grid = _line_center_grid(points, line_y, lam, k, tol)
        blue_masks = []
        red_masks = []
        for x, y in grid:
            d = Disk(x, y, lam)
            bm = rm = 0
            for i, p in enumerate(points):
                if is_covered(p, d, tol):
                    if p.is_blue:
                        bm |= 1 << i
                    else:
                        rm |= 1 << i
            blue_masks.append(bm)
            red_masks.append(rm)

        def rec(start, chosen, bm, rm):
            nonlocal best_blue, best_red
            if variant == "maxblue-nored":
                if rm == 0 and bm.bit_count() > best_blue:
                    best_blue = bm.bit_count()
            elif bm == all_blue_mask:
                nred = rm.bit_count()
                if best_red is None or nred < best_red:
                    best_red = nred
            if len(chosen) == k:
                return
            for i in range(start, len(grid)):
                c = grid[i]
                if all(centers_compatible(c, o, lam, tol) for o in chosen):
                    chosen.append(c)
                    rec(i + 1, chosen, bm | blue_masks[i], rm | red_masks[i])
                    chosen.pop()

        rec(0, [], 0, 0)
    if variant == "maxblue-nored":
        return best_blue
    return (best_red is not None), best_red
