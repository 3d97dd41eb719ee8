"""Enumeration of the finite candidate radius sets for each placement setting.

A positive optimal radius is always pinned by a critical contact: a single
blue point at its height over the line, a blue-blue or blue-red pair
equidistant from some line center, or, in the discrete setting, a demand
point on the boundary of a disk at a candidate site. Red-red contacts never
pin the radius because such a disk can shrink until a blue point takes over,
and site-site half distances cannot pin it either.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geom import (
    DEFAULT_TOL,
    DegenerateInputError,
    TolerancePolicy,
    center_on_line_through,
    dist2,
)

__all__ = [
    "CandidateRadius",
    "candidate_radii_line",
    "candidate_radii_tlines",
    "candidate_radii_discrete",
    "KIND_ZERO",
    "KIND_BLUE",
    "KIND_BLUE_BLUE",
    "KIND_BLUE_RED",
    "KIND_POINT_SITE",
    "MERGE_EPS",
]

MERGE_EPS = 1e-9  # absolute merge tolerance for near-equal radii

KIND_ZERO = "zero"
KIND_BLUE = "single-blue"
KIND_BLUE_BLUE = "blue-blue"
KIND_BLUE_RED = "blue-red"
KIND_POINT_SITE = "point-site"


@dataclass(frozen=True)
class CandidateRadius:
    value: float
    kind: str
    ids: tuple[int, ...] = ()
    line_index: int | None = None


def _entry_key(e: CandidateRadius):
    return (e.value, -1 if e.line_index is None else e.line_index, e.kind, e.ids)


def _merge_sorted(entries):
    """Drop entries whose value sits within MERGE_EPS of the kept predecessor."""
    out = []
    for e in entries:
        if out and e.value - out[-1].value <= MERGE_EPS:
            continue
        out.append(e)
    return out


def _line_entries(points, line_y: float, line_index: int | None, tol: TolerancePolicy):
    entries = []
    for p in points:
        if p.is_blue:
            entries.append(
                CandidateRadius(abs(p.y - line_y), KIND_BLUE, (p.id,), line_index)
            )
    for i, p in enumerate(points):
        for q in points[i + 1 :]:
            if not p.is_blue and not q.is_blue:
                continue  # red-red contacts never pin the radius
            b, other = (p, q) if p.is_blue else (q, p)
            try:
                res = center_on_line_through(b, other, line_y)
            except DegenerateInputError:
                continue
            if res is None:
                continue
            kind = KIND_BLUE_BLUE if other.is_blue else KIND_BLUE_RED
            entries.append(CandidateRadius(res[1], kind, (b.id, other.id), line_index))
    return entries


def candidate_radii_line(points, line_y: float = 0.0, tol: TolerancePolicy = DEFAULT_TOL):
    """Sorted, deduplicated candidate radii for a single line.

    Always contains zero; empty input yields exactly that.
    """
    entries = [CandidateRadius(0.0, KIND_ZERO)]
    entries += _line_entries(points, line_y, None, tol)
    entries.sort(key=_entry_key)
    return _merge_sorted(entries)


def candidate_radii_tlines(points, lines, tol: TolerancePolicy = DEFAULT_TOL):
    """Per-line candidate radii, each entry tagged with its line index.

    Duplicated values across lines are kept (they differ in provenance);
    the solver deduplicates by value before solving.
    """
    lines = list(lines)
    if not lines:
        raise ValueError("at least one line is required")
    if any(b <= a for a, b in zip(lines, lines[1:])):
        raise ValueError("lines must be strictly increasing")
    out = [CandidateRadius(0.0, KIND_ZERO)]
    for li, ly in enumerate(lines):
        es = _line_entries(points, ly, li, tol)
        es.sort(key=_entry_key)
        # a point sitting exactly on its line folds into the global zero
        out.extend(e for e in _merge_sorted(es) if e.value > MERGE_EPS)
    out.sort(key=_entry_key)
    return out


def candidate_radii_discrete(points, sites, tol: TolerancePolicy = DEFAULT_TOL):
    """Zero plus every point-to-site distance, sorted and deduplicated."""
    if not sites:
        raise ValueError("at least one candidate site is required")
    entries = [CandidateRadius(0.0, KIND_ZERO)]
    for p in points:
        for si, (sx, sy) in enumerate(sites):
            entries.append(
                CandidateRadius(
                    math.sqrt(dist2(p.x, p.y, sx, sy)), KIND_POINT_SITE, (p.id, si)
                )
            )
    entries.sort(key=_entry_key)
    return _merge_sorted(entries)
