#!/usr/bin/env python3
"""Hunt for instances where the farthest-map breakpoints alone are not
enough for the cover-all-blues objective.

The breakpoint-only candidate set misses red-count transitions interior to
an owner cell (a red enters or leaves the covering disk where its bisector
with the cell owner crosses the line). This script scans generated
instances, reports every such case, and verifies that the extended
candidate set repairs each one against the exhaustive reference.
"""

import sys

from sofl.instance import generate, parse_instance
from sofl.oracle import brute_k1_allblue
from sofl.variants_k1 import allblue_minred_details


def run(count=500):
    findings = 0
    for seed in range(count):
        inst = parse_instance(generate(seed, 2 + seed % 9, 1, "csofl", red_fraction=0.5))
        if not any(p.is_blue for p in inst.points):
            continue
        details = allblue_minred_details(inst.points)
        if not details.fvd_only_suboptimal:
            continue
        findings += 1
        ref = brute_k1_allblue(inst.points)
        fixed = "repaired" if details.best[2] == ref[2] else "STILL WRONG"
        print(
            f"seed {seed}: breakpoints give {details.fvd_only[2]} reds, "
            f"extended candidates give {details.best[2]} (reference {ref[2]}; {fixed})"
        )
        for p in inst.points:
            print(f"    {p.color.value} {p.x:g} {p.y:g}")
    print(f"{findings} findings in {count} instances")
    return findings


if __name__ == "__main__":
    run(int(sys.argv[1]) if len(sys.argv) > 1 else 500)
