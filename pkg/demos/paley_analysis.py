#!/usr/bin/env python3
"""Quadratic-residue tournaments and the coloring refutation pipeline.

PT_q (q prime, 3 mod 4) points x -> y whenever y - x is a nonzero
square.  These tournaments are highly regular: the signed edge count
between any two vertex sets stays within sqrt(|A||B|q).  That
discrepancy bound powers a refutation argument: a transitive color
class around a vertex with large in- and out-degree in the same color
would force a complete, lopsided bipartite flow that the bound forbids
once q is large.  The pipeline here runs that argument as a diagnostic
on any claimed coloring.
"""

import random
from fractions import Fraction

from domcover import (
    discrepancy,
    min_dominating_set,
    monochromatic,
    paley_tournament,
    pt7_transitive_coloring,
    refute_transitive_coloring,
    vertex_types,
)
from domcover.paley import discrepancy_bound

print("=== regularity and discrepancy ===")
rng = random.Random(3)
for q in (7, 19, 43, 67):
    t = paley_tournament(q)
    worst = 0.0
    for _ in range(2000):
        a = {v for v in range(q) if rng.random() < 0.5}
        b = {v for v in range(q) if rng.random() < 0.5}
        if a and b:
            ratio = abs(discrepancy(t, a, b)) / discrepancy_bound(len(a), len(b), q)
            worst = max(worst, ratio)
    print(f"q={q:2d}: out-degree {(q-1)//2} everywhere; "
          f"max |disc| / bound over 2000 pairs = {worst:.3f}")

print()
print("=== degree types at threshold nu = 1/2^(2k+2) ===")
ct = pt7_transitive_coloring()
census = vertex_types(ct, Fraction(1, 256))
print("largest type class:", sorted(census.largest_class),
      "reaches q/2^(2k) bound:", census.meets_size_bound)

print()
print("=== refutation pipeline ===")
for label, coloring in [
    ("PT_7 with its valid 3-coloring", pt7_transitive_coloring()),
    ("PT_3 colored with one class", monochromatic(paley_tournament(3))),
    ("PT_19 colored with one class", monochromatic(paley_tournament(19))),
]:
    report = refute_transitive_coloring(coloring)
    verdict = f"contradiction at step {report.step}" if report.contradiction else "no contradiction"
    print(f"{label:34s} -> {verdict}")

print()
print("=== domination keeps growing along the prime ladder ===")
for q in (3, 7, 19):
    print(f"dom(PT_{q}) = {min_dominating_set(paley_tournament(q)).size}")
