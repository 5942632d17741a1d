#!/usr/bin/env python3
"""Transitive edge colorings: searching, witnesses, and constructions.

A tournament is k-transitive when its edges split into k transitively
oriented classes.  With one or two colors that forces the tournament to
be a total order, but three colors already allow rich structure: the
7-point quadratic-residue tournament, 9-point substitution products, and
majority tournaments of any odd profile.
"""

import random
from collections import Counter

from domcover import (
    blowup_c3,
    cyclic_triangle,
    find_transitive_coloring,
    majority_tournament,
    min_dominating_set,
    paley_tournament,
    permutation_tournament,
    pt7_transitive_coloring,
    recover_permutation,
    verify_transitive_coloring,
)
from domcover.core import all_tournaments, is_acyclic

print("=== one or two colors force a total order ===")
hits = sum(
    (find_transitive_coloring(t, 2) is not None) == is_acyclic(t)
    for t in all_tournaments(4)
)
print(f"all {hits} orientations of K4 agree: 2-colorable <=> acyclic")
print("C3 with two colors:", find_transitive_coloring(cyclic_triangle(), 2))

print()
print("=== the 7-point witness with three colors ===")
ct = pt7_transitive_coloring()
sizes = Counter(c for _, _, c in ct.colored_edges())
print("class sizes:", dict(sizes), " verifies:", verify_transitive_coloring(ct))
print("dom of its base:", min_dominating_set(ct.base).size)
found = find_transitive_coloring(paley_tournament(7), 3)
print("searcher finds its own 3-coloring:", found is not None)

print()
print("=== substitution blow-up: 9 vertices, still 3-transitive ===")
b = blowup_c3()
print("n =", b.n, " verifies:", verify_transitive_coloring(b), " dom >=",
      min_dominating_set(b.base).size)

print()
print("=== 2-colorings are permutation tournaments ===")
pi = (2, 1, 4, 3)
pt = permutation_tournament(pi)
print(f"pi = {pi}: color-1 edges {sorted(pt.color_class(1))}")
print("recovered:", recover_permutation(pt))
rng = random.Random(6)
n = 12
pi = tuple(rng.sample(range(1, n + 1), n))
print(f"random pi of size {n} roundtrips:", recover_permutation(permutation_tournament(pi)) == pi)

print()
print("=== majority tournaments are transitively colorable ===")
base, mct = majority_tournament([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
print("Condorcet profile yields the cyclic triangle:", base == cyclic_triangle())
orders = [rng.sample(range(9), 9) for _ in range(5)]
base, mct = majority_tournament(orders)
print(f"random 5-order profile on 9 vertices: {mct.k} index-set colors,",
      "verifies:", verify_transitive_coloring(mct))
