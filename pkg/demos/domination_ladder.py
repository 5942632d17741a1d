#!/usr/bin/env python3
"""Minimum dominating sets: the 3 / 7 / 19 ladder and fractional bounds.

The smallest tournaments that no single vertex, pair, or triple can
dominate have 3, 7, and 19 vertices; the first two are the cyclic
triangle and the quadratic-residue tournament on 7 points.  The exact
solver reproduces the ladder, and the exact-rational LP shows the
fractional transversal number staying below 2 on every instance.
"""

import random

from domcover import (
    cyclic_triangle,
    domination_hypergraph,
    fractional_transversal,
    greedy_dominating_set,
    is_k_paradoxical,
    min_dominating_set,
    paley_tournament,
    random_tournament,
)

print("=== the domination ladder ===")
for name, t in [
    ("C3 (cyclic triangle)", cyclic_triangle()),
    ("PT_7", paley_tournament(7)),
    ("PT_19", paley_tournament(19)),
]:
    cert = min_dominating_set(t)
    tau = fractional_transversal(domination_hypergraph(t)).value
    print(
        f"{name:22s} n={t.n:3d}  dom={cert.size}  witness={sorted(cert.vertices)}"
        f"  tau*={tau} ({float(tau):.4f})"
    )

print()
print("=== paradoxicality checks ===")
print("C3 is 1-paradoxical:   ", is_k_paradoxical(cyclic_triangle(), 1))
print("PT_7 is 2-paradoxical: ", is_k_paradoxical(paley_tournament(7), 2))
print("PT_7 is 3-paradoxical: ", is_k_paradoxical(paley_tournament(7), 3), "(dom = 3)")
print("PT_67 is 2-paradoxical:", is_k_paradoxical(paley_tournament(67), 2))

print()
print("=== greedy versus exact on random tournaments ===")
rng = random.Random(1)
for n in (10, 20, 40, 80):
    t = random_tournament(n, rng)
    g = len(greedy_dominating_set(t))
    e = min_dominating_set(t).size
    print(f"n={n:3d}: greedy={g}  exact={e}")

print()
print("=== tau* < 2 in exact rationals ===")
rng = random.Random(2)
worst = None
for _ in range(200):
    t = random_tournament(rng.randint(2, 30), rng)
    tau = fractional_transversal(domination_hypergraph(t)).value
    if worst is None or tau > worst:
        worst = tau
print(f"largest tau* over 200 random tournaments: {worst} = {float(worst):.6f} (< 2)")
