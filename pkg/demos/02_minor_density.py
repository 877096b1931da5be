#!/usr/bin/env python3
"""Shallow directed minors and densities at desk scale.

Run:  python3 demos/02_minor_density.py
"""
from sparsedigraph import (
    Digraph,
    apex_crown,
    contains_crown,
    crown,
    directed_path,
    grad,
    grad_lower_bound,
    is_depth_r_minor,
    top_grad,
)

# Depth-0 minors are subgraphs; absorbing vertices into branch sets
# needs positive depth.  The subdivided triangle recovers the triangle
# only at depth 1.
triangle = Digraph(3, [(0, 1), (1, 2), (2, 0)])
subdivided = Digraph(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)])
print("triangle <=_0 subdivided:", is_depth_r_minor(triangle, subdivided, 0) is not None)
model = is_depth_r_minor(triangle, subdivided, 1)
print("triangle <=_1 subdivided:", model is not None)
print("branch sets:", {v: sorted(b) for v, b in model.branch_sets.items()})

# Densities are exact rationals.
for r in (0, 1):
    print(f"grad(subdivided triangle, {r}) =", grad(subdivided, r))
    print(f"top_grad(subdivided triangle, {r}) =", top_grad(subdivided, r))

# The greedy peel bound scales to any size and never exceeds the truth.
g = apex_crown(5)
print("\napex crown 5: greedy density lower bound =", grad_lower_bound(g))

# Crowns are the obstruction family: a directed path never contains
# one, the apex crown contains its own by construction.
print("path P_8 contains crown of order 3 at depth 2:",
      contains_crown(directed_path(8), 3, 2))
print("apex_crown(4) contains crown of order 4 at depth 0:",
      contains_crown(apex_crown(4), 4, 0))
print("crown(3) vertices:", crown(3).n, "arcs:", crown(3).m)
