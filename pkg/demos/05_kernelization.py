#!/usr/bin/env python3
"""Duality between domination and scattering, and the kernel pipeline.

Run:  python3 demos/05_kernelization.py
"""
from sparsedigraph import (
    Digraph,
    apex_crown,
    alpha_r_exact,
    dominator_or_scattered,
    gamma_r_exact,
    independence_tree,
    kernelize,
    max_left_chain,
    random_digraph,
)

# The apex crown family shows why plain directed sparseness admits no
# domination/scattering duality: gamma_1 grows with n while alpha_1
# stays at 2.
for n in (4, 6, 8):
    g = apex_crown(n)
    print(
        f"apex_crown({n}): gamma_1 = {gamma_r_exact(g, 1, max_n=60)[0]}, "
        f"alpha_1 = {alpha_r_exact(g, 1, max_n=60)[0]}"
    )

# The independence tree turns a greedy anchor sequence into either a
# certificate of domination or a scattered refutation: left chains are
# always scattered.
g = random_digraph(12, 26, seed=9)
tree = independence_tree(g, list(range(12)), 1)
print("\nindependence tree: nodes", tree.node_count(),
      "height", tree.height(),
      "longest left chain", max_left_chain(tree))

# dominator_or_scattered packages the dichotomy.
res = dominator_or_scattered(g, range(12), r=1, k=2)
if res.kind == "scattered":
    print("refuted: scattered witness", list(res.scattered))
    assert gamma_r_exact(g, 1)[0] > 2
else:
    print("dominated by", sorted(res.dominating))

# The kernel rewrites the instance in standard form at budget k+1 while
# preserving the decision; infeasible inputs map to a fixed infeasible
# kernel.
for seed in (1, 3):
    g = random_digraph(10, 24, seed)
    k = 2
    res = kernelize(g, 1, k)
    original = gamma_r_exact(g, 1)[0] <= k
    if res.infeasible:
        answer = False
    else:
        answer = gamma_r_exact(res.graph, 1, max_n=60)[0] <= res.budget
    print(f"seed {seed}: kernel n={res.graph.n}, decision preserved: {answer == original}")

print("\na hopeless instance (isolated vertices, budget 2):")
print("kernel infeasible:", kernelize(Digraph(4), 1, 2).infeasible)
