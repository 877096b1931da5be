#!/usr/bin/env python3
"""Directed Steiner trees: contraction, branching, and the strongly
connected variant.

Run:  python3 demos/03_steiner.py
"""
from sparsedigraph import (
    Digraph,
    DstInstance,
    dst_exact_enum,
    dst_fpt,
    preprocess_contract,
    random_digraph,
    scss_2approx,
    source_terminals,
)

# Terminals forming a directed cycle collapse to a single vertex; the
# parameter s records the largest component diameter.
g = Digraph(6, [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4), (4, 5)])
inst = DstInstance(g, 0, frozenset({1, 2, 3, 5}), 2)
reduced, mapping, s = preprocess_contract(inst)
print(f"contraction: {g.n} -> {reduced.graph.n} vertices, component diameter s = {s}")
print("source terminals of the reduced instance:",
      sorted(source_terminals(reduced.graph, reduced.terminals)))

# The branching solver returns a minimum solution within the budget and
# reports its search effort per tried budget.
res = dst_fpt(inst)
print("solution:", sorted(res.solution), "| d =", res.degree_threshold,
      "| nodes per budget:", res.nodes_per_budget)
assert res.solution == dst_exact_enum(inst)

# On random instances the solver and the enumeration oracle agree.
agree = 0
for seed in range(20):
    h = random_digraph(9, 22, seed)
    probe = DstInstance(h, 0, frozenset({3, 5, 7}), 2)
    a = dst_fpt(probe).solution
    b = dst_exact_enum(probe)
    assert (a is None) == (b is None)
    agree += 1
print(f"{agree} random instances agree with the oracle")

# Strongly connected Steiner: union of a forward and a backward run.
star = Digraph(4, [(0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0)])
print("SCSS on the bidirected star, terminals {1,2,3}:",
      sorted(scss_2approx(star, {1, 2, 3}, 1)))
