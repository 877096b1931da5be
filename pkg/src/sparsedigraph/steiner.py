"""Directed Steiner tree solvers.

The pipeline follows the standard shape for sparse hosts: contract the
strongly connected parts of the terminal-induced subgraph, reduce
reachability to the in-degree-0 terminals, and branch on who dominates a
hard source terminal.  Non-terminals that dominate more than
d = 2 * degeneracy source terminals are few enough that branching over
them plus one deletion branch keeps the tree small; once no such vertex
remains the residual instance is solved exactly by a subset dynamic
program over the source terminals (Dreyfus-Wagner style, with vertex
costs as arc head weights).

Every solution that leaves this module has been validated by direct
reachability checks on the caller's graph.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional

from .digraph import (
    Digraph,
    contract,
    degeneracy,
    induced_subgraph,
    out_ball,
    remove_vertices,
    scc,
)
from .errors import InternalInvariantError, SizeCapError
from .oracles import dst_valid, verify_strongly_connected
from .steiner_types import DstInstance


def preprocess_contract(inst: DstInstance) -> tuple[DstInstance, list[int], int]:
    """Contract every strongly connected component of G[T].

    Returns the reduced instance, the old-to-new vertex mapping, and the
    largest component diameter s.  Solutions transfer unchanged in both
    directions: the contracted vertices are all terminals.
    """
    g = inst.graph
    term = sorted(inst.terminals)
    sub, old_of = induced_subgraph(g, term)
    dec = scc(sub)
    s = max(dec.diameters, default=0)
    blocks = [
        [old_of[v] for v in comp] for comp in dec.components if len(comp) > 1
    ]
    contracted, mapping = contract(g, blocks)
    new_terminals = frozenset(mapping[t] for t in inst.terminals)
    reduced = DstInstance(
        graph=contracted,
        root=mapping[inst.root],
        terminals=new_terminals,
        budget=inst.budget,
    )
    return reduced, mapping, s


def source_terminals(g: Digraph, terminals) -> frozenset:
    """Terminals without an in-arc from another terminal."""
    term = frozenset(terminals)
    return frozenset(
        t for t in term if not any(u in term for u in g.in_neighbors(t))
    )


# ---------------------------------------------------------------------------
# exact subset DP


def dst_exact_subset(g: Digraph, root: int, terminals, sources, budget: int,
                     max_sources: int = 16) -> Optional[frozenset]:
    """Minimum set of non-terminals connecting the root to every source.

    Shortcut arcs first bypass terminal-internal paths, then the subset
    dynamic program runs over the sources with all terminals free.
    Returns None when the minimum exceeds the budget.
    """
    terminals = frozenset(terminals)
    sources = frozenset(sources)
    if not sources <= terminals:
        raise ValueError("sources must be terminals")
    if root in terminals:
        raise ValueError("root cannot be a terminal")
    if len(sources) > max_sources:
        raise SizeCapError(
            f"dst_exact_subset: {len(sources)} sources exceed cap {max_sources}"
        )
    if budget < 0:
        return None
    if not sources:
        return frozenset()

    # bypass arcs: source -> first non-terminal along terminal-internal paths
    extra = set()
    for t in sorted(sources):
        seen = {t}
        frontier = [t]
        while frontier:
            nxt = []
            for x in frontier:
                for y in g.out_neighbors(x):
                    if y in seen:
                        continue
                    seen.add(y)
                    if y in terminals:
                        nxt.append(y)
                    elif not g.has_arc(t, y):
                        extra.add((t, y))
            frontier = nxt
    work = Digraph(g.n, set(g.arcs()) | extra) if extra else g

    n = g.n
    cost = [0 if (v == root or v in terminals) else 1 for v in range(n)]
    src = sorted(sources)
    k = len(src)
    full = (1 << k) - 1
    INF = n + 1
    dp = [[INF] * n for _ in range(full + 1)]
    parent: dict[tuple[int, int], tuple] = {}

    for mask in range(1, full + 1):
        row = dp[mask]
        bits = mask
        if bits & (bits - 1) == 0:
            t = src[bits.bit_length() - 1]
            row[t] = 0
            parent[(mask, t)] = ("base",)
        else:
            sub = (mask - 1) & mask
            while sub > (mask ^ sub):
                other = mask ^ sub
                left, right = dp[sub], dp[other]
                for v in range(n):
                    cand = left[v] + right[v]
                    if cand < row[v]:
                        row[v] = cand
                        parent[(mask, v)] = ("split", sub, v)
                sub = (sub - 1) & mask
        heap = [(row[v], v) for v in range(n) if row[v] < INF]
        heapq.heapify(heap)
        while heap:
            dist, x = heapq.heappop(heap)
            if dist > row[x]:
                continue
            step = dist + cost[x]
            for w in work.in_neighbors(x):
                if step < row[w]:
                    row[w] = step
                    parent[(mask, w)] = ("step", x)
                    heapq.heappush(heap, (step, w))

    if dp[full][root] > budget:
        return None

    chosen: set[int] = set()
    stack = [(full, root)]
    while stack:
        mask, v = stack.pop()
        chosen.add(v)
        kind = parent[(mask, v)]
        if kind[0] == "split":
            stack.append((kind[1], v))
            stack.append((mask ^ kind[1], v))
        elif kind[0] == "step":
            stack.append((mask, kind[1]))
    solution = frozenset(v for v in chosen if cost[v] == 1)
    if not sources <= out_ball(g, root, g.n,
                               within=frozenset(solution) | terminals | {root}):
        raise InternalInvariantError("subset DP produced an invalid tree")
    return solution


# ---------------------------------------------------------------------------
# FPT branching solver


@dataclass(frozen=True)
class DstFptResult:
    """Outcome of the branching solver.

    ``solution`` is a minimum-cardinality solution within the budget, or
    None.  ``nodes_per_budget[i]`` counts recursion nodes of the run with
    budget i; ``degree_threshold`` is the high-degree cutoff d and
    ``scc_diameter`` the parameter s from preprocessing.
    """

    solution: Optional[frozenset]
    degree_threshold: int
    scc_diameter: int
    nodes_per_budget: tuple[int, ...]


def dst_fpt(inst: DstInstance, max_sources: int = 16,
            enforce_node_bound: bool = True,
            exact_grad0: bool = False) -> DstFptResult:
    """Solve DST, minimizing the solution size within the budget.

    Budgets are tried in increasing order, so a returned solution has
    globally minimum cardinality.  Each run's recursion-node count is
    checked against (d+1)^(budget*(d+1)).

    The high-degree threshold d defaults to twice the underlying
    degeneracy, computable at any size.  ``exact_grad0`` switches to
    twice the exact maximum subgraph density instead (smaller branching
    on bidirected-heavy graphs, exponential to compute, small hosts only).
    """
    reduced, mapping, s = preprocess_contract(inst)
    g = reduced.graph
    root = reduced.root
    terminals = reduced.terminals
    if exact_grad0:
        from math import ceil

        from .minors import grad

        d = ceil(2 * grad(g, 0, max_n=max(16, g.n)))
    else:
        dgen, _, _ = degeneracy(g)
        d = 2 * dgen

    inverse = {}
    for old, new in enumerate(mapping):
        if old not in inst.terminals:
            inverse[new] = old

    def solve_leaf(alive: frozenset, absorbed: frozenset, k_rem: int) -> Optional[frozenset]:
        ga = remove_vertices(g, frozenset(range(g.n)) - alive)
        inner = DstInstance(ga, root, terminals | absorbed, k_rem)
        inner2, inner_map, _ = preprocess_contract(inner)
        t0 = source_terminals(inner2.graph, inner2.terminals)
        sol = dst_exact_subset(
            inner2.graph, inner2.root, inner2.terminals, t0, k_rem, max_sources
        )
        if sol is None:
            return None
        inner_inverse = {
            new: old for old, new in enumerate(inner_map)
            if old not in inner.terminals
        }
        return frozenset(inner_inverse[v] for v in sol)

    counter = [0]

    def rec(alive: frozenset, absorbed: frozenset, k_rem: int) -> Optional[frozenset]:
        counter[0] += 1
        t_all = terminals | absorbed
        sources = frozenset(
            t for t in t_all
            if not any(u in t_all for u in g.in_neighbors(t) if u in alive)
        )
        dominated = set()
        for x in sorted(absorbed | {root}):
            dominated.update(w for w in g.out_neighbors(x) if w in alive)
        t_bar = frozenset(t for t in sources if t not in dominated)
        if k_rem == 0 and t_bar:
            return None  # every undominated source needs a fresh non-terminal
        nonterms = [v for v in sorted(alive) if v not in t_all and v != root]
        s_high = frozenset(
            v for v in nonterms
            if sum(1 for t in g.out_neighbors(v) if t in t_bar) > d
        )
        t_high = frozenset(
            t for t in t_bar
            if any(u in s_high for u in g.in_neighbors(t))
        )
        t_low = t_bar - t_high
        if len(t_low) > d * k_rem:
            return None
        if not s_high:
            extra = solve_leaf(alive, absorbed, k_rem)
            if extra is None:
                return None
            return absorbed | extra
        v = min(
            t_high,
            key=lambda t: (sum(1 for u in g.in_neighbors(t) if u in s_high), t),
        )
        dominators = sorted(u for u in g.in_neighbors(v) if u in s_high)
        if k_rem >= 1:
            for cand in dominators:
                found = rec(alive, absorbed | {cand}, k_rem - 1)
                if found is not None:
                    return found
        return rec(alive - frozenset(dominators), absorbed, k_rem)

    nodes_per_budget = []
    solution = None
    for budget in range(inst.budget + 1):
        counter[0] = 0
        found = rec(frozenset(range(g.n)), frozenset(), budget)
        nodes_per_budget.append(counter[0])
        if enforce_node_bound and counter[0] > (d + 1) ** (budget * (d + 1)):
            raise InternalInvariantError(
                f"recursion grew past (d+1)^(k(d+1)) at budget {budget}"
            )
        if found is not None:
            solution = frozenset(inverse[v] for v in found)
            if not dst_valid(inst.graph, inst.root, inst.terminals, solution):
                raise InternalInvariantError("branching solver returned an invalid set")
            break
    return DstFptResult(
        solution=solution,
        degree_threshold=d,
        scc_diameter=s,
        nodes_per_budget=tuple(nodes_per_budget),
    )


# ---------------------------------------------------------------------------
# strongly connected Steiner subgraph


def scss_2approx(g: Digraph, terminals, budget: int,
                 max_sources: int = 16) -> Optional[frozenset]:
    """Factor-2 approximation for the strongly connected Steiner subgraph.

    Solves two Steiner instances, one on g and one on its reverse, both
    rooted at a fixed terminal, and returns the union.  The output always
    induces a strongly connected subgraph together with the terminals.
    """
    term = frozenset(terminals)
    if not term:
        raise ValueError("at least one terminal is required")
    anchor = min(term)
    rest = term - {anchor}
    fwd = dst_fpt(DstInstance(g, anchor, rest, budget), max_sources=max_sources)
    if fwd.solution is None:
        return None
    bwd = dst_fpt(DstInstance(g.reverse(), anchor, rest, budget), max_sources=max_sources)
    if bwd.solution is None:
        return None
    union = fwd.solution | bwd.solution
    if not verify_strongly_connected(g, term | union):
        raise InternalInvariantError("SCSS union is not strongly connected")
    return union


# ---------------------------------------------------------------------------
# instance files


def format_dst_instance(inst: DstInstance, comments=()) -> str:
    from .digraph import format_digraph

    parts = [format_digraph(inst.graph, comments=comments).rstrip("\n")]
    parts.append(f"root {inst.root}")
    parts.extend(f"terminal {t}" for t in sorted(inst.terminals))
    parts.append(f"budget {inst.budget}")
    return "\n".join(parts) + "\n"


def parse_dst_instance(text: str) -> DstInstance:
    from .digraph import parse_digraph

    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    graph_lines = []
    rest = []
    for ln in lines:
        if ln.split()[0] in ("root", "terminal", "budget"):
            rest.append(ln)
        else:
            graph_lines.append(ln)
    g = parse_digraph("\n".join(graph_lines))
    root = None
    budget = None
    terminals = set()
    for ln in rest:
        key, value = ln.split()
        if key == "root":
            root = int(value)
        elif key == "terminal":
            terminals.add(int(value))
        else:
            budget = int(value)
    if root is None or budget is None:
        raise ValueError("instance file needs root and budget lines")
    return DstInstance(g, root, frozenset(terminals), budget)
