"""Weak reachability, weak coloring numbers, admissibility, and the
transitive fraternal augmentation pipeline that extracts good orders.

A vertex u is weakly r-reachable from v with respect to a linear order L
when some directed path of length at most r, running from u to v or from
v to u, has u as its L-smallest vertex.  wcol_r(G) minimizes over all
orders the largest weak-reachability set; its limit wcol_n(G) plays the
role tree-depth plays for undirected graphs.

The augmentation pipeline is the constructive route to a good order:
re-orient the arcs with small out-degree, then close fraternal and
transitive patterns layer by layer, and finally peel the union graph.
The resulting order comes with the certified guarantee (d+1)c + 1 where
d is the union's max out-degree and c its peel degeneracy.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .digraph import Digraph, LinearOrder, degeneracy, out_distances
from .errors import InternalInvariantError, SizeCapError


# ---------------------------------------------------------------------------
# weak reachability


def wreach_all(g: Digraph, order: LinearOrder, r: int) -> tuple[frozenset, ...]:
    """Weak-r-reachability sets for every vertex at once.

    For each u, a bounded search through strictly L-larger vertices finds
    everything u weakly reaches; u is then recorded in those sets.
    """
    if len(order) != g.n:
        raise ValueError("order size does not match the graph")
    if r < 0:
        raise ValueError("radius must be nonnegative")
    result = [{v} for v in range(g.n)]
    for u in range(g.n):
        pu = order.position(u)
        allowed = frozenset(
            w for w in range(g.n) if order.position(w) >= pu
        )
        for adj in (g.out_neighbors, g.in_neighbors):
            seen = {u}
            frontier = [u]
            for _ in range(r):
                if not frontier:
                    break
                nxt = []
                for x in frontier:
                    for y in adj(x):
                        if y not in seen and y in allowed:
                            seen.add(y)
                            nxt.append(y)
                frontier = nxt
            for w in seen:
                result[w].add(u)
    return tuple(frozenset(s) for s in result)


def wreach(g: Digraph, order: LinearOrder, v: int, r: int) -> frozenset:
    """Vertices weakly r-reachable from v with respect to the order."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    return wreach_all(g, order, r)[v]


def wcol_of_order(g: Digraph, order: LinearOrder, r: int) -> int:
    """max_v |WReach_r[v]| for a fixed order."""
    if g.n == 0:
        return 0
    return max(len(s) for s in wreach_all(g, order, r))


def wcol_infty(g: Digraph, order: LinearOrder) -> int:
    """The limit weak coloring number of an order: radius n."""
    return wcol_of_order(g, order, g.n)


def _adjacency_masks(g: Digraph) -> tuple[list[int], list[int]]:
    out_mask = [0] * g.n
    in_mask = [0] * g.n
    for u, v in g.arcs():
        out_mask[u] |= 1 << v
        in_mask[v] |= 1 << u
    return out_mask, in_mask


def wcol_exact(g: Digraph, r: int, max_n: int = 9) -> tuple[int, LinearOrder]:
    """Exact wcol_r with a witness order, by pruned search over all orders.

    Orders are built smallest-position first; once a vertex is placed its
    weak-reachability count is final, which gives the lower bound used
    for pruning.
    """
    if g.n > max_n:
        raise SizeCapError(f"wcol_exact: n={g.n} exceeds cap {max_n}")
    n = g.n
    if n == 0:
        return 0, LinearOrder([])
    out_mask, in_mask = _adjacency_masks(g)

    def reach(u: int, allowed: int) -> int:
        """Vertices != u reachable from u (either direction) within r steps
        using only ``allowed`` vertices."""
        total = 0
        for masks in (out_mask, in_mask):
            seen = 1 << u
            frontier = seen
            for _ in range(r):
                if not frontier:
                    break
                nxt = 0
                m = frontier
                while m:
                    v = (m & -m).bit_length() - 1
                    m &= m - 1
                    nxt |= masks[v]
                nxt &= allowed & ~seen
                seen |= nxt
                frontier = nxt
            total |= seen
        return total & ~(1 << u)

    reach_memo: dict[tuple[int, int], int] = {}

    def reach_cached(u: int, allowed: int) -> int:
        key = (u, allowed)
        if key not in reach_memo:
            reach_memo[key] = reach(u, allowed)
        return reach_memo[key]

    _, heuristic, _ = degeneracy(g)
    best = wcol_of_order(g, heuristic, r)
    best_order: LinearOrder = heuristic

    counts = [1] * n
    seq: list[int] = []

    def dfs(unplaced: int, max_placed: int):
        nonlocal best, best_order
        if unplaced == 0:
            if max_placed < best:
                best = max_placed
                best_order = LinearOrder(seq)
            return
        m = unplaced
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            final_u = counts[u]
            new_max = max(max_placed, final_u)
            if new_max >= best:
                continue
            touched = reach_cached(u, unplaced)
            ok = True
            t = touched
            while t:
                w = (t & -t).bit_length() - 1
                t &= t - 1
                counts[w] += 1
            # every still-unplaced count is a lower bound on the final value
            rest = unplaced & ~(1 << u)
            t = rest
            while t:
                w = (t & -t).bit_length() - 1
                t &= t - 1
                if counts[w] >= best:
                    ok = False
                    break
            if ok:
                seq.append(u)
                dfs(rest, new_max)
                seq.pop()
            t = touched
            while t:
                w = (t & -t).bit_length() - 1
                t &= t - 1
                counts[w] -= 1

    dfs((1 << n) - 1, 1)
    return best, best_order


def wcol_infty_exact(g: Digraph, max_n: int = 9) -> tuple[int, LinearOrder]:
    return wcol_exact(g, g.n, max_n=max_n)


# ---------------------------------------------------------------------------
# admissibility


def _adm_candidates(g: Digraph, v: int, smaller: frozenset, r: int) -> list[frozenset]:
    """Inclusion-minimal non-v vertex sets of admissibility paths at v.

    Paths run from v in either orientation, keep internal vertices outside
    ``smaller`` and stop at the first vertex inside it; truncating at the
    first smaller vertex loses no packing.
    """
    found: set[frozenset] = set()
    for adj in (g.out_neighbors, g.in_neighbors):

        def dfs(x, trail):
            for y in adj(x):
                if y == v or y in trail:
                    continue
                if y in smaller:
                    found.add(frozenset(trail | {y}))
                elif len(trail) + 1 < r:
                    dfs(y, trail | {y})

        if r >= 1:
            dfs(v, frozenset())
    minimal: list[frozenset] = []
    for s in sorted(found, key=lambda s: (len(s), sorted(s))):
        if not any(t <= s for t in minimal):
            minimal.append(s)
    return minimal


def _max_disjoint(sets: list[frozenset]) -> int:
    best = 0
    k = len(sets)

    def rec(idx: int, used: frozenset, cnt: int):
        nonlocal best
        if cnt + (k - idx) <= best:
            return
        if idx == k:
            best = max(best, cnt)
            return
        if not (sets[idx] & used):
            rec(idx + 1, used | sets[idx], cnt + 1)
        rec(idx + 1, used, cnt)

    rec(0, frozenset(), 0)
    return best


def adm_of_order(g: Digraph, order: LinearOrder, v: int, r: int) -> int:
    """Largest family of length-<=r paths leaving v towards L-smaller
    endpoints, pairwise meeting only in v."""
    smaller = frozenset(
        w for w in range(g.n) if order.position(w) < order.position(v)
    )
    return _max_disjoint(_adm_candidates(g, v, smaller, r))


def adm_exact(g: Digraph, r: int, max_n: int = 9) -> tuple[int, LinearOrder]:
    """Exact r-admissibility with witness order.

    The admissibility of a vertex depends only on the set of smaller
    vertices, so the search over orders memoizes on that set.
    """
    if g.n > max_n:
        raise SizeCapError(f"adm_exact: n={g.n} exceeds cap {max_n}")
    n = g.n
    if n == 0:
        return 0, LinearOrder([])

    memo: dict[tuple[int, int], int] = {}

    def adm_val(u: int, smaller_mask: int) -> int:
        key = (u, smaller_mask)
        if key not in memo:
            smaller = frozenset(
                w for w in range(n) if smaller_mask >> w & 1
            )
            memo[key] = _max_disjoint(_adm_candidates(g, u, smaller, r))
        return memo[key]

    identity = LinearOrder.identity(n)
    best = max(adm_of_order(g, identity, v, r) for v in range(n))
    best_order = identity
    seq: list[int] = []

    def dfs(placed_mask: int, cur_max: int):
        nonlocal best, best_order
        if placed_mask == (1 << n) - 1:
            if cur_max < best:
                best = cur_max
                best_order = LinearOrder(seq)
            return
        for u in range(n):
            if placed_mask >> u & 1:
                continue
            val = adm_val(u, placed_mask)
            new_max = max(cur_max, val)
            if new_max >= best:
                continue
            seq.append(u)
            dfs(placed_mask | (1 << u), new_max)
            seq.pop()

    dfs(0, 0)
    return best, best_order


# ---------------------------------------------------------------------------
# transitive fraternal augmentations


@dataclass(frozen=True)
class Augmentation:
    """Layered arc sets E_1..E_depth over the base graph's vertices.

    E_1 re-orients the base arcs; deeper layers hold the oriented
    fraternal/transitive closures.  No pair of vertices is ever connected
    in both directions across the layers.
    """

    n: int
    depth: int
    layers: tuple[frozenset, ...]

    def union_arcs(self) -> frozenset:
        acc: set = set()
        for layer in self.layers:
            acc |= layer
        return frozenset(acc)

    def union_graph(self) -> Digraph:
        return Digraph(self.n, self.union_arcs())


def _orient_pairs(n: int, pairs: set) -> frozenset:
    """Degeneracy-orient a set of unordered pairs (as 2-frozensets)."""
    if not pairs:
        return frozenset()
    proxy = Digraph(n, (tuple(sorted(p)) for p in pairs))
    _, _, orientation = degeneracy(proxy)
    return frozenset(orientation)


def tfa_augment(g: Digraph, r: int) -> Augmentation:
    """Depth-r transitive fraternal augmentation of g.

    Layer t (for t >= 2) closes every fraternal pattern (w,u) in E_j1,
    (w,v) in E_j2 and every transitive pattern (u,v) in E_j1, (v,w) in
    E_j2 with j1 + j2 = t, provided the base graph joins the new pair by
    a directed path of length at most t in some direction and the pair is
    not already augmented.  The new pairs are degeneracy-oriented.
    """
    if r < 1:
        raise ValueError("augmentation depth must be at least 1")
    n = g.n
    dist = [out_distances(g, v, cap=r) for v in range(n)]

    def joined_within(u: int, v: int, cap: int) -> bool:
        return dist[u].get(v, r + 1) <= cap or dist[v].get(u, r + 1) <= cap

    _, _, first = degeneracy(g)
    layers: list[frozenset] = [frozenset(first)]
    present = {frozenset((u, v)) for u, v in first}
    outs = [[set() for _ in range(n)]]
    ins = [[set() for _ in range(n)]]
    for u, v in first:
        outs[0][u].add(v)
        ins[0][v].add(u)

    for t in range(2, r + 1):
        fresh: set = set()
        for j1 in range(1, t):
            j2 = t - j1
            o1, o2 = outs[j1 - 1], outs[j2 - 1]
            i1 = ins[j1 - 1]
            for w in range(n):
                # fraternal: two arcs leaving w in layers summing to t
                for u in o1[w]:
                    for v in o2[w]:
                        if u == v:
                            continue
                        pair = frozenset((u, v))
                        if pair in present or pair in fresh:
                            continue
                        if joined_within(u, v, t):
                            fresh.add(pair)
                # transitive: u -> w in j1 followed by w -> x in j2
                for u in i1[w]:
                    for x in o2[w]:
                        if u == x:
                            continue
                        pair = frozenset((u, x))
                        if pair in present or pair in fresh:
                            continue
                        if joined_within(u, x, t):
                            fresh.add(pair)
        layer = _orient_pairs(n, fresh)
        layers.append(layer)
        present |= fresh
        outs.append([set() for _ in range(n)])
        ins.append([set() for _ in range(n)])
        for u, v in layer:
            outs[-1][u].add(v)
            ins[-1][v].add(u)

    return Augmentation(n=n, depth=r, layers=tuple(layers))


@dataclass(frozen=True)
class WcolOrder:
    """An order plus the certificate that produced it.

    ``guarantee`` bounds every weak-reachability set of the order at the
    augmentation depth: (max_outdegree + 1) * smaller_neighbors + 1.
    """

    order: LinearOrder
    guarantee: int
    smaller_neighbors: int
    max_outdegree: int
    augmentation: Optional[Augmentation] = None


def order_from_augmentation(g: Digraph, aug: Augmentation) -> WcolOrder:
    """Greedy order of the augmentation union graph with its bound."""
    if aug.n != g.n:
        raise ValueError("augmentation does not fit the graph")
    union = aug.union_graph()
    d = max((len(union.out_neighbors(v)) for v in range(union.n)), default=0)
    c, order, _ = degeneracy(union)
    return WcolOrder(
        order=order,
        guarantee=(d + 1) * c + 1,
        smaller_neighbors=c,
        max_outdegree=d,
        augmentation=aug,
    )


def compute_wcol_order(g: Digraph, r: int) -> WcolOrder:
    """Augment to depth r, then extract the order and its guarantee."""
    return order_from_augmentation(g, tfa_augment(g, r))


# ---------------------------------------------------------------------------
# low directed tree-depth colorings


def low_treedepth_coloring(g: Digraph, p: int, max_radius: int = 32) -> list[int]:
    """Greedy coloring along a radius-2^p order.

    Any union of i <= p color classes induces a subgraph whose weak
    coloring number at radius 2^p, under the same order, is at most i.
    """
    if p < 1:
        raise ValueError("class budget must be at least 1")
    radius = 2 ** p
    if radius > max_radius:
        raise SizeCapError(
            f"low_treedepth_coloring: radius 2^{p} exceeds cap {max_radius}"
        )
    res = compute_wcol_order(g, radius)
    sets = wreach_all(g, res.order, radius)
    colors = [-1] * g.n
    for v in res.order:
        taken = {colors[w] for w in sets[v] if w != v and colors[w] != -1}
        color = 0
        while color in taken:
            color += 1
        colors[v] = color
    if g.n and max(colors) + 1 > res.guarantee:
        raise InternalInvariantError("coloring exceeded the order guarantee")
    return colors
