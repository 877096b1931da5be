"""Exact, desk-scale computation of directed shallow minor relations.

A directed model maps each pattern vertex to a branch set (a disjoint
vertex subset of the host) and each pattern arc to a host arc between
the corresponding branch sets.  Within every branch set three conditions
must hold, all with directed paths of length at most r inside the branch
set: every in-attachment reaches every out-attachment, some source
reaches all out-attachments, and some sink is reached from all
in-attachments.

The searches below are exhaustive and refuse (raising SizeCapError)
rather than approximate when the host exceeds the cap.  Branch sets are
only drawn from weakly connected subsets: a model whose branch set is
disconnected can always be shrunk to the component carrying its
attachments, so nothing is lost.

Densities are exact rationals; comparisons against thresholds must never
go through floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .digraph import Digraph, out_distances
from .errors import SizeCapError
from .instances import crown


@dataclass(frozen=True)
class DirectedModel:
    """Witness that a pattern digraph occurs as a depth-r minor.

    ``branch_sets[v]`` is the host vertex set of pattern vertex v;
    ``arc_images[e]`` is the host arc representing pattern arc e;
    ``sources``/``sinks`` give the designated s_v / t_v per branch set.
    """

    depth: int
    branch_sets: dict
    arc_images: dict
    sources: dict
    sinks: dict


def _check_cap(name: str, g: Digraph, cap: int):
    if g.n > cap:
        raise SizeCapError(
            f"{name}: host has {g.n} vertices, cap is {cap}; raise max_n to force (slow)"
        )


def _connected_subsets(g: Digraph) -> list[int]:
    """All nonempty weakly connected vertex subsets, as bitmasks.

    Ordered by size then value so searches are deterministic and try
    small branch sets first.
    """
    n = g.n
    und_mask = [0] * n
    for v in range(n):
        for u in g.underlying_neighbors(v):
            und_mask[v] |= 1 << u
    result = []
    for mask in range(1, 1 << n):
        rest = mask
        start = (rest & -rest).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= und_mask[v] & mask & ~seen
            seen |= nxt
            frontier = nxt
        if seen == mask:
            result.append(mask)
    result.sort(key=lambda m: (bin(m).count("1"), m))
    return result


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class _BlockInfo:
    """Bounded directed distances inside one induced branch subgraph."""

    __slots__ = ("members", "dist")

    def __init__(self, g: Digraph, mask: int, r: int):
        self.members = tuple(_bits(mask))
        within = frozenset(self.members)
        self.dist = {
            a: out_distances(g, a, cap=r, within=within) for a in self.members
        }

    def feasible(self, ins: frozenset, outs: frozenset, r: int):
        """Check the three branch-set conditions; return (s, t) or None."""
        for a in ins:
            d = self.dist[a]
            for b in outs:
                if d.get(b, r + 1) > r:
                    return None
        source = sink = None
        for s in self.members:
            if all(self.dist[s].get(o, r + 1) <= r for o in outs):
                source = s
                break
        if source is None:
            return None
        for t in self.members:
            if all(self.dist[a].get(t, r + 1) <= r for a in ins):
                sink = t
                break
        if sink is None:
            return None
        return source, sink


def validate_model(h: Digraph, g: Digraph, r: int, model: DirectedModel) -> bool:
    """Re-check every model condition directly from the definition."""
    if set(model.branch_sets) != set(range(h.n)):
        return False
    used = set()
    for v in range(h.n):
        bs = model.branch_sets[v]
        if not bs or used & set(bs):
            return False
        used |= set(bs)
    for e in h.arcs():
        if e not in model.arc_images:
            return False
        a, b = model.arc_images[e]
        if not g.has_arc(a, b):
            return False
        if a not in model.branch_sets[e[0]] or b not in model.branch_sets[e[1]]:
            return False
    # distinct pattern arcs must use distinct host arcs
    if len(set(model.arc_images.values())) != len(model.arc_images):
        return False
    for v in range(h.n):
        bs = frozenset(model.branch_sets[v])
        ins = frozenset(
            model.arc_images[e][1] for e in h.arcs() if e[1] == v
        )
        outs = frozenset(
            model.arc_images[e][0] for e in h.arcs() if e[0] == v
        )
        dist = {a: out_distances(g, a, cap=r, within=bs) for a in bs}
        for a in ins:
            for b in outs:
                if dist[a].get(b, r + 1) > r:
                    return False
        s, t = model.sources[v], model.sinks[v]
        if s not in bs or t not in bs:
            return False
        if any(dist[s].get(o, r + 1) > r for o in outs):
            return False
        if any(dist[a].get(t, r + 1) > r for a in ins):
            return False
    return True


def is_depth_r_minor(h: Digraph, g: Digraph, r: int,
                     max_n: int = 12) -> Optional[DirectedModel]:
    """Exhaustive search for a directed model of h in g at depth r."""
    _check_cap("is_depth_r_minor", g, max_n)
    if r < 0:
        raise ValueError("depth must be nonnegative")
    if h.n == 0:
        return DirectedModel(r, {}, {}, {}, {})
    if h.n > g.n:
        return None

    subsets = _connected_subsets(g)
    max_block = g.n - (h.n - 1)
    subsets = [m for m in subsets if bin(m).count("1") <= max_block]
    info_cache: dict[int, _BlockInfo] = {}

    def info(mask: int) -> _BlockInfo:
        if mask not in info_cache:
            info_cache[mask] = _BlockInfo(g, mask, r)
        return info_cache[mask]

    # place high-degree pattern vertices first: they prune hardest
    h_order = sorted(
        range(h.n),
        key=lambda v: (-(len(h.out_neighbors(v)) + len(h.in_neighbors(v))), v),
    )
    assign: dict[int, int] = {}

    def arcs_between(src_mask: int, dst_mask: int) -> list[tuple[int, int]]:
        return [
            (a, b)
            for a in _bits(src_mask)
            for b in g.out_neighbors(a)
            if dst_mask >> b & 1
        ]

    def try_images() -> Optional[DirectedModel]:
        harcs = h.arcs()
        cands = []
        for (u, v) in harcs:
            c = arcs_between(assign[u], assign[v])
            if not c:
                return None
            cands.append(c)
        order = sorted(range(len(harcs)), key=lambda i: len(cands[i]))
        ins: dict[int, set] = {v: set() for v in range(h.n)}
        outs: dict[int, set] = {v: set() for v in range(h.n)}
        images: dict = {}
        used_arcs: set = set()

        def feas(v) -> bool:
            return (
                info(assign[v]).feasible(frozenset(ins[v]), frozenset(outs[v]), r)
                is not None
            )

        def place_arc(idx: int) -> bool:
            if idx == len(order):
                return True
            e = harcs[order[idx]]
            u, v = e
            for (a, b) in cands[order[idx]]:
                if (a, b) in used_arcs:
                    continue
                added_out = a not in outs[u]
                added_in = b not in ins[v]
                outs[u].add(a)
                ins[v].add(b)
                used_arcs.add((a, b))
                images[e] = (a, b)
                if feas(u) and feas(v) and place_arc(idx + 1):
                    return True
                used_arcs.discard((a, b))
                del images[e]
                if added_out:
                    outs[u].discard(a)
                if added_in:
                    ins[v].discard(b)
            return False

        if not place_arc(0):
            return None
        sources, sinks = {}, {}
        for v in range(h.n):
            st = info(assign[v]).feasible(frozenset(ins[v]), frozenset(outs[v]), r)
            sources[v], sinks[v] = st
        model = DirectedModel(
            depth=r,
            branch_sets={v: frozenset(_bits(assign[v])) for v in range(h.n)},
            arc_images=dict(images),
            sources=sources,
            sinks=sinks,
        )
        if not validate_model(h, g, r, model):
            raise AssertionError("search produced a model its own checker rejects")
        return model

    def place(i: int, used: int) -> Optional[DirectedModel]:
        if i == len(h_order):
            return try_images()
        v = h_order[i]
        for mask in subsets:
            if mask & used:
                continue
            assign[v] = mask
            ok = True
            for u in h.out_neighbors(v):
                if u in assign and not arcs_between(mask, assign[u]):
                    ok = False
                    break
            if ok:
                for u in h.in_neighbors(v):
                    if u in assign and not arcs_between(assign[u], mask):
                        ok = False
                        break
            if ok:
                found = place(i + 1, used | mask)
                if found is not None:
                    return found
            del assign[v]
        return None

    return place(0, 0)


def contains_crown(g: Digraph, q: int, r: int, max_n: int = 12) -> bool:
    """Is the order-q crown a depth-r minor of g?"""
    return is_depth_r_minor(crown(q), g, r, max_n=max_n) is not None


# ---------------------------------------------------------------------------
# densities


def grad_lower_bound(g: Digraph, r: int = 0) -> Fraction:
    """Greedy densest-subgraph peel; its best density is a depth-0 minor
    density and therefore a valid lower bound on the rank-r grad for all r.
    """
    if g.n == 0:
        return Fraction(0)
    alive = set(range(g.n))
    deg = [len(g.out_neighbors(v)) + len(g.in_neighbors(v)) for v in range(g.n)]
    arcs = g.m
    best = Fraction(arcs, g.n)
    while len(alive) > 1:
        v = min(alive, key=lambda x: (deg[x], x))
        for u in g.out_neighbors(v):
            if u in alive:
                deg[u] -= 1
                arcs -= 1
        for u in g.in_neighbors(v):
            if u in alive:
                deg[u] -= 1
                arcs -= 1
        alive.remove(v)
        best = max(best, Fraction(arcs, len(alive)))
    return best


def _max_subgraph_density(g: Digraph, cap: int) -> Fraction:
    """Exact rank-0 grad: depth-0 minors are exactly the subgraphs."""
    _check_cap("grad", g, cap)
    if g.n == 0:
        return Fraction(0)
    out_mask = [0] * g.n
    for u, v in g.arcs():
        out_mask[u] |= 1 << v
    best = Fraction(0)
    for mask in range(1, 1 << g.n):
        arcs = 0
        for v in _bits(mask):
            arcs += bin(out_mask[v] & mask).count("1")
        best = max(best, Fraction(arcs, bin(mask).count("1")))
    return best


def grad(g: Digraph, r: int, max_n: int = 8) -> Fraction:
    """Exact greatest reduced average density of rank r.

    Enumerates all partitions of vertex subsets into weakly connected
    branch sets, and for each partition finds the largest jointly
    realizable arc count by branch and bound over arc image choices.
    """
    if r < 0:
        raise ValueError("rank must be nonnegative")
    if r == 0:
        return _max_subgraph_density(g, max(max_n, 14))
    _check_cap("grad", g, max_n)
    if g.n == 0:
        return Fraction(0)

    subsets = _connected_subsets(g)
    by_leader: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for mask in subsets:
        by_leader[(mask & -mask).bit_length() - 1].append(mask)

    info_cache: dict[int, _BlockInfo] = {}

    def info(mask: int) -> _BlockInfo:
        if mask not in info_cache:
            info_cache[mask] = _BlockInfo(g, mask, r)
        return info_cache[mask]

    arcs_between_cache: dict[tuple[int, int], list] = {}

    def arcs_between(ma: int, mb: int):
        key = (ma, mb)
        if key not in arcs_between_cache:
            arcs_between_cache[key] = [
                (a, b) for a in _bits(ma) for b in g.out_neighbors(a) if mb >> b & 1
            ]
        return arcs_between_cache[key]

    best = Fraction(0)

    def max_arcs(blocks: list[int]) -> int:
        """Largest realizable pattern arc count for this branch partition."""
        k = len(blocks)
        pairs = []
        for i in range(k):
            for j in range(k):
                if i != j and arcs_between(blocks[i], blocks[j]):
                    pairs.append((i, j))
        if all(bin(b).count("1") == 1 for b in blocks):
            return len(pairs)  # singleton blocks carry no path constraints
        ins = [set() for _ in range(k)]
        outs = [set() for _ in range(k)]
        best_cnt = 0

        def feas(i) -> bool:
            return info(blocks[i]).feasible(frozenset(ins[i]), frozenset(outs[i]), r) is not None

        def rec(idx: int, cnt: int):
            nonlocal best_cnt
            if cnt + (len(pairs) - idx) <= best_cnt:
                return
            if idx == len(pairs):
                best_cnt = max(best_cnt, cnt)
                return
            i, j = pairs[idx]
            for (a, b) in arcs_between(blocks[i], blocks[j]):
                new_out = a not in outs[i]
                new_in = b not in ins[j]
                outs[i].add(a)
                ins[j].add(b)
                if feas(i) and feas(j):
                    rec(idx + 1, cnt + 1)
                if new_out:
                    outs[i].discard(a)
                if new_in:
                    ins[j].discard(b)
            rec(idx + 1, cnt)

        rec(0, 0)
        return best_cnt

    blocks: list[int] = []

    def partitions(avail: int):
        nonlocal best
        if blocks:
            # upper bound: every ordered block pair realized, remaining
            # vertices added as singletons cannot beat that ratio check
            k = len(blocks)
            if avail == 0:
                cnt = max_arcs(blocks)
                best = max(best, Fraction(cnt, k))
                return
        if avail == 0:
            return
        leader = (avail & -avail).bit_length() - 1
        # leader may also be left out of the pattern entirely
        partitions(avail & ~(1 << leader))
        for mask in by_leader[leader]:
            if mask & ~avail:
                continue
            blocks.append(mask)
            partitions(avail & ~mask)
            blocks.pop()

    partitions((1 << g.n) - 1)
    return best


def top_grad(g: Digraph, r: int, max_n: int = 8) -> Fraction:
    """Exact topological greatest average density of rank r.

    Principal vertices are host vertices; each pattern arc is realized by
    a directed path of length at most 2r whose internal vertices avoid
    the principals and all other chosen paths.
    """
    if r < 0:
        raise ValueError("rank must be nonnegative")
    _check_cap("top_grad", g, max_n)
    if g.n == 0:
        return Fraction(0)
    best = Fraction(0)

    def paths(a: int, b: int, principals: frozenset) -> list[frozenset]:
        """Inclusion-minimal internal vertex sets of a->b paths, length <= 2r."""
        found: list[frozenset] = []
        limit = 2 * r

        def dfs(v, internal):
            if len(internal) > max(0, limit - 1):
                return
            for w in g.out_neighbors(v):
                if w == b:
                    found.append(frozenset(internal))
                elif (
                    w not in principals
                    and w not in internal
                    and len(internal) + 1 <= limit - 1
                ):
                    internal.append(w)
                    dfs(w, internal)
                    internal.pop()

        if limit >= 1:
            dfs(a, [])
        minimal = []
        for s in sorted(set(found), key=lambda s: (len(s), sorted(s))):
            if not any(t <= s for t in minimal):
                minimal.append(s)
        return minimal

    for size in range(1, g.n + 1):
        for principals in combinations(range(g.n), size):
            pset = frozenset(principals)
            cand = []
            for a in principals:
                for b in principals:
                    if a != b:
                        ps = paths(a, b, pset)
                        if ps:
                            cand.append(ps)
            best_cnt = 0
            used: set = set()

            def rec(idx: int, cnt: int):
                nonlocal best_cnt
                if cnt + (len(cand) - idx) <= best_cnt:
                    return
                if idx == len(cand):
                    best_cnt = max(best_cnt, cnt)
                    return
                for internal in cand[idx]:
                    if not (internal & used):
                        used.update(internal)
                        rec(idx + 1, cnt + 1)
                        used.difference_update(internal)
                rec(idx + 1, cnt)

            rec(0, 0)
            best = max(best, Fraction(best_cnt, size))
    return best
