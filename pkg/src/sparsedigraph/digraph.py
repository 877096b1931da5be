"""Core directed graph representation and distance machinery.

Vertices are dense integer indices ``0..n-1``; a digraph is immutable
after construction.  Self-loops are rejected, duplicate arcs are
rejected, and antiparallel pairs (u,v),(v,u) are two distinct arcs.
All higher-level algorithms in this package operate on these values,
so everything here is deliberately small and heavily exercised.

The plain-text exchange format is::

    # optional comment lines
    digraph <n> <m>
    <u> <v>          (m arc lines, 0 <= u,v < n, u != v)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

VertexSet = frozenset  # alias used in signatures; members are ints


class Digraph:
    """Immutable digraph with out/in adjacency lists.

    Adjacency tuples are sorted so that every traversal in the package
    is deterministic without further care.
    """

    __slots__ = ("n", "_arcs", "_out", "_in", "_und")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        arc_set = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (u, v) in arc_set:
                raise ValueError(f"duplicate arc ({u},{v})")
            arc_set.add((u, v))
        out: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(arc_set):
            out[u].append(v)
            inc[v].append(u)
        self.n = n
        self._arcs = frozenset(arc_set)
        self._out = tuple(tuple(a) for a in out)
        self._in = tuple(tuple(sorted(a)) for a in inc)
        self._und: Optional[tuple[tuple[int, ...], ...]] = None

    @property
    def m(self) -> int:
        return len(self._arcs)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs in sorted order."""
        return sorted(self._arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arcs

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def underlying_neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v in the underlying undirected graph."""
        if self._und is None:
            und = [set() for _ in range(self.n)]
            for u, w in self._arcs:
                und[u].add(w)
                und[w].add(u)
            self._und = tuple(tuple(sorted(s)) for s in und)
        return self._und[v]

    def underlying_edges(self) -> list[tuple[int, int]]:
        """Unordered pairs of the underlying undirected graph, each once."""
        return sorted({(min(u, v), max(u, v)) for u, v in self._arcs})

    def reverse(self) -> "Digraph":
        """The digraph with every arc flipped."""
        return Digraph(self.n, ((v, u) for u, v in self._arcs))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self._arcs == other._arcs
        )

    def __hash__(self) -> int:
        return hash((self.n, self._arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


class LinearOrder:
    """A permutation of 0..n-1 with O(1) position lookup.

    ``seq[i]`` is the vertex at position i (position 0 is the smallest
    element of the order); ``position(v)`` inverts that.
    """

    __slots__ = ("seq", "_pos")

    def __init__(self, seq: Sequence[int]):
        seq = tuple(seq)
        n = len(seq)
        pos = [-1] * n
        for i, v in enumerate(seq):
            if not (0 <= v < n) or pos[v] != -1:
                raise ValueError("sequence is not a permutation of 0..n-1")
            pos[v] = i
        self.seq = seq
        self._pos = tuple(pos)

    @classmethod
    def identity(cls, n: int) -> "LinearOrder":
        return cls(range(n))

    def position(self, v: int) -> int:
        return self._pos[v]

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self) -> Iterator[int]:
        return iter(self.seq)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearOrder) and self.seq == other.seq

    def __hash__(self) -> int:
        return hash(self.seq)

    def __repr__(self) -> str:
        return f"LinearOrder({list(self.seq)})"


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components with per-component directed diameters.

    ``component_of[v]`` is the id of v's component; ``components[i]`` lists
    the members of component i (components are numbered by their smallest
    member, ascending).  ``diameters[i]`` is the largest directed distance
    between an ordered pair of vertices of component i, measured inside the
    component; singletons have diameter 0.
    """

    component_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    diameters: tuple[int, ...]


# ---------------------------------------------------------------------------
# distance-bounded neighborhoods


def out_ball(g: Digraph, v: int, r: int, within: Optional[frozenset] = None) -> frozenset:
    """Vertices reachable from v by a directed path of length <= r.

    Always contains v itself.  If ``within`` is given, paths may only use
    vertices of that set (v must belong to it).
    """
    return _ball(g, v, r, g.out_neighbors, within)


def in_ball(g: Digraph, v: int, r: int, within: Optional[frozenset] = None) -> frozenset:
    """Vertices that reach v by a directed path of length <= r."""
    return _ball(g, v, r, g.in_neighbors, within)


def _ball(g, v, r, adj, within):
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    if r < 0:
        raise ValueError("radius must be nonnegative")
    if within is not None and v not in within:
        raise ValueError("start vertex not in the allowed set")
    seen = {v}
    frontier = [v]
    for _ in range(r):
        if not frontier:
            break
        nxt = []
        for x in frontier:
            for y in adj(x):
                if y not in seen and (within is None or y in within):
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def out_distances(g: Digraph, v: int, cap: Optional[int] = None,
                  within: Optional[frozenset] = None) -> dict[int, int]:
    """BFS distances from v along arcs; vertices past ``cap`` are omitted."""
    return _distances(g, v, g.out_neighbors, cap, within)


def in_distances(g: Digraph, v: int, cap: Optional[int] = None,
                 within: Optional[frozenset] = None) -> dict[int, int]:
    """BFS distances towards v (i.e. from v in the reversed digraph)."""
    return _distances(g, v, g.in_neighbors, cap, within)


def _distances(g, v, adj, cap, within):
    dist = {v: 0}
    frontier = [v]
    d = 0
    while frontier and (cap is None or d < cap):
        d += 1
        nxt = []
        for x in frontier:
            for y in adj(x):
                if y not in dist and (within is None or y in within):
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return dist


def shortest_path(g: Digraph, u: int, v: int,
                  within: Optional[frozenset] = None) -> Optional[list[int]]:
    """One shortest directed u->v path as a vertex list, or None.

    Ties are broken towards smaller predecessor indices, so the result is
    deterministic.
    """
    if u == v:
        return [u]
    parent: dict[int, int] = {u: -1}
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            for y in g.out_neighbors(x):
                if y not in parent and (within is None or y in within):
                    parent[y] = x
                    if y == v:
                        path = [v]
                        while path[-1] != u:
                            path.append(parent[path[-1]])
                        return path[::-1]
                    nxt.append(y)
        frontier = nxt
    return None


# ---------------------------------------------------------------------------
# strongly connected components


def scc(g: Digraph) -> SccDecomposition:
    """Tarjan's algorithm (iterative) plus per-component diameters."""
    n = g.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            out = g.out_neighbors(v)
            for i in range(pi, len(out)):
                w = out[i]
                if index[w] == -1:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    comps.sort(key=lambda c: c[0])
    component_of = [0] * n
    for cid, comp in enumerate(comps):
        for v in comp:
            component_of[v] = cid
    diameters = []
    for comp in comps:
        members = frozenset(comp)
        diam = 0
        if len(comp) > 1:
            for v in comp:
                dist = out_distances(g, v, within=members)
                diam = max(diam, max(dist.values()))
        diameters.append(diam)
    return SccDecomposition(
        component_of=tuple(component_of),
        components=tuple(tuple(c) for c in comps),
        diameters=tuple(diameters),
    )


# ---------------------------------------------------------------------------
# graph surgery


def contract(g: Digraph, partition: Iterable[Iterable[int]]) -> tuple[Digraph, list[int]]:
    """Contract each block of ``partition`` to a single vertex.

    Blocks must be disjoint subsets of the vertex set; vertices outside the
    blocks stay singletons.  Arcs are projected, self-loops dropped and
    parallels deduplicated.  Returns the contracted digraph and the
    old-to-new vertex mapping.  New indices follow the smallest old index
    of each block.
    """
    blocks = [sorted(set(b)) for b in partition]
    seen: set[int] = set()
    for b in blocks:
        for v in b:
            if not (0 <= v < g.n):
                raise ValueError(f"vertex {v} out of range")
            if v in seen:
                raise ValueError(f"partition blocks overlap at vertex {v}")
            seen.add(v)
    block_of = {}
    for i, b in enumerate(blocks):
        for v in b:
            block_of[v] = i
    # new ids ordered by the smallest old vertex of each group
    leaders = sorted(set(min(b) for b in blocks) | (set(range(g.n)) - seen))
    new_id = {leader: i for i, leader in enumerate(leaders)}
    mapping = [0] * g.n
    for v in range(g.n):
        leader = min(blocks[block_of[v]]) if v in block_of else v
        mapping[v] = new_id[leader]
    new_arcs = set()
    for u, v in g.arcs():
        a, b = mapping[u], mapping[v]
        if a != b:
            new_arcs.add((a, b))
    return Digraph(len(leaders), new_arcs), mapping


def induced_subgraph(g: Digraph, vertices: Iterable[int]) -> tuple[Digraph, list[int]]:
    """Induced subgraph on ``vertices``; returns (subgraph, new-to-old map)."""
    old = sorted(set(vertices))
    for v in old:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    new_of = {v: i for i, v in enumerate(old)}
    arcs = [(new_of[u], new_of[v]) for u, v in g.arcs() if u in new_of and v in new_of]
    return Digraph(len(old), arcs), old


def remove_vertices(g: Digraph, removed: Iterable[int]) -> Digraph:
    """Same vertex set, but all arcs touching ``removed`` are dropped.

    Keeping the indexing intact (removed vertices stay as isolated husks)
    lets callers mix results from G and G - X without renumbering.
    """
    dead = set(removed)
    return Digraph(g.n, ((u, v) for u, v in g.arcs() if u not in dead and v not in dead))


# ---------------------------------------------------------------------------
# degeneracy


def degeneracy(g: Digraph) -> tuple[int, LinearOrder, list[tuple[int, int]]]:
    """Min-degree peel of the underlying undirected graph.

    Returns ``(d, order, orientation)`` where d is the largest degree seen
    at removal time, ``order`` lists the vertices so that every vertex has
    at most d underlying neighbors earlier in the order (the peel sequence
    reversed), and ``orientation`` directs every underlying edge from the
    later position to the earlier one, which gives out-degree <= d.
    Ties are broken towards the smallest vertex index.
    """
    n = g.n
    neigh = [set(g.underlying_neighbors(v)) for v in range(n)]
    deg = [len(s) for s in neigh]
    alive = set(range(n))
    peel: list[int] = []
    d = 0
    for _ in range(n):
        v = min(alive, key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        peel.append(v)
        alive.remove(v)
        for u in neigh[v]:
            if u in alive:
                deg[u] -= 1
    order = LinearOrder(peel[::-1])
    orientation = []
    for u, v in g.underlying_edges():
        if order.position(u) > order.position(v):
            orientation.append((u, v))
        else:
            orientation.append((v, u))
    return d, order, sorted(orientation)


# ---------------------------------------------------------------------------
# text format


def format_digraph(g: Digraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"digraph {g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.arcs())
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    """Parse the plain-text digraph format; duplicates and loops rejected."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty digraph file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "digraph":
        raise ValueError(f"bad header line: {lines[0]!r}")
    n, m = int(head[1]), int(head[2])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} arc lines, found {len(lines) - 1}")
    arcs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad arc line: {ln!r}")
        arcs.append((int(parts[0]), int(parts[1])))
    return Digraph(n, arcs)
