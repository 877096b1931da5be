"""Domination versus scattering: the constructive duality machinery,
domination cores, and the kernelization pipeline.

The central procedure walks a certified weak-coloring order, greedily
dominating the target set while collecting anchor vertices; the anchors
are then inserted into an independence tree whose left chains are
r-scattered.  A long left chain certifies that no small dominating set
exists; otherwise the greedy dominator is returned.  Core reduction and
kernelization iterate that dichotomy with the thresholds taken from the
neighborhood-complexity bound.

The thresholds are astronomically conservative, which is what makes the
procedure provably correct; at desk scale they mean the domination core
is usually the whole vertex set.  Both thresholds accept overrides so
the deeper phases can actually be exercised on crafted instances.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .coloring import compute_wcol_order, wreach_all
from .digraph import Digraph, LinearOrder, in_ball, induced_subgraph, out_ball, remove_vertices
from .errors import InternalInvariantError
from .minors import grad_lower_bound
from .domination import distance_vector
from .oracles import verify_dominating, verify_scattered


# ---------------------------------------------------------------------------
# projections and closures


def projection(g: Digraph, u: int, anchors, r: int) -> frozenset:
    """Anchor vertices linked to u by a path of length <= r (either
    direction) whose internal vertices avoid the anchor set."""
    anchor_set = frozenset(anchors)
    if u in anchor_set:
        raise ValueError("projection source must lie outside the anchor set")
    found = set()
    for adj in (g.out_neighbors, g.in_neighbors):
        seen = {u}
        frontier = [u]
        for _ in range(r):
            if not frontier:
                break
            nxt = []
            for x in frontier:
                for y in adj(x):
                    if y in anchor_set:
                        found.add(y)
                    elif y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
    return frozenset(found)


@dataclass(frozen=True)
class ClosureResult:
    """Closure set plus the projection bound it achieves."""

    vertices: frozenset
    xi: int


def _projection_paths_vertices(g: Digraph, u: int, anchors: frozenset, r: int,
                               removed: frozenset) -> frozenset:
    """Vertices lying on some qualifying projection path of u.

    A vertex w != u sits on such a path when dist(u, w) + dist(w, anchor
    hit) <= r with both legs avoiding anchors internally; both directions
    are checked.
    """
    on_path = set()
    blocked = anchors | removed
    for fwd in (True, False):
        step_out = g.out_neighbors if fwd else g.in_neighbors
        step_in = g.in_neighbors if fwd else g.out_neighbors
        d_from = {u: 0}
        frontier = [u]
        while frontier:
            nxt = []
            for x in frontier:
                if d_from[x] >= r - 1:
                    continue
                for y in step_out(x):
                    if y not in d_from and y not in blocked:
                        d_from[y] = d_from[x] + 1
                        nxt.append(y)
            frontier = nxt
        # distance from any free vertex to its first anchor hit
        d_to = {}
        frontier = []
        for a in sorted(anchors):
            for y in step_in(a):
                if y not in blocked and y not in d_to:
                    d_to[y] = 1
                    frontier.append(y)
        while frontier:
            nxt = []
            for x in frontier:
                if d_to[x] >= r - 1:
                    continue
                for y in step_in(x):
                    if y not in blocked and y not in d_to:
                        d_to[y] = d_to[x] + 1
                        nxt.append(y)
            frontier = nxt
        for w, a in d_from.items():
            if w != u and a + d_to.get(w, r + 1) <= r:
                on_path.add(w)
    return frozenset(on_path)


def closure(g: Digraph, anchors, r: int,
            xi: Optional[int] = None) -> ClosureResult:
    """Find a small set whose removal bounds every projection onto the
    anchors by xi.

    xi defaults to twice the greedy density lower bound; whenever the
    greedy construction blows its size budget (r-1) * xi * |anchors|, xi
    is doubled and the construction restarts.  All three contract
    properties are asserted on the way out.
    """
    anchor_set = frozenset(anchors)
    if r < 1:
        raise ValueError("radius must be at least 1")
    if xi is None:
        xi = max(1, math.ceil(2 * grad_lower_bound(g)))

    outside = [v for v in range(g.n) if v not in anchor_set]
    while True:
        budget = (r - 1) * xi * len(anchor_set)
        chosen: set = set()
        ok = True
        while True:
            large = [
                u for u in outside
                if u not in chosen
                and len(projection(remove_vertices(g, chosen), u, anchor_set, r)) > xi
            ]
            if not large:
                break
            if len(chosen) >= budget:
                ok = False
                break
            stripped = remove_vertices(g, chosen)
            score: dict[int, int] = {}
            for u in large:
                for w in _projection_paths_vertices(
                    stripped, u, anchor_set, r, frozenset(chosen)
                ) | {u}:
                    if w not in anchor_set and w not in chosen:
                        score[w] = score.get(w, 0) + 1
            pick = max(sorted(score), key=lambda w: score[w])
            chosen.add(pick)
        if ok:
            result = ClosureResult(vertices=frozenset(chosen), xi=xi)
            final = remove_vertices(g, result.vertices)
            if result.vertices & anchor_set:
                raise InternalInvariantError("closure intersects the anchors")
            if len(result.vertices) > budget:
                raise InternalInvariantError("closure exceeded its size budget")
            for u in outside:
                if u in result.vertices:
                    continue
                if len(projection(final, u, anchor_set, r)) > xi:
                    raise InternalInvariantError("closure left a large projection")
            return result
        if xi >= g.n:
            raise InternalInvariantError("no feasible projection bound up to n")
        xi = min(2 * xi, g.n)


# ---------------------------------------------------------------------------
# independence trees


@dataclass
class _Node:
    vertex: int
    left: Optional[int] = None
    right: Optional[int] = None


class IndependenceTree:
    """Binary insertion tree recording shared r-in-ball intersections.

    Inserting a vertex walks from the root, turning right at nodes whose
    r-in-ball meets the new vertex's (some vertex r-dominates both), left
    otherwise.  Left chains are therefore r-scattered.
    """

    def __init__(self, g: Digraph, radius: int):
        self.graph = g
        self.radius = radius
        self.nodes: list[_Node] = []
        self.sequence: list[int] = []
        self._balls: dict[int, frozenset] = {}

    def _ball(self, v: int) -> frozenset:
        if v not in self._balls:
            self._balls[v] = in_ball(self.graph, v, self.radius)
        return self._balls[v]

    def insert(self, v: int):
        self.sequence.append(v)
        if not self.nodes:
            self.nodes.append(_Node(v))
            return
        ball = self._ball(v)
        at = 0
        while True:
            node = self.nodes[at]
            go_right = bool(self._ball(node.vertex) & ball)
            child = node.right if go_right else node.left
            if child is None:
                self.nodes.append(_Node(v))
                if go_right:
                    node.right = len(self.nodes) - 1
                else:
                    node.left = len(self.nodes) - 1
                return
            at = child

    def node_count(self) -> int:
        return len(self.nodes)

    def height(self) -> int:
        """Nodes on the longest root-leaf path."""
        if not self.nodes:
            return 0

        def depth(i):
            node = self.nodes[i]
            best = 1
            if node.left is not None:
                best = max(best, 1 + depth(node.left))
            if node.right is not None:
                best = max(best, 1 + depth(node.right))
            return best

        return depth(0)

    def longest_right_chain(self) -> int:
        """Longest pairwise right-descendant chain on a root-leaf path."""
        if not self.nodes:
            return 0

        def walk(i):
            node = self.nodes[i]
            best = 1
            if node.left is not None:
                best = max(best, walk(node.left))
            if node.right is not None:
                best = max(best, 1 + walk(node.right))
            return best

        return walk(0)

    def assert_size_law(self):
        """Height-h trees with no right chain of length t hold at most
        h^(t+1) nodes; t is measured as one past the longest chain."""
        h = self.height()
        t = self.longest_right_chain() + 1
        if self.node_count() > h ** (t + 1):
            raise InternalInvariantError(
                f"tree size law violated: {self.node_count()} nodes, "
                f"height {h}, chain bound {t}"
            )


def independence_tree(g: Digraph, sequence, r: int) -> IndependenceTree:
    """Insert the sequence in order; the size law is asserted on exit."""
    tree = IndependenceTree(g, r)
    for v in sequence:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
        tree.insert(v)
    tree.assert_size_law()
    return tree


def max_left_chain(tree: IndependenceTree) -> list[int]:
    """Longest root-leaf subsequence of pairwise left descendants.

    Returns the vertices in insertion order; the result is always
    r-scattered and that is asserted before returning.
    """
    if not tree.nodes:
        return []

    def value(i) -> int:
        node = tree.nodes[i]
        best = 1
        if node.left is not None:
            best = max(best, 1 + value(node.left))
        if node.right is not None:
            best = max(best, value(node.right))
        return best

    chain = []
    at = 0
    while at is not None:
        node = tree.nodes[at]
        left_val = 1 + value(node.left) if node.left is not None else 1
        right_val = value(node.right) if node.right is not None else 0
        if node.left is not None and left_val >= max(right_val, 2):
            chain.append(node.vertex)
            at = node.left
        elif node.right is not None and right_val > left_val:
            at = node.right
        else:
            chain.append(node.vertex)
            at = None
    if not verify_scattered(tree.graph, chain, tree.radius):
        raise InternalInvariantError("left chain is not scattered")
    return chain


# ---------------------------------------------------------------------------
# dominator or scattered


@dataclass(frozen=True)
class DualityResult:
    """Exactly one of ``dominating`` / ``scattered`` is set.

    ``anchors`` is the greedy anchor sequence, ``order``/``guarantee``
    the certified weak-coloring order it walked.
    """

    kind: str
    dominating: Optional[frozenset]
    scattered: Optional[tuple]
    order: LinearOrder
    guarantee: int
    anchors: tuple
    tree: IndependenceTree


def dominator_or_scattered(g: Digraph, targets, r: int, k: int) -> DualityResult:
    """Either a distance-r dominator of the targets, or an r-scattered
    subset of k+1 targets proving no k-vertex dominator exists."""
    if r < 1:
        raise ValueError("radius must be at least 1")
    if k < 0:
        raise ValueError("budget must be nonnegative")
    target_set = frozenset(targets)
    for v in target_set:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")

    res = compute_wcol_order(g, 2 * r)
    sets = wreach_all(g, res.order, 2 * r)
    undominated = set(target_set)
    anchors: list[int] = []
    dominating: set = set()
    while undominated:
        x = min(undominated, key=res.order.position)
        anchors.append(x)
        hull = sets[x]
        dominating |= hull
        for y in sorted(hull):
            undominated -= out_ball(g, y, r)

    anchor_set = frozenset(anchors)
    for u in range(g.n):
        if len(out_ball(g, u, r) & anchor_set) > res.guarantee:
            raise InternalInvariantError(
                "a vertex r-dominates more anchors than the order guarantee"
            )

    tree = independence_tree(g, anchors, r)
    chain = max_left_chain(tree)
    if len(chain) >= k + 1:
        witness = tuple(chain[: k + 1])
        if not verify_scattered(g, witness, r) or not set(witness) <= target_set:
            raise InternalInvariantError("scattered witness failed validation")
        return DualityResult(
            kind="scattered", dominating=None, scattered=witness,
            order=res.order, guarantee=res.guarantee,
            anchors=tuple(anchors), tree=tree,
        )
    dom = frozenset(dominating)
    if not verify_dominating(g, dom, r, target_set):
        raise InternalInvariantError("greedy dominator failed validation")
    return DualityResult(
        kind="dominating", dominating=dom, scattered=None,
        order=res.order, guarantee=res.guarantee,
        anchors=tuple(anchors), tree=tree,
    )


# ---------------------------------------------------------------------------
# core reduction


def complexity_threshold(r: int, k: int, c: int) -> Callable[[int], int]:
    """The scattered-set threshold q(x) = (k+1) * ((r+2) c x)^c."""

    def q(x: int) -> int:
        return (k + 1) * ((r + 2) * c * x) ** c

    return q


def default_core_threshold(g: Digraph, r: int, k: int, c: int) -> int:
    """Size below which a target set is accepted as a core outright."""
    xi = max(1, math.ceil(2 * grad_lower_bound(g)))
    q = complexity_threshold(r, k, c)
    return q(((r - 1) * xi + 1) * c * k) * (k + 2)


@dataclass(frozen=True)
class ReduceOutcome:
    """One step of core reduction.

    kind is "no-instance" (with a scattered witness), "small" (the set
    already passes the size threshold), or "removable" (z can be dropped
    while keeping the core property).
    """

    kind: str
    removable: Optional[int] = None
    scattered_witness: Optional[tuple] = None


def reduce_core(g: Digraph, core, r: int, k: int,
                q_fn: Optional[Callable[[int], int]] = None,
                small_threshold: Optional[int] = None) -> ReduceOutcome:
    """Either refute k-domination, accept the core as small, or find a
    removable core vertex.

    Phase 1 alternates weak-reachability hulls with dominator-or-
    scattered calls on the stripped graph until a scattered set beats the
    complexity threshold; phase 2 buckets that set by distance profiles
    towards the hull and picks a crowded bucket.  Both thresholds accept
    overrides for testing; the defaults are the certified ones.
    """
    targets = frozenset(core)
    first = dominator_or_scattered(g, targets, r, k)
    if first.kind == "scattered":
        return ReduceOutcome(kind="no-instance", scattered_witness=first.scattered)
    c = first.guarantee
    if small_threshold is None:
        small_threshold = default_core_threshold(g, r, k, c)
    if len(targets) <= small_threshold:
        return ReduceOutcome(kind="small")
    if q_fn is None:
        q_fn = complexity_threshold(r, k, c)

    hull_sets = wreach_all(g, first.order, r)
    current = frozenset(first.dominating)
    hull: frozenset = frozenset()
    scattered: Optional[tuple] = None
    for _ in range(c):
        hull = frozenset().union(*(hull_sets[y] for y in sorted(current))) if current else frozenset()
        stripped = remove_vertices(g, hull)
        q_i = q_fn(len(hull))
        step = dominator_or_scattered(stripped, targets - hull, r, q_i)
        if step.kind == "scattered":
            scattered = step.scattered
            break
        current = hull | step.dominating
    if scattered is None:
        raise InternalInvariantError(
            "core reduction exceeded its iteration bound without a scattered set"
        )

    anchors = sorted(hull)
    buckets: dict[tuple, list[int]] = {}
    for w in scattered:
        buckets.setdefault(distance_vector(g, w, anchors, r), []).append(w)
    crowded = [members for members in buckets.values() if len(members) > k + 1]
    if not crowded:
        raise InternalInvariantError(
            "no distance-profile class exceeded k+1 despite the threshold"
        )
    crowded.sort(key=lambda ms: (-len(ms), min(ms)))
    return ReduceOutcome(kind="removable", removable=min(crowded[0]))


@dataclass(frozen=True)
class CoreResult:
    """Domination core outcome: the core with its removal audit, or a
    refutation witness.  ``iterations`` counts reduction rounds."""

    kind: str  # "core" | "no-instance"
    core: Optional[frozenset] = None
    removed: tuple = ()
    scattered_witness: Optional[tuple] = None
    iterations: int = 0


def domination_core(g: Digraph, r: int, k: int,
                    q_fn: Optional[Callable[[int], int]] = None,
                    small_threshold: Optional[int] = None) -> CoreResult:
    """Shrink V(G) to a domination core by repeated single removals."""
    core = frozenset(range(g.n))
    removed: list[int] = []
    rounds = 0
    while True:
        rounds += 1
        outcome = reduce_core(
            g, core, r, k, q_fn=q_fn, small_threshold=small_threshold
        )
        if outcome.kind == "no-instance":
            return CoreResult(
                kind="no-instance",
                removed=tuple(removed),
                scattered_witness=outcome.scattered_witness,
                iterations=rounds,
            )
        if outcome.kind == "small":
            return CoreResult(
                kind="core", core=core, removed=tuple(removed), iterations=rounds
            )
        core = core - {outcome.removable}
        removed.append(outcome.removable)


# ---------------------------------------------------------------------------
# kernelization


@dataclass(frozen=True)
class KernelResult:
    """Standard-form kernel instance plus its audit trail.

    The kernel decides "k+1 vertices dominate everything in ``graph``"
    if and only if the original instance could be dominated by k.  When
    the original is already refuted the kernel is a fixed trivially
    infeasible instance.
    """

    graph: Digraph
    budget: int
    infeasible: bool
    core_size: int
    removed: tuple
    representatives: tuple
    core: frozenset = frozenset()
    iterations: int = 0
    threshold: int = 0


def kernelize(g: Digraph, r: int, k: int,
              q_fn: Optional[Callable[[int], int]] = None,
              small_threshold: Optional[int] = None) -> KernelResult:
    """Produce an equivalent standard-form distance-r domination instance.

    Vertices outside the core collapse to one representative per
    coverage class (equal r-out-neighborhood traces on the core); two
    fresh vertices and length-r paths translate the annotated instance
    back to plain distance-r domination at budget k+1.
    """
    if r < 1:
        raise ValueError("radius must be at least 1")
    if k < 0:
        raise ValueError("budget must be nonnegative")
    if small_threshold is None and g.n:
        c = compute_wcol_order(g, 2 * r).guarantee
        small_threshold = default_core_threshold(g, r, k, c)
    result = domination_core(g, r, k, q_fn=q_fn, small_threshold=small_threshold)
    if result.kind == "no-instance":
        return KernelResult(
            graph=Digraph(k + 2),
            budget=k + 1,
            infeasible=True,
            core_size=0,
            removed=result.removed,
            representatives=(),
            iterations=result.iterations,
            threshold=small_threshold or 0,
        )
    core = result.core
    classes: dict[frozenset, int] = {}
    for v in range(g.n):
        if v in core:
            continue
        trace = frozenset(out_ball(g, v, r) & core)
        if trace not in classes or v < classes[trace]:
            classes[trace] = v
    reps = tuple(sorted(classes.values()))
    keep = sorted(core | set(reps))
    sub, old_of = induced_subgraph(g, keep)
    new_of = {old: new for new, old in enumerate(old_of)}
    core_new = {new_of[v] for v in core}

    arcs = set(sub.arcs())
    w, w_prime = sub.n, sub.n + 1
    next_free = sub.n + 2

    def add_path(frm: int, to: int):
        nonlocal next_free
        prev = frm
        for _ in range(r - 1):
            arcs.add((prev, next_free))
            prev = next_free
            next_free += 1
        arcs.add((prev, to))

    add_path(w, w_prime)
    for v in range(sub.n):
        if v not in core_new:
            add_path(w, v)
    kernel_graph = Digraph(next_free, arcs)
    return KernelResult(
        graph=kernel_graph,
        budget=k + 1,
        infeasible=False,
        core_size=len(core),
        removed=result.removed,
        representatives=reps,
        core=frozenset(core),
        iterations=result.iterations,
        threshold=small_threshold or 0,
    )
