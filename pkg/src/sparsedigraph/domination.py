"""Distance profiles, neighborhood complexity, distance-r VC dimension,
and the two dominating set approximations.

The red-blue approximation is an iterative-reweighting hitting set
engine: guess the optimum k', sample weighted nets sized from the VC
estimate, and double the weights of any unhit in-neighborhood.  At desk
scale the theoretical net sizes exceed the blue set, so sampling is
capped at |B| draws and a greedy set cover runs alongside; the smaller
valid answer wins.  Every output is validated before it is returned.

The strongly connected variant guesses a center v and a radius k, colors
the strong k-ball of v blue, finds a red-blue dominator inside it, and
stitches the result together with shortest paths through v.
"""
from __future__ import annotations

import bisect
import math
import random
from typing import Iterable, Optional, Sequence

from .coloring import compute_wcol_order
from .digraph import Digraph, in_ball, out_distances, shortest_path
from .errors import InfeasibleError, InternalInvariantError, SizeCapError
from .oracles import verify_dominating, verify_strongly_connected

UNREACHED = None  # distance-vector entry for "further than r"


def distance_vector(g: Digraph, v: int, anchors: Sequence[int], r: int) -> tuple:
    """Distances from each anchor to v, entries beyond r replaced by None."""
    dist = {}
    seen = {v: 0}
    frontier = [v]
    for d in range(1, r + 1):
        nxt = []
        for x in frontier:
            for y in g.in_neighbors(x):
                if y not in seen:
                    seen[y] = d
                    nxt.append(y)
        frontier = nxt
    for a in anchors:
        dist[a] = seen.get(a, UNREACHED)
    return tuple(dist[a] for a in anchors)


def neighborhood_complexity(g: Digraph, subset: Iterable[int], r: int) -> int:
    """Number of distinct traces N_r^-(v) & subset over all vertices."""
    s = frozenset(subset)
    return len({frozenset(in_ball(g, v, r) & s) for v in range(g.n)})


def vc_dimension_distance_r(g: Digraph, r: int,
                            max_n: int = 20) -> tuple[int, frozenset]:
    """Largest set shattered by the r-in-neighborhood family, with witness.

    Level-wise search: a set can only be shattered if all its subsets
    are, so candidates grow one element at a time.
    """
    if g.n > max_n:
        raise SizeCapError(f"vc_dimension_distance_r: n={g.n} exceeds cap {max_n}")
    family = {frozenset(in_ball(g, v, r)) for v in range(g.n)}

    def shattered(x: frozenset) -> bool:
        traces = {f & x for f in family}
        return len(traces) == 1 << len(x)

    best: frozenset = frozenset()
    layer = [frozenset()]
    while layer:
        nxt = []
        for x in layer:
            top = max(x) if x else -1
            for v in range(top + 1, g.n):
                cand = x | {v}
                if shattered(cand):
                    nxt.append(cand)
        if not nxt:
            break
        best = nxt[0]
        layer = nxt
    return len(best), best


# ---------------------------------------------------------------------------
# red-blue approximation


def _greedy_hitting_set(members: list[frozenset], blues: list[int]) -> frozenset:
    """Deterministic greedy set cover over the blue candidates."""
    remaining = list(range(len(members)))
    chosen: set[int] = set()
    while remaining:
        gain = {
            b: sum(1 for i in remaining if b in members[i]) for b in blues
        }
        b = max(blues, key=lambda x: (gain[x], -x))
        if gain[b] == 0:
            raise InfeasibleError("greedy cover stalled: some set has no blue member")
        chosen.add(b)
        remaining = [i for i in remaining if b not in members[i]]
    return frozenset(chosen)


def _weighted_sample(blues: list[int], weights: dict, count: int,
                     rng: random.Random) -> frozenset:
    """``count`` independent draws by inversion over the prefix sums."""
    prefix = []
    total = 0
    for b in blues:
        total += weights[b]
        prefix.append(total)
    picked = set()
    for _ in range(count):
        shot = rng.randrange(total)
        picked.add(blues[bisect.bisect_right(prefix, shot)])
    return frozenset(picked)


def redblue_dominate_approx(g: Digraph, red: Iterable[int], blue: Iterable[int],
                            r: int, seed: int = 0,
                            stats_out: Optional[dict] = None) -> frozenset:
    """Blue set dominating every red vertex within distance r.

    Raises InfeasibleError when even the whole blue set fails.  The size
    is near-optimal in practice: the reweighting engine runs first and a
    greedy cover is kept as both fallback and benchmark.  When a dict is
    passed as ``stats_out`` it receives the final optimum guess and which
    engine produced the answer.
    """
    reds = sorted(set(red))
    blues = sorted(set(blue))
    for v in reds + blues:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    if not reds:
        return frozenset()
    blue_set = frozenset(blues)
    members = []
    for v in reds:
        trace = frozenset(in_ball(g, v, r) & blue_set)
        if not trace:
            raise InfeasibleError(f"red vertex {v} is not blue-dominated at radius {r}")
        members.append(trace)
    members = sorted(set(members), key=sorted)

    greedy = _greedy_hitting_set(members, blues)

    # VC estimate for the net size: certified order bound, exact when cheap
    res = compute_wcol_order(g, r)
    delta = (r + 2) * (2 * res.guarantee) ** 2
    if g.n <= 20:
        delta = min(delta, max(1, vc_dimension_distance_r(g, r)[0]))
    delta = max(1, delta)

    rng = random.Random(seed)
    candidate: Optional[frozenset] = None
    k_guess = 1
    while k_guess <= len(blues):
        weights = {b: 1 for b in blues}
        eps = 1.0 / (2 * k_guess)
        net_size = math.ceil((8 * delta / eps) * math.log(8 * delta / eps))
        net_size = min(net_size, len(blues))  # desk-scale cap
        rounds = math.ceil(4 * k_guess * math.log2(g.n / k_guess + 2))
        for _ in range(rounds):
            net = _weighted_sample(blues, weights, net_size, rng)
            unhit = next((m for m in members if not (m & net)), None)
            if unhit is None:
                candidate = net
                break
            for b in unhit:
                weights[b] *= 2
        if candidate is not None:
            break
        k_guess *= 2

    result = greedy if candidate is None or len(greedy) <= len(candidate) else candidate
    if not verify_dominating(g, result, r, reds) or not result <= blue_set:
        raise InternalInvariantError("red-blue approximation produced an invalid set")
    if stats_out is not None:
        stats_out["k_guess"] = k_guess if candidate is not None else None
        stats_out["engine"] = "greedy" if result is greedy else "net"
    return result


# ---------------------------------------------------------------------------
# strongly connected distance-r dominating sets


def scds_approx(g: Digraph, r: int, seed: int = 0,
                stats_out: Optional[dict] = None) -> frozenset:
    """Strongly connected set dominating every vertex within distance r.

    Tries radii k = 1, 2, ... and every center; the best (smallest)
    validated answer at the first feasible radius is returned.
    """
    if g.n == 0:
        return frozenset()
    if not verify_strongly_connected(g, range(g.n)):
        raise InfeasibleError("graph is not strongly connected")

    dist_from = [out_distances(g, v) for v in range(g.n)]

    best: Optional[frozenset] = None
    best_center = None
    for k in range(1, g.n + 1):
        for center in range(g.n):
            ball = frozenset(
                u for u in range(g.n)
                if dist_from[center].get(u, g.n + 1) <= k
                and dist_from[u].get(center, g.n + 1) <= k
            )
            try:
                core = redblue_dominate_approx(
                    g, range(g.n), ball, r,
                    seed=seed * 1_000_003 + k * 1009 + center,
                )
            except InfeasibleError:
                continue
            stitched = set(core) | {center}
            for w in sorted(core):
                for path in (shortest_path(g, center, w), shortest_path(g, w, center)):
                    stitched.update(path)
            result = frozenset(stitched)
            if not verify_dominating(g, result, r):
                raise InternalInvariantError("stitched dominator lost coverage")
            if not verify_strongly_connected(g, result):
                raise InternalInvariantError("stitched dominator is not strongly connected")
            if best is None or len(result) < len(best):
                best = result
                best_center = center
        if best is not None:
            if stats_out is not None:
                stats_out["k_guess"] = k
                stats_out["center"] = best_center
            return best
    raise InternalInvariantError("no radius produced a feasible ball")
