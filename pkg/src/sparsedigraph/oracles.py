"""Brute-force reference implementations and validators.

Everything here is an independent ground truth for the acceptance tests:
exact minimum dominators, exact maximum scattered sets, exact Steiner
solutions by enumeration, and the direct definition checks used as
postcondition guards by the approximation and FPT solvers.  Nothing in
this module shares code with the algorithms it checks; only the digraph
primitives are used.

The exact searches are branch-and-bound rather than flat subset
enumeration so that structured instances (for example apex crowns with
around 80 vertices) stay within seconds, but they remain exhaustive.
Caps default to desk scale; pass ``max_n`` explicitly to go past them
(slow).
"""
from __future__ import annotations

from math import ceil
from typing import Iterable, Optional

from .digraph import Digraph, in_ball, out_ball
from .errors import SizeCapError
from .steiner_types import DstInstance


def _check_cap(name: str, value: int, cap: int):
    if value > cap:
        raise SizeCapError(f"{name}: size {value} exceeds cap {cap}; pass max_n to override")


def _cover_masks(g: Digraph, r: int, targets: list[int]) -> list[int]:
    """cover_masks[v] = bitmask over ``targets`` of N_r^+(v) intersected."""
    pos = {t: i for i, t in enumerate(targets)}
    masks = []
    for v in range(g.n):
        mask = 0
        for u in out_ball(g, v, r):
            if u in pos:
                mask |= 1 << pos[u]
        masks.append(mask)
    return masks


def gamma_r_exact(g: Digraph, r: int, targets: Optional[Iterable[int]] = None,
                  max_n: int = 16) -> tuple[int, frozenset]:
    """Exact minimum-size D with targets contained in N_r^+(D).

    ``targets`` defaults to the whole vertex set (the classic distance-r
    dominating set).  Returns (size, witness).
    """
    _check_cap("gamma_r_exact", g.n, max_n)
    tgt = sorted(set(range(g.n) if targets is None else targets))
    if not tgt:
        return 0, frozenset()
    masks = _cover_masks(g, r, tgt)
    full = (1 << len(tgt)) - 1
    order = sorted(range(g.n), key=lambda v: (-bin(masks[v]).count("1"), v))

    # greedy upper bound
    best: list[int] = []
    uncovered = full
    while uncovered:
        v = max(range(g.n), key=lambda x: (bin(masks[x] & uncovered).count("1"), -x))
        if masks[v] & uncovered == 0:
            best = list(range(g.n))  # unreachable targets: only D = V can fail too
            break
        best.append(v)
        uncovered &= ~masks[v]
    if uncovered:
        # some target has an empty in-ball intersection with V, impossible
        raise ValueError("target set cannot be dominated at this radius")
    best_set = best

    chosen: list[int] = []

    def rec(uncovered: int):
        nonlocal best_set
        if uncovered == 0:
            if len(chosen) < len(best_set):
                best_set = list(chosen)
            return
        biggest = max(bin(masks[v] & uncovered).count("1") for v in order)
        if biggest == 0:
            return
        lb = len(chosen) + ceil(bin(uncovered).count("1") / biggest)
        if lb >= len(best_set):
            return
        # branch on the hardest uncovered target
        pick, fewest = -1, None
        for i in range(len(tgt)):
            if uncovered >> i & 1:
                cnt = sum(1 for v in order if masks[v] >> i & 1)
                if fewest is None or cnt < fewest:
                    pick, fewest = i, cnt
        coverers = [v for v in order if masks[v] >> pick & 1]
        coverers.sort(key=lambda v: (-bin(masks[v] & uncovered).count("1"), v))
        for v in coverers:
            chosen.append(v)
            rec(uncovered & ~masks[v])
            chosen.pop()

    rec(full)
    return len(best_set), frozenset(best_set)


def alpha_r_exact(g: Digraph, r: int, candidates: Optional[Iterable[int]] = None,
                  max_n: int = 16) -> tuple[int, frozenset]:
    """Exact maximum r-scattered subset of ``candidates`` (default: all).

    A set is r-scattered when no single vertex has two of its members in
    its r-out-ball, i.e. members have pairwise disjoint r-in-balls.
    """
    _check_cap("alpha_r_exact", g.n, max_n)
    cand = sorted(set(range(g.n) if candidates is None else candidates))
    k = len(cand)
    if k == 0:
        return 0, frozenset()
    balls = [in_ball(g, v, r) for v in cand]
    conflict = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if balls[i] & balls[j]:
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i

    best_set: list[int] = []
    chosen: list[int] = []

    def rec(avail: int):
        nonlocal best_set
        if len(chosen) + bin(avail).count("1") <= len(best_set):
            return
        if avail == 0:
            best_set = list(chosen)
            return
        i = (avail & -avail).bit_length() - 1
        chosen.append(i)
        rec(avail & ~(conflict[i] | (1 << i)))
        chosen.pop()
        rec(avail & ~(1 << i))

    rec((1 << k) - 1)
    return len(best_set), frozenset(cand[i] for i in best_set)


# ---------------------------------------------------------------------------
# validators (direct definition checks, no caps)


def verify_dominating(g: Digraph, dominators: Iterable[int], r: int,
                      targets: Optional[Iterable[int]] = None) -> bool:
    """True when every target lies in some dominator's r-out-ball."""
    tgt = set(range(g.n) if targets is None else targets)
    for v in set(dominators):
        tgt -= out_ball(g, v, r)
        if not tgt:
            return True
    return not tgt


def verify_scattered(g: Digraph, vertices: Iterable[int], r: int) -> bool:
    """True when the members have pairwise disjoint r-in-balls."""
    vs = sorted(set(vertices))
    balls = [in_ball(g, v, r) for v in vs]
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if balls[i] & balls[j]:
                return False
    return True


def verify_strongly_connected(g: Digraph, vertices: Iterable[int]) -> bool:
    """True when the induced subgraph on ``vertices`` is strongly connected.

    Empty and singleton sets count as strongly connected.
    """
    vs = frozenset(vertices)
    if len(vs) <= 1:
        return True
    start = min(vs)
    reach_out = out_ball(g, start, g.n, within=vs)
    reach_in = in_ball(g, start, g.n, within=vs)
    return reach_out == vs and reach_in == vs


def dst_valid(g: Digraph, root: int, terminals: frozenset, solution: Iterable[int]) -> bool:
    """True when root reaches every terminal inside G[{root} | T | S]."""
    allowed = frozenset(solution) | terminals | {root}
    return terminals <= out_ball(g, root, g.n, within=allowed)


# ---------------------------------------------------------------------------
# enumeration oracles


def _subsets_ascending(pool: list[int], max_size: int):
    from itertools import combinations

    for size in range(max_size + 1):
        yield from combinations(pool, size)


def dst_exact_enum(inst: DstInstance, max_n: int = 12, max_k: int = 4) -> Optional[frozenset]:
    """Minimum Steiner solution by enumerating S in increasing size.

    Returns the lexicographically first minimum set of non-terminals, or
    None when no solution of size <= k exists.
    """
    g = inst.graph
    _check_cap("dst_exact_enum", g.n, max_n)
    if inst.budget > max_k:
        raise SizeCapError(f"dst_exact_enum: budget {inst.budget} exceeds cap {max_k}")
    pool = [v for v in range(g.n)
            if v != inst.root and v not in inst.terminals]
    for s in _subsets_ascending(pool, inst.budget):
        if dst_valid(g, inst.root, inst.terminals, s):
            return frozenset(s)
    return None


def scss_exact_enum(g: Digraph, terminals: Iterable[int], budget: int,
                    max_n: int = 12) -> Optional[frozenset]:
    """Minimum S with G[T | S] strongly connected, by enumeration."""
    _check_cap("scss_exact_enum", g.n, max_n)
    term = frozenset(terminals)
    pool = [v for v in range(g.n) if v not in term]
    for s in _subsets_ascending(pool, min(budget, len(pool))):
        if verify_strongly_connected(g, term | set(s)):
            return frozenset(s)
    return None


def redblue_exact_enum(g: Digraph, red: Iterable[int], blue: Iterable[int], r: int,
                       max_k: int = 4) -> Optional[frozenset]:
    """Minimum D inside blue with red contained in N_r^+(D), by enumeration."""
    reds = sorted(set(red))
    blues = sorted(set(blue))
    if not reds:
        return frozenset()
    masks = _cover_masks(g, r, reds)
    full = (1 << len(reds)) - 1
    for s in _subsets_ascending(blues, min(max_k, len(blues))):
        acc = 0
        for v in s:
            acc |= masks[v]
        if acc == full:
            return frozenset(s)
    return None
