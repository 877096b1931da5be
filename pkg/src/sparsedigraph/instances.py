"""Generators for the named graph families and seeded random instances.

Vertex numbering is fixed so expected solutions in tests stay stable:
crowns list the principal vertices first, then the subdivision vertices
in lexicographic (i, j) order; the apex, when present, comes last.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .digraph import Digraph


def directed_path(n: int) -> Digraph:
    """Path 0 -> 1 -> ... -> n-1."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Digraph(n, ((i, i + 1) for i in range(n - 1)))


def crown(q: int) -> Digraph:
    """1-subdivision of a q-clique, all arcs leaving the subdivision vertices.

    Vertices 0..q-1 are the principals; vertex q + rank(i,j) is the
    subdivision vertex of the pair (i, j), i < j.  Total q + q(q-1)/2
    vertices and q(q-1) arcs.
    """
    if q < 2:
        raise ValueError("crown order must be at least 2")
    arcs = []
    idx = q
    for i in range(q):
        for j in range(i + 1, q):
            arcs.append((idx, i))
            arcs.append((idx, j))
            idx += 1
    return Digraph(idx, arcs)


def crown_subdivision_vertex(q: int, i: int, j: int) -> int:
    """Index of the subdivision vertex for the principal pair (i, j)."""
    if not 0 <= i < j < q:
        raise ValueError("need 0 <= i < j < q")
    # pairs before row i, plus offset inside row i
    return q + i * q - i * (i + 1) // 2 + (j - i - 1)


def apex_crown(n: int) -> Digraph:
    """crown(n) plus an apex vertex with an arc to every subdivision vertex.

    The apex gets the last index.  This family separates domination from
    scattering: the minimum distance-1 dominating set has ceil(n/2) + 1
    vertices while no 3 vertices are pairwise 1-scattered.
    """
    if n < 2:
        raise ValueError("apex crown needs order at least 2")
    base = crown(n)
    apex = base.n
    arcs = base.arcs()
    arcs.extend((apex, w) for w in range(n, base.n))
    return Digraph(base.n + 1, arcs)


def bidirected_clique(q: int) -> Digraph:
    """All ordered pairs among q vertices."""
    if q < 1:
        raise ValueError("clique needs at least one vertex")
    return Digraph(q, ((u, v) for u in range(q) for v in range(q) if u != v))


def random_digraph(n: int, m: int, seed: int) -> Digraph:
    """m distinct arcs drawn uniformly without replacement.

    Identical (n, m, seed) always yields the identical graph.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if m > n * (n - 1):
        raise ValueError(f"m={m} exceeds the {n * (n - 1)} possible arcs")
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    rng = random.Random(seed)
    return Digraph(n, rng.sample(pairs, m))


_FAMILIES = ("path", "crown", "apex-crown", "random", "bidirected-clique")


@dataclass(frozen=True)
class InstanceRecipe:
    """A reproducible description of a generated instance."""

    family: str
    size: int
    arcs: Optional[int] = None          # random family only
    seed: Optional[int] = None          # random family only

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.size < 1:
            raise ValueError("size must be positive")
        if self.family == "random":
            if self.seed is None or self.arcs is None:
                raise ValueError("random recipes need arcs and seed")

    def build(self) -> Digraph:
        if self.family == "path":
            return directed_path(self.size)
        if self.family == "crown":
            return crown(self.size)
        if self.family == "apex-crown":
            return apex_crown(self.size)
        if self.family == "bidirected-clique":
            return bidirected_clique(self.size)
        return random_digraph(self.size, self.arcs, self.seed)

    def describe(self) -> str:
        if self.family == "random":
            return f"recipe random n={self.size} m={self.arcs} seed={self.seed}"
        return f"recipe {self.family} {self.size}"
