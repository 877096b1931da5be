"""Generators: counts, arc structure, determinism."""
import pytest

from sparsedigraph import (
    InstanceRecipe,
    apex_crown,
    bidirected_clique,
    crown,
    crown_subdivision_vertex,
    directed_path,
    random_digraph,
)


def longest_directed_path_order(g):
    """Number of vertices on a longest directed path, by exhaustive DFS."""
    best = 0

    def extend(v, visited):
        nonlocal best
        best = max(best, len(visited))
        for w in g.out_neighbors(v):
            if w not in visited:
                extend(w, visited | {w})

    for v in range(g.n):
        extend(v, {v})
    return best


def test_path_counts():
    assert directed_path(1).m == 0
    assert set(directed_path(3).arcs()) == {(0, 1), (1, 2)}
    with pytest.raises(ValueError):
        directed_path(0)


def test_path_is_a_path():
    assert longest_directed_path_order(directed_path(8)) == 8


def test_crown_counts():
    g2 = crown(2)
    assert (g2.n, g2.m) == (3, 2)
    g3 = crown(3)
    assert (g3.n, g3.m) == (6, 6)
    with pytest.raises(ValueError):
        crown(1)


def test_crown_degrees():
    g = crown(4)
    for v in range(4):
        assert len(g.in_neighbors(v)) == 3
        assert len(g.out_neighbors(v)) == 0
    for w in range(4, g.n):
        assert len(g.out_neighbors(w)) == 2
        assert len(g.in_neighbors(w)) == 0


def test_crown_has_no_two_arc_path():
    g = crown(5)
    assert longest_directed_path_order(g) == 2


def test_crown_subdivision_indexing():
    q = 5
    g = crown(q)
    for i in range(q):
        for j in range(i + 1, q):
            w = crown_subdivision_vertex(q, i, j)
            assert set(g.out_neighbors(w)) == {i, j}


def test_apex_crown_counts():
    g = apex_crown(4)
    assert (g.n, g.m) == (11, 18)
    apex = g.n - 1
    assert set(g.out_neighbors(apex)) == set(range(4, 10))
    with pytest.raises(ValueError):
        apex_crown(1)


def test_random_digraph_edge_cases():
    assert random_digraph(5, 0, seed=1).m == 0
    g = random_digraph(3, 6, seed=9)
    assert set(g.arcs()) == {(u, v) for u in range(3) for v in range(3) if u != v}
    with pytest.raises(ValueError):
        random_digraph(3, 7, seed=0)


def test_random_digraph_deterministic():
    a = random_digraph(10, 20, seed=123)
    b = random_digraph(10, 20, seed=123)
    assert a == b
    assert a != random_digraph(10, 20, seed=124)


def test_recipe_roundtrip():
    assert InstanceRecipe("path", 4).build() == directed_path(4)
    assert InstanceRecipe("bidirected-clique", 3).build() == bidirected_clique(3)
    r = InstanceRecipe("random", 6, arcs=9, seed=4)
    assert r.build() == random_digraph(6, 9, 4)
    assert "seed=4" in r.describe()
    with pytest.raises(ValueError):
        InstanceRecipe("random", 6)
    with pytest.raises(ValueError):
        InstanceRecipe("moebius", 6)
