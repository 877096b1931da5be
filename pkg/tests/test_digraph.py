"""Core digraph representation, balls, SCCs, contraction, degeneracy."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sparsedigraph import (
    Digraph,
    LinearOrder,
    contract,
    crown,
    degeneracy,
    bidirected_clique,
    directed_path,
    format_digraph,
    in_ball,
    out_ball,
    parse_digraph,
    random_digraph,
    scc,
)
from sparsedigraph.digraph import induced_subgraph, remove_vertices


# ---------------------------------------------------------------------------
# independent oracles


def reach_by_matrix_powers(g, v, r):
    """Reachability within r steps via boolean adjacency powers."""
    n = g.n
    adj = [[g.has_arc(i, j) for j in range(n)] for i in range(n)]
    reach = [i == v for i in range(n)]
    for _ in range(r):
        nxt = reach[:]
        for i in range(n):
            if reach[i]:
                for j in range(n):
                    if adj[i][j]:
                        nxt[j] = True
        reach = nxt
    return frozenset(i for i in range(n) if reach[i])


def has_directed_cycle(g):
    colors = [0] * g.n

    def visit(v):
        colors[v] = 1
        for w in g.out_neighbors(v):
            if colors[w] == 1:
                return True
            if colors[w] == 0 and visit(w):
                return True
        colors[v] = 2
        return False

    return any(colors[v] == 0 and visit(v) for v in range(g.n))


# ---------------------------------------------------------------------------
# construction


def test_rejects_self_loop_duplicate_and_range():
    with pytest.raises(ValueError):
        Digraph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Digraph(3, [(0, 1), (0, 1)])
    with pytest.raises(ValueError):
        Digraph(2, [(0, 2)])


def test_antiparallel_pairs_are_two_arcs():
    g = Digraph(2, [(0, 1), (1, 0)])
    assert g.m == 2
    assert g.underlying_edges() == [(0, 1)]


def test_linear_order_roundtrip():
    order = LinearOrder([2, 0, 1])
    assert order.position(2) == 0
    assert list(order) == [2, 0, 1]
    with pytest.raises(ValueError):
        LinearOrder([0, 0, 1])


# ---------------------------------------------------------------------------
# balls


def test_out_ball_singleton():
    g = Digraph(1)
    assert out_ball(g, 0, 5) == {0}


def test_out_ball_path():
    g = directed_path(3)
    assert out_ball(g, 0, 1) == {0, 1}
    assert out_ball(g, 0, 2) == {0, 1, 2}
    assert in_ball(g, 2, 2) == {0, 1, 2}


def test_in_ball_crown_principal():
    g = crown(3)
    # principal 0 is hit by the subdivision vertices of pairs (0,1), (0,2)
    assert in_ball(g, 0, 1) == {0, 3, 4}


def test_out_ball_matches_matrix_oracle():
    g = random_digraph(8, 18, seed=7)
    for v in range(g.n):
        assert out_ball(g, v, 3) == reach_by_matrix_powers(g, v, 3)


def test_in_ball_is_out_ball_of_reverse():
    g = random_digraph(8, 20, seed=11)
    rg = g.reverse()
    for v in range(g.n):
        for r in range(4):
            assert in_ball(g, v, r) == out_ball(rg, v, r)


@given(st.integers(0, 400), st.integers(2, 8))
@settings(max_examples=40, deadline=None, derandomize=True)
def test_ball_monotone_and_dual(seed, n):
    m = min(2 * n, n * (n - 1))
    g = random_digraph(n, m, seed)
    for v in range(n):
        prev = frozenset([v])
        for r in range(4):
            ball = out_ball(g, v, r)
            assert prev <= ball
            prev = ball
    for u in range(n):
        for v in range(n):
            assert (u in out_ball(g, v, 2)) == (v in in_ball(g, u, 2))


def test_ball_argument_errors():
    g = directed_path(3)
    with pytest.raises(ValueError):
        out_ball(g, 5, 1)
    with pytest.raises(ValueError):
        out_ball(g, 0, -1)


# ---------------------------------------------------------------------------
# scc


def test_scc_dag_is_singletons():
    g = Digraph(4, [(0, 1), (1, 2), (0, 3)])
    dec = scc(g)
    assert all(len(c) == 1 for c in dec.components)
    assert dec.diameters == (0, 0, 0, 0)


def test_scc_cycle_diameter():
    g = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    dec = scc(g)
    assert len(dec.components) == 1
    assert dec.diameters == (3,)


def test_scc_matches_mutual_reachability():
    g = random_digraph(10, 25, seed=3)
    dec = scc(g)
    for u in range(g.n):
        for v in range(g.n):
            mutually = v in out_ball(g, u, g.n) and u in out_ball(g, v, g.n)
            assert (dec.component_of[u] == dec.component_of[v]) == (
                mutually or u == v
            )


def test_scc_condensation_acyclic():
    g = random_digraph(10, 30, seed=5)
    dec = scc(g)
    condensed, _ = contract(g, dec.components)
    assert not has_directed_cycle(condensed)


# ---------------------------------------------------------------------------
# contraction


def test_contract_identity_partition():
    g = random_digraph(6, 10, seed=1)
    h, mapping = contract(g, [[v] for v in range(6)])
    assert h.n == g.n
    assert {(mapping[u], mapping[v]) for u, v in g.arcs()} == set(h.arcs())


def test_contract_two_cycle_in_path():
    # c -> a <-> b -> d  collapses to  c -> x -> d
    g = Digraph(4, [(0, 1), (1, 2), (2, 1), (2, 3)])
    h, mapping = contract(g, [[1, 2]])
    assert h.n == 3
    assert set(h.arcs()) == {(mapping[0], mapping[1]), (mapping[1], mapping[3])}


def test_contract_rejects_overlap():
    g = directed_path(4)
    with pytest.raises(ValueError):
        contract(g, [[0, 1], [1, 2]])


def test_contract_lifts_arcs():
    g = random_digraph(9, 20, seed=9)
    blocks = [[0, 1, 2], [3, 4]]
    h, mapping = contract(g, blocks)
    for a, b in h.arcs():
        assert any(
            mapping[u] == a and mapping[v] == b for u, v in g.arcs()
        )


# ---------------------------------------------------------------------------
# degeneracy


def naive_peel(g):
    """Reference peel: recompute degrees from scratch every round."""
    alive = set(range(g.n))
    worst = 0
    while alive:
        v = min(alive, key=lambda x: (sum(1 for u in g.underlying_neighbors(x) if u in alive), x))
        worst = max(worst, sum(1 for u in g.underlying_neighbors(v) if u in alive))
        alive.remove(v)
    return worst


def test_degeneracy_edgeless():
    d, order, orientation = degeneracy(Digraph(5))
    assert d == 0 and orientation == []
    assert len(order) == 5


def test_degeneracy_crown():
    for q in range(3, 7):
        d, _, orientation = degeneracy(crown(q))
        assert d == 2
        assert d == naive_peel(crown(q))
    # order-2 crown is just a path, degeneracy 1
    assert degeneracy(crown(2))[0] == 1


def test_degeneracy_bidirected_k4():
    d, _, _ = degeneracy(bidirected_clique(4))
    assert d == 3


def test_degeneracy_orientation_outdegree_bound():
    g = random_digraph(12, 30, seed=13)
    d, order, orientation = degeneracy(g)
    assert d == naive_peel(g)
    outdeg = [0] * g.n
    for u, v in orientation:
        outdeg[u] += 1
        assert order.position(v) < order.position(u)
    assert max(outdeg) <= d
    # every vertex has at most d underlying neighbors earlier in the order
    for v in range(g.n):
        earlier = sum(
            1 for u in g.underlying_neighbors(v) if order.position(u) < order.position(v)
        )
        assert earlier <= d


# ---------------------------------------------------------------------------
# surgery helpers


def test_induced_subgraph_mapping():
    g = random_digraph(8, 16, seed=21)
    h, old_of = induced_subgraph(g, [1, 3, 4, 6])
    assert h.n == 4
    for a, b in h.arcs():
        assert g.has_arc(old_of[a], old_of[b])
    kept = set(old_of)
    expected = sum(1 for u, v in g.arcs() if u in kept and v in kept)
    assert h.m == expected


def test_remove_vertices_keeps_indexing():
    g = random_digraph(8, 16, seed=22)
    h = remove_vertices(g, {2, 5})
    assert h.n == g.n
    assert all(2 not in (u, v) and 5 not in (u, v) for u, v in h.arcs())


# ---------------------------------------------------------------------------
# text format


def test_format_parse_roundtrip():
    g = random_digraph(7, 12, seed=2)
    text = format_digraph(g, comments=["hello"])
    assert parse_digraph(text) == g


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_digraph("")
    with pytest.raises(ValueError):
        parse_digraph("graph 3 0\n")
    with pytest.raises(ValueError):
        parse_digraph("digraph 2 1\n0 0\n")
    with pytest.raises(ValueError):
        parse_digraph("digraph 2 2\n0 1\n0 1\n")
    with pytest.raises(ValueError):
        parse_digraph("digraph 2 2\n0 1\n")
