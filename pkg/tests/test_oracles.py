"""The brute-force oracles themselves, pinned on hand-checkable instances."""
from itertools import combinations

import pytest

from sparsedigraph import Digraph, DstInstance, apex_crown, directed_path, random_digraph
from sparsedigraph.errors import SizeCapError
from sparsedigraph.digraph import out_ball
from sparsedigraph.oracles import (
    alpha_r_exact,
    dst_exact_enum,
    gamma_r_exact,
    redblue_exact_enum,
    scss_exact_enum,
    verify_dominating,
    verify_scattered,
    verify_strongly_connected,
)


def gamma_by_flat_enumeration(g, r, targets=None):
    """Size-ascending subset scan; the slowest possible ground truth."""
    tgt = set(range(g.n) if targets is None else targets)
    for size in range(g.n + 1):
        for d in combinations(range(g.n), size):
            covered = set()
            for v in d:
                covered |= out_ball(g, v, r)
            if tgt <= covered:
                return size
    raise AssertionError("unreachable")


def test_gamma_edgeless():
    g = Digraph(4)
    size, witness = gamma_r_exact(g, 1)
    assert size == 4 and witness == frozenset(range(4))


def test_gamma_bidirected_star():
    arcs = [(0, i) for i in range(1, 5)] + [(i, 0) for i in range(1, 5)]
    g = Digraph(5, arcs)
    size, witness = gamma_r_exact(g, 1)
    assert size == 1
    assert verify_dominating(g, witness, 1)


def test_gamma_matches_flat_enumeration():
    for seed in range(4):
        g = random_digraph(7, 14, seed)
        for r in (1, 2):
            size, witness = gamma_r_exact(g, r)
            assert size == gamma_by_flat_enumeration(g, r)
            assert verify_dominating(g, witness, r)


def test_gamma_setwise():
    g = directed_path(5)
    size, witness = gamma_r_exact(g, 1, targets=[4])
    assert size == 1 and witness <= {3, 4}


def test_gamma_apex_crown_family():
    # minimum distance-1 dominators: ceil(n/2) subdivision vertices + apex
    for n in range(4, 9):
        g = apex_crown(n)
        size, witness = gamma_r_exact(g, 1, max_n=100)
        assert size == n // 2 + (n % 2) + 1
        assert verify_dominating(g, witness, 1)


def test_alpha_edgeless():
    g = Digraph(4)
    size, witness = alpha_r_exact(g, 1)
    assert size == 4 and witness == frozenset(range(4))


def test_alpha_apex_crown_family():
    for n in range(4, 9):
        size, witness = alpha_r_exact(apex_crown(n), 1, max_n=100)
        assert size == 2
        assert verify_scattered(apex_crown(n), witness, 1)


def test_alpha_never_exceeds_gamma():
    for seed in range(5):
        g = random_digraph(8, 18, seed)
        for r in (1, 2):
            a, _ = alpha_r_exact(g, r)
            c, _ = gamma_r_exact(g, r)
            assert a <= c


def test_caps_raise():
    g = random_digraph(20, 40, seed=0)
    with pytest.raises(SizeCapError):
        gamma_r_exact(g, 1)
    with pytest.raises(SizeCapError):
        alpha_r_exact(g, 1)
    assert gamma_r_exact(g, 1, max_n=25)[0] >= 1


def test_validators_trivial_cases():
    g = directed_path(4)
    assert verify_dominating(g, range(4), 2)
    assert verify_scattered(g, [2], 5)
    assert verify_strongly_connected(g, [])
    assert verify_strongly_connected(g, [1])
    assert not verify_strongly_connected(g, [0, 1])
    two_cycle = Digraph(3, [(0, 1), (1, 0)])
    assert verify_strongly_connected(two_cycle, [0, 1])


def test_dst_enum_k0_and_infeasible():
    g = directed_path(3)
    inst = DstInstance(g, 0, frozenset({1, 2}), 0)
    assert dst_exact_enum(inst) == frozenset()
    # terminal 2 has no in-arcs at all
    g2 = Digraph(3, [(0, 1)])
    assert dst_exact_enum(DstInstance(g2, 0, frozenset({2}), 2)) is None


def test_dst_enum_needs_connector():
    g = Digraph(3, [(0, 1), (1, 2)])
    inst = DstInstance(g, 0, frozenset({2}), 1)
    assert dst_exact_enum(inst) == frozenset({1})


def test_scss_enum_star():
    # bidirected star, center 0, terminals are the leaves
    arcs = [(0, i) for i in range(1, 4)] + [(i, 0) for i in range(1, 4)]
    g = Digraph(4, arcs)
    assert scss_exact_enum(g, [1, 2, 3], 1) == frozenset({0})


def test_redblue_enum():
    g = directed_path(4)
    # at r = 2 blue vertex 1 covers {1, 2, 3} on its own
    assert redblue_exact_enum(g, red=[1, 2, 3], blue=[0, 1], r=2) == frozenset({1})
    # at r = 1 covering both 0 and 2 takes both blues
    assert redblue_exact_enum(g, red=[0, 2], blue=[0, 1], r=1) == frozenset({0, 1})
    assert redblue_exact_enum(g, red=[], blue=[0], r=1) == frozenset()
    assert redblue_exact_enum(g, red=[0], blue=[3], r=1) is None
