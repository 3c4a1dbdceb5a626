import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cgg.constructions import construct_gnk, construct_gnkl
from cgg.core import Cgg, Edge, Labelling
from cgg.disjoint import (
    edges_disjoint,
    is_ik1_free,
    max_disjoint_bruteforce,
    max_disjoint_set,
    max_disjoint_size,
)

L12 = Labelling(12)


def test_edges_disjoint_examples():
    assert edges_disjoint(L12, Edge(11, 9), Edge(7, 5))
    assert edges_disjoint(L12, Edge(11, 5), Edge(9, 7))
    assert not edges_disjoint(L12, Edge(11, 7), Edge(9, 5))
    assert not edges_disjoint(L12, Edge(11, 7), Edge(7, 5))


def test_edges_disjoint_symmetric_irreflexive():
    lab = Labelling(9, "even")
    es = [Edge(u, v) for u, v in itertools.combinations(lab.labels, 2)]
    for e in es:
        assert not edges_disjoint(lab, e, e)
    for e, f in itertools.combinations(es, 2):
        assert edges_disjoint(lab, e, f) == edges_disjoint(lab, f, e)


def assert_valid_witness(g, w):
    assert w.size == len(w.edges)
    assert set(w.edges) <= g.edges
    for e, f in itertools.combinations(w.edges, 2):
        assert edges_disjoint(g.labelling, e, f)


def test_bruteforce_examples():
    assert max_disjoint_bruteforce(Cgg.complete(6), 10).size == 3
    assert max_disjoint_bruteforce(construct_gnk(12, 3), 5).size == 3
    assert max_disjoint_bruteforce(Cgg.empty(9), 4).size == 0
    capped = max_disjoint_bruteforce(Cgg.complete(10), 2)
    assert capped.size == 2
    assert_valid_witness(Cgg.complete(10), capped)


def test_dp_examples():
    assert max_disjoint_set(Cgg.complete(7)).size == 3
    # expected values from the brute-force oracle
    assert max_disjoint_bruteforce(construct_gnk(10, 2), 6).size == 2
    assert max_disjoint_set(construct_gnk(10, 2)).size == 2
    assert max_disjoint_bruteforce(construct_gnkl(13, 3, 2), 7).size == 3
    assert max_disjoint_set(construct_gnkl(13, 3, 2)).size == 3


def test_ik1_free_examples():
    g = construct_gnk(12, 3)
    assert is_ik1_free(g, 3)
    assert not is_ik1_free(g, 2)
    assert not is_ik1_free(Cgg.complete(8), 3)


@pytest.mark.parametrize("n", range(4, 17))
def test_complete_graph_matching(n):
    w = max_disjoint_set(Cgg.complete(n))
    assert w.size == n // 2
    assert_valid_witness(Cgg.complete(n), w)


def test_witness_is_lexicographically_smallest():
    g = Cgg.complete(6)
    w = max_disjoint_set(g)
    lab = g.labelling
    key = lambda es: sorted(tuple(sorted((lab.index(e.a), lab.index(e.b)))) for e in es)  # noqa: E731
    optimal = [c for c in itertools.combinations(sorted(g.edges), 3)
               if all(edges_disjoint(lab, e, f) for e, f in itertools.combinations(c, 2))]
    assert key(w.edges) == min(key(c) for c in optimal)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_dp_equals_bruteforce_all_subgraphs(n):
    ck = sorted(Cgg.complete(n).edges)
    lab = Labelling(n)
    for mask in range(1 << len(ck)):
        g = Cgg(lab, frozenset(e for i, e in enumerate(ck) if mask >> i & 1))
        assert max_disjoint_set(g).size == max_disjoint_bruteforce(g, n).size


@pytest.mark.slow
@pytest.mark.parametrize("n, max_edges", [(7, 8), (8, 5)])
def test_dp_equals_bruteforce_small_subgraphs(n, max_edges):
    ck = sorted(Cgg.complete(n).edges)
    lab = Labelling(n)
    for size in range(0, max_edges + 1):
        for combo in itertools.combinations(ck, size):
            g = Cgg(lab, frozenset(combo))
            assert max_disjoint_set(g).size == max_disjoint_bruteforce(g, n).size


@pytest.mark.parametrize("n", range(4, 13))
def test_dp_equals_bruteforce_random(n):
    rng = random.Random(n)
    ck = sorted(Cgg.complete(n).edges)
    for _ in range(1000 // 9 + 1):
        p = rng.random()
        g = Cgg(Labelling(n), frozenset(e for e in ck if rng.random() < p))
        w = max_disjoint_set(g)
        assert w.size == max_disjoint_bruteforce(g, n).size
        assert w.size == max_disjoint_size(n, g.index_pairs())
        assert_valid_witness(g, w)


@st.composite
def graphs(draw, max_n=11):
    n = draw(st.integers(4, max_n))
    parity = draw(st.sampled_from(["odd", "even"]))
    ck = sorted(Cgg.complete(n, parity).edges)
    mask = draw(st.lists(st.booleans(), min_size=len(ck), max_size=len(ck)))
    return Cgg(Labelling(n, parity), frozenset(e for e, b in zip(ck, mask) if b))


@settings(max_examples=200, deadline=None)
@given(graphs(), st.data())
def test_adding_an_edge_never_decreases(g, data):
    missing = sorted(Cgg.complete(g.n, g.labelling.parity).edges - g.edges)
    if not missing:
        return
    e = data.draw(st.sampled_from(missing))
    bigger = Cgg(g.labelling, g.edges | {e})
    assert max_disjoint_set(bigger).size >= max_disjoint_set(g).size


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_witness_valid(g):
    assert_valid_witness(g, max_disjoint_set(g))
