import random

import networkx as nx
import pytest
from hypothesis import given

from esegraphs.graph_core import (
    Bipartition,
    Graph,
    GraphError,
    bipartition,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
)
from esegraphs.matching import (
    Matching,
    MatchingError,
    OracleGuardError,
    enumerate_maximal_matchings,
    extend_to_maximal,
    has_perfect_matching,
    is_maximal,
    is_randomly_matchable,
    matching_number,
    maximal_matching_sizes,
    maximum_matching,
    maximum_matching_bipartite,
    nu_without,
    two_maximal_matchings_of_different_size,
)
from oracles import brute_maximal_matchings, dp_matching_number, graphs, random_bipartite, to_nx


@given(graphs(0, 12))
def test_blossom_equals_subset_dp(g):
    m = maximum_matching(g)
    Matching.of(g, m.edges)  # a real matching of g
    assert len(m) == dp_matching_number(g) == matching_number(g)


@given(graphs(0, 11))
def test_blossom_equals_networkx(g):
    assert matching_number(g) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


def test_named_matching_numbers():
    assert matching_number(petersen_graph()) == 5
    assert matching_number(cycle_graph(7)) == 3
    assert has_perfect_matching(complete_graph(6))
    assert not has_perfect_matching(complete_bipartite_graph(2, 4))
    assert nu_without(path_graph(3), 0b010) == 0


def test_hopcroft_karp_on_random_bipartite():
    rng = random.Random(3)
    for _ in range(500):
        a, b = rng.randint(0, 7), rng.randint(0, 7)
        g = random_bipartite(rng, a, b)
        parts = Bipartition(frozenset(range(a)), frozenset(range(a, a + b)))
        m = maximum_matching_bipartite(g, parts)
        Matching.of(g, m.edges)
        assert len(m) == matching_number(g)


def test_bipartite_engine_restrict_and_errors():
    g = complete_bipartite_graph(3, 3)
    parts = bipartition(g)
    assert len(maximum_matching_bipartite(g, parts, restrict_to=[0, 1, 3])) == 1
    assert len(maximum_matching_bipartite(g, parts, restrict_to=[0, 1, 3, 4])) == 2
    with pytest.raises(GraphError):
        maximum_matching_bipartite(complete_graph(3), Bipartition(frozenset({0}), frozenset({1, 2})))


def test_matching_validation():
    g = path_graph(4)
    with pytest.raises(MatchingError):
        Matching.of(g, [(0, 2)])
    with pytest.raises(MatchingError):
        Matching.of(g, [(0, 1), (1, 2)])
    with pytest.raises(MatchingError):
        is_maximal(g, [(0, 1), (1, 2)])
    assert is_maximal(g, [(1, 2)])
    assert not is_maximal(g, [(0, 1)])


@given(graphs(0, 8))
def test_enumeration_equals_brute_force(g):
    got = [m.edges for m in enumerate_maximal_matchings(g)]
    assert got == brute_maximal_matchings(g)  # same set, same lexicographic order
    assert all(is_maximal(g, m) for m in got)


def test_known_maximal_matching_counts():
    assert sum(1 for _ in enumerate_maximal_matchings(complete_graph(8))) == 105
    assert maximal_matching_sizes(path_graph(4)) == {1, 2}
    assert maximal_matching_sizes(cycle_graph(5)) == {2}
    # the empty graph has exactly one maximal matching, the empty one
    assert [m.edges for m in enumerate_maximal_matchings(Graph(3, [0, 0, 0]))] == [()]


def test_oracle_guard():
    with pytest.raises(OracleGuardError):
        next(enumerate_maximal_matchings(path_graph(25)))
    assert next(enumerate_maximal_matchings(path_graph(25), guard=None))


@given(graphs(0, 9))
def test_two_maximal_matchings_witness(g):
    pair = two_maximal_matchings_of_different_size(g)
    if pair is None:
        assert len(maximal_matching_sizes(g)) == 1
    else:
        a, b = pair
        assert len(a) < len(b) and is_maximal(g, a) and is_maximal(g, b)


@given(graphs(0, 9))
def test_extend_to_maximal(g):
    edges = g.edges()
    seed = edges[:1]
    m = extend_to_maximal(g, seed)
    assert set(seed) <= set(m.edges) and is_maximal(g, m)


def test_randomly_matchable():
    assert is_randomly_matchable(complete_graph(4))
    assert is_randomly_matchable(complete_bipartite_graph(3, 3))
    assert not is_randomly_matchable(cycle_graph(6))
    assert not is_randomly_matchable(complete_graph(5))
    with pytest.raises(GraphError):
        is_randomly_matchable(disjoint_union(complete_graph(2), complete_graph(2)))
