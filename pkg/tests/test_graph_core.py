import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from esegraphs.graph_core import (
    Bipartition,
    EdgeListError,
    Graph,
    Graph6Error,
    GraphError,
    SizeGuardError,
    articulation_points,
    bipartition,
    canonical_form,
    canonical_labeling,
    complement,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    decode_edge_list,
    decode_graph6,
    diameter,
    disjoint_union,
    empty_graph,
    encode_edge_list,
    encode_graph6,
    find_isomorphism,
    find_odd_cycle,
    induced_subgraph,
    is_bipartite,
    is_complete_bipartite,
    is_connected,
    is_isomorphic,
    is_odd_cycle,
    is_two_connected,
    is_valid_bipartition,
    path_graph,
    permute,
    petersen_graph,
)
from oracles import graphs, to_nx


# ---- construction ---------------------------------------------------------------


def test_graph_rejects_bad_rows():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, [1])  # loop
    with pytest.raises(GraphError):
        Graph(2, [0b100, 0])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_graph_is_immutable_and_hashable():
    g = cycle_graph(5)
    with pytest.raises(AttributeError):
        g.n = 3
    assert g == Graph.from_edges(5, [(4, 0), (0, 1), (1, 2), (2, 3), (3, 4)])
    assert len({g, cycle_graph(5), path_graph(5)}) == 2


def test_remove_vertices_keeps_labels():
    g = complete_graph(4).remove_vertices_mask(0b0010)
    assert g.n == 4 and g.degree(1) == 0 and g.num_edges() == 3


# ---- graph6 -------------------------------------------------------------------------


@pytest.mark.parametrize("g, word", [
    (complete_graph(3), "Bw"),
    (complete_graph(1), "@"),
    (empty_graph(0), "?"),
    (path_graph(3), "Bg"),
])
def test_graph6_known_words(g, word):
    assert encode_graph6(g) == word
    assert decode_graph6(word) == g


@given(graphs(0, 12))
def test_graph6_matches_networkx(g):
    word = encode_graph6(g)
    assert word == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert decode_graph6(word) == g


def test_graph6_large_header_round_trip():
    g = cycle_graph(70)
    word = encode_graph6(g)
    assert word[0] == "~"
    assert decode_graph6(word) == g
    assert decode_graph6(">>graph6<<" + word) == g


@pytest.mark.parametrize("word, offset", [
    ("B ", 1),     # character below 63
    ("Bx", 1),     # nonzero padding bits
    ("Bww", 2),    # trailing data
    ("B", 1),      # truncated body
    ("~??B", 0),   # non-minimal size header
])
def test_graph6_errors_report_offset(word, offset):
    with pytest.raises(Graph6Error) as info:
        decode_graph6(word)
    assert info.value.offset == offset


# ---- edge lists -----------------------------------------------------------------------


def test_edge_list_round_trip_and_isolated_vertices():
    g = Graph.from_edges(6, [(0, 1), (2, 3)])
    assert decode_edge_list(encode_edge_list(g)) == g
    assert decode_edge_list("# comment\n0 1\n\n1 2  # tail\n") == path_graph(3)


@pytest.mark.parametrize("text, line", [
    ("0 1\n1 1\n", 2),
    ("n 3\n0 1\n0 3\n", 3),
    ("0 1\nx y\n", 2),
    ("0 1\nn 4\n", 2),
    ("0 1 2\n", 1),
])
def test_edge_list_errors_name_the_line(text, line):
    with pytest.raises(EdgeListError) as info:
        decode_edge_list(text)
    assert info.value.line == line


# ---- structure ------------------------------------------------------------------------------


@given(graphs(0, 10))
def test_structure_agrees_with_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == (g.n <= 1 or nx.is_connected(h))
    assert sorted(map(sorted, connected_components(g))) == sorted(sorted(c) for c in nx.connected_components(h))
    assert is_bipartite(g) == nx.is_bipartite(h)
    assert articulation_points(g) == set(nx.articulation_points(h))
    if g.n >= 1 and nx.is_connected(h):
        assert diameter(g) == nx.diameter(h)
    if g.n >= 3:
        assert is_two_connected(g) == nx.is_biconnected(h)
    assert complement(complement(g)) == g


@given(graphs(1, 10))
def test_bipartition_and_odd_cycle_certificates(g):
    parts = bipartition(g)
    if parts is None:
        cyc = find_odd_cycle(g)
        assert cyc is not None and is_odd_cycle(g, cyc)
    else:
        assert is_valid_bipartition(g, parts)
        assert find_odd_cycle(g) is None


def test_bipartition_orientation():
    parts = bipartition(complete_bipartite_graph(2, 3))
    assert parts == Bipartition(frozenset({0, 1}), frozenset({2, 3, 4}))
    assert is_complete_bipartite(complete_bipartite_graph(3, 4))
    assert not is_complete_bipartite(cycle_graph(6))


def test_induced_subgraph_index():
    h, index = induced_subgraph(cycle_graph(6), [5, 0, 1])
    assert index == [0, 1, 5]
    assert sorted(h.edges()) == [(0, 1), (0, 2)]


# ---- canonical forms ----------------------------------------------------------------------------


@given(graphs(0, 9), st.randoms(use_true_random=False))
def test_canonical_form_is_relabelling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(permute(g, perm)) == canonical_form(g)


@given(graphs(1, 7), graphs(1, 7))
def test_canonical_form_separates_like_vf2(g, h):
    same = g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h))
    assert (canonical_form(g) == canonical_form(h)) == same
    assert is_isomorphic(g, h) == same


def test_canonical_form_is_graph6_of_the_labelling():
    # order[position] = vertex; the word encodes g relabelled by position
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 10)
        g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4])
        lab = canonical_labeling(g)
        assert sorted(lab) == list(range(n))
        perm = [0] * n
        for pos, v in enumerate(lab):
            perm[v] = pos
        assert decode_graph6(canonical_form(g)) == permute(g, perm)


@given(graphs(1, 8), st.randoms(use_true_random=False))
def test_find_isomorphism_maps_edges(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = permute(g, perm)
    phi = find_isomorphism(g, h)
    assert all(g.has_edge(u, v) == h.has_edge(phi[u], phi[v]) for u in range(g.n) for v in range(g.n))


def test_find_isomorphism_none_for_non_isomorphic():
    assert find_isomorphism(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))) is None


def test_symmetric_graphs_canonise_quickly():
    for g in (empty_graph(10), complete_graph(10), petersen_graph(),
              disjoint_union(*[complete_graph(2)] * 5)):
        assert decode_graph6(canonical_form(g)).num_edges() == g.num_edges()


def test_canonizer_guard():
    with pytest.raises(SizeGuardError):
        canonical_form(cycle_graph(11))
    assert canonical_form(cycle_graph(11), guard=11)


@given(graphs(0, 9))
def test_pickle_round_trip(g):
    import pickle

    h = pickle.loads(pickle.dumps(g))
    assert h == g and h.edges() == g.edges()
