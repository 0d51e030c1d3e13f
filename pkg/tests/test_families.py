import networkx as nx
import pytest
from hypothesis import given, strategies as st

from esegraphs.equimatch import is_ese, is_ese_oracle, verify_certificate
from esegraphs.families import (
    CATALOG_NAMES,
    FamilyParameterError,
    G2Shape,
    all_fc_ese_constructions,
    fig_degree3_example,
    gen_bipartite_ese,
    gen_g1,
    gen_g2,
    small_catalog,
)
from esegraphs.graph_core import bipartition, canonical_form, is_connected
from esegraphs.matching import matching_number
from oracles import to_nx


def test_g1_shape():
    g = gen_g1(3, 2)
    assert g.n == 7 and g.num_edges() == 21 - 2
    assert not g.has_edge(0, 1) and not g.has_edge(2, 3) and g.has_edge(4, 5)


def test_g2_shape_and_numbering():
    g = gen_g2(3, G2Shape.star(2))
    S = [0, 1, 2]
    rest = [3, 4, 5, 6]
    assert all(not g.has_edge(a, b) for a in S for b in S)
    assert all(g.has_edge(s, x) for s in S for x in rest)
    sub = g.remove_vertices_mask(0b111)
    assert sorted(sub.edges()) == [(3, 4), (3, 5)]
    t = gen_g2(3, G2Shape.triangle())
    assert sorted(t.remove_vertices_mask(0b111).edges()) == [(3, 4), (3, 5), (4, 5)]


@pytest.mark.parametrize("call", [
    lambda: gen_g1(2, 1),
    lambda: gen_g1(3, 0),
    lambda: gen_g1(3, 4),
    lambda: gen_g2(2, G2Shape.triangle()),
    lambda: gen_g2(3, G2Shape.star(4)),
    lambda: G2Shape.star(0),
    lambda: G2Shape("square"),
    lambda: gen_bipartite_ese(3, 3),
])
def test_parameter_errors(call):
    with pytest.raises(FamilyParameterError):
        call()


@pytest.mark.parametrize("r", [3, 4, 5, 6])
def test_constructions_are_distinct_and_ese(r):
    items = all_fc_ese_constructions(r)
    assert len(items) == 2 * r + 2
    words = {canonical_form(g, guard=2 * r + 1) for _, g in items}
    assert len(words) == 2 * r + 2
    for _, g in items:
        res = is_ese(g)
        assert res.verdict and "factor-critical" in res.class_tags
        assert verify_certificate(g, res.certificate)


@given(st.integers(1, 4), st.integers(1, 3), st.integers(0, 10 ** 6))
def test_bipartite_generator_meets_degree_bound(r, extra, seed):
    s = r + extra
    g = gen_bipartite_ese(r, s, seed)
    assert is_connected(g) and g.n == r + s
    assert all(g.degree(u) >= r + 1 for u in range(r))
    assert all(not g.has_edge(a, b) for a in range(r) for b in range(r))
    assert is_ese(g).verdict
    if g.n <= 8:
        assert is_ese_oracle(g).verdict


def test_bipartite_generator_is_seeded():
    assert gen_bipartite_ese(3, 6, 11) == gen_bipartite_ese(3, 6, 11)


def test_degree3_example():
    g = fig_degree3_example()
    parts = bipartition(g)
    assert sorted(parts.U) == [0, 1, 2] and g.degree(0) == 3
    # outside the degree-bound subclass, still ESE
    assert g.degree(0) < len(parts.U) + 1
    assert is_ese(g).verdict and is_ese_oracle(g).verdict


def test_catalog_against_networkx_constructions():
    expect = {
        "K1": nx.complete_graph(1),
        "K3": nx.complete_graph(3),
        "K5": nx.complete_graph(5),
        "C5": nx.cycle_graph(5),
        "K5-e": nx.complement(nx.Graph([(0, 1)] + [(v, v) for v in range(5)])),
        "K5-2K2": nx.complement(nx.Graph([(0, 1), (2, 3)] + [(v, v) for v in range(5)])),
    }
    for name, g in zip(CATALOG_NAMES, small_catalog()):
        if name in expect:
            h = expect[name]
            h.remove_edges_from(nx.selfloop_edges(h))
            assert nx.is_isomorphic(to_nx(g), h), name
    fc = small_catalog()[-1]
    assert fc.num_edges() == 7 and matching_number(fc) == 2
