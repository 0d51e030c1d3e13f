"""Independent reference implementations used only by the tests.

Nothing here imports the package's matching or canonizer code: maximum
matchings come from a subset DP or networkx, isomorphism from networkx VF2,
and small-graph corpora from the networkx atlas.
"""

from __future__ import annotations

import random
from functools import lru_cache

import networkx as nx
from hypothesis import strategies as st

from esegraphs.graph_core import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(idx[u], idx[v]) for u, v in h.edges()])


def atlas(max_n: int = 7, connected: bool = False) -> list[Graph]:
    """Every graph on 1..max_n vertices, one per isomorphism class (networkx atlas)."""
    out = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > max_n:
            break
        if connected and not nx.is_connected(h):
            continue
        out.append(from_nx(h))
    return out


def dp_matching_number(g: Graph) -> int:
    """nu(G) by memoised recursion on the lowest remaining vertex."""
    rows = g.rows

    @lru_cache(maxsize=None)
    def nu(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        best = nu(rest)
        nb = rows[v] & rest
        while nb:
            w = nb & -nb
            best = max(best, 1 + nu(rest ^ w))
            nb ^= w
        return best

    return nu(g.vertex_mask)


def brute_maximal_matchings(g: Graph) -> list[tuple]:
    """All maximal matchings by subset search over edges (small graphs only)."""
    edges = g.edges()
    found = set()

    def grow(i, used, chosen):
        if i == len(edges):
            exposed = [v for v in range(g.n) if not used >> v & 1]
            if all(not (g.rows[v] & ~used & ~(1 << v)) for v in exposed):
                found.add(tuple(chosen))
            return
        u, v = edges[i]
        if not (used >> u & 1 or used >> v & 1):
            grow(i + 1, used | (1 << u) | (1 << v), chosen + [(u, v)])
        grow(i + 1, used, chosen)

    grow(0, 0, [])
    return sorted(found)


def nx_equimatchable(g: Graph) -> bool:
    sizes = {len(m) for m in brute_maximal_matchings(g)}
    return len(sizes) <= 1


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    while True:
        g = random_graph(rng, n, rng.uniform(0.15, 0.95))
        if nx.is_connected(to_nx(g)):
            return g


def random_bipartite(rng: random.Random, a: int, b: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p])


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return Graph.from_edges(n, [e for k, e in enumerate(pairs) if mask >> k & 1])


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    g = draw(graphs(min_n, max_n))
    # join consecutive components through their smallest vertices
    h = to_nx(g)
    comps = sorted(min(c) for c in nx.connected_components(h))
    for a, b in zip(comps, comps[1:]):
        h.add_edge(a, b)
    return Graph.from_edges(g.n, h.edges())
