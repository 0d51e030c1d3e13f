"""Constructive generators for the characterised graph families.

Vertex numbering is fixed so certificates are comparable across runs: the
independent block S comes first, then the block carrying the nu = 1 graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .graph_core import (
    Graph,
    GraphError,
    complete_bipartite_graph,
    complete_graph,
    component_masks,
    cycle_graph,
)


class FamilyParameterError(GraphError):
    pass


@dataclass(frozen=True)
class G2Shape:
    """The nu = 1 part of a G2 graph: a star K_{1,k} or a triangle, plus isolated vertices."""

    variant: str
    k: Optional[int] = None

    def __post_init__(self):
        if self.variant == "star":
            if self.k is None or self.k < 1:
                raise FamilyParameterError("star shape needs k >= 1")
        elif self.variant == "triangle":
            if self.k is not None:
                raise FamilyParameterError("triangle shape takes no k")
        else:
            raise FamilyParameterError(f"unknown G2 shape {self.variant!r}")

    @classmethod
    def star(cls, k: int) -> "G2Shape":
        return cls("star", k)

    @classmethod
    def triangle(cls) -> "G2Shape":
        return cls("triangle")

    def __str__(self):
        return f"star({self.k})" if self.variant == "star" else "triangle"


def gen_g1(r: int, k: int) -> Graph:
    """K_{2r+1} minus the k disjoint edges {0,1}, {2,3}, ..., {2k-2, 2k-1}."""
    if r < 3:
        raise FamilyParameterError(f"G1 needs r >= 3, got r={r}")
    if not 1 <= k <= r:
        raise FamilyParameterError(f"G1 needs 1 <= k <= r, got k={k}, r={r}")
    g = complete_graph(2 * r + 1)
    for i in range(k):
        g = g.remove_edge(2 * i, 2 * i + 1)
    return g


def gen_g2(r: int, shape: G2Shape) -> Graph:
    """Independent S = {0..r-1} joined to r+1 vertices {r..2r} carrying ``shape``."""
    if r < 3:
        raise FamilyParameterError(f"G2 needs r >= 3, got r={r}")
    if shape.variant == "star" and shape.k > r:
        raise FamilyParameterError(f"a star in G2 needs k <= r, got k={shape.k}, r={r}")
    n = 2 * r + 1
    edges = [(s, x) for s in range(r) for x in range(r, n)]
    c = r
    if shape.variant == "star":
        edges += [(c, c + i) for i in range(1, shape.k + 1)]
    else:
        edges += [(c, c + 1), (c, c + 2), (c + 1, c + 2)]
    return Graph.from_edges(n, edges)


def all_fc_ese_constructions(r: int) -> list[tuple[str, Graph]]:
    """K_{2r+1}, every G1 member and every G2 member on 2r+1 vertices, labelled."""
    out = [(f"K{2 * r + 1}", complete_graph(2 * r + 1))]
    out += [(f"g1(r={r},k={k})", gen_g1(r, k)) for k in range(1, r + 1)]
    out += [(f"g2(r={r},star({k}))", gen_g2(r, G2Shape.star(k))) for k in range(1, r + 1)]
    out.append((f"g2(r={r},triangle)", gen_g2(r, G2Shape.triangle())))
    return out


def gen_bipartite_ese(r: int, s: int, seed: int = 0) -> Graph:
    """Seeded connected spanning subgraph of K_{r,s} with every U-degree >= r + 1.

    U = {0..r-1}, W = {r..r+s-1}.  Edges of K_{r,s} are visited in a seeded
    random order and each is dropped with probability 1/2 when the degree bound
    and connectivity survive the deletion.
    """
    if r < 1 or s <= r:
        raise FamilyParameterError(f"need 1 <= r < s, got r={r}, s={s}")
    rng = random.Random(seed)
    g = complete_bipartite_graph(r, s)
    edges = g.edges()
    rng.shuffle(edges)
    for u, w in edges:
        if rng.random() >= 0.5 or g.degree(u) <= r + 1:
            continue
        h = g.remove_edge(u, w)
        if len(component_masks(h)) == 1:
            g = h
    return g


def fig_degree3_example() -> Graph:
    """U = {u, x2, x3} = {0, 1, 2}; W = {w1..w6} = {3..8}; u has degree 3."""
    u, x2, x3 = 0, 1, 2
    w = {i: 2 + i for i in range(1, 7)}
    edges = [(u, w[4]), (u, w[5]), (u, w[6])]
    edges += [(x2, w[2]), (x2, w[3]), (x2, w[4]), (x2, w[5])]
    edges += [(x3, w[1]), (x3, w[2]), (x3, w[3])]
    return Graph.from_edges(9, edges)


CATALOG_NAMES = ("K1", "K3", "K5", "C5", "K5-e", "K5-2K2", "fig(c)")

_FIGURE_EDGES = {
    # x1..x5 of the figure are vertices 0..4
    "K5-e": [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
    "K5-2K2": [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (1, 4), (2, 4), (3, 4)],
    "fig(c)": [(0, 1), (1, 2), (0, 3), (2, 3), (0, 4), (1, 4), (3, 4)],
}


def small_catalog() -> list[Graph]:
    """The seven factor-critical ESE graphs on at most five vertices, in CATALOG_NAMES order."""
    out = [complete_graph(1), complete_graph(3), complete_graph(5), cycle_graph(5)]
    out += [Graph.from_edges(5, _FIGURE_EDGES[name]) for name in CATALOG_NAMES[4:]]
    return out
