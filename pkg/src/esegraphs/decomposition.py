"""Gallai-Edmonds decomposition, factor-criticality and strong/weak vertices."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph_core import (
    Bipartition,
    Graph,
    GraphError,
    bits,
    component_masks,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_valid_bipartition,
    mask_of,
    popcount,
)
from .matching import (
    ORACLE_GUARD,
    Matching,
    _hopcroft_karp,
    enumerate_maximal_matchings,
    has_perfect_matching,
    matching_number,
    nu_without,
)


@dataclass(frozen=True)
class GallaiEdmonds:
    D: frozenset
    A: frozenset
    C: frozenset

    def as_dict(self) -> dict:
        return {"D": sorted(self.D), "A": sorted(self.A), "C": sorted(self.C)}


def gallai_edmonds(g: Graph) -> GallaiEdmonds:
    """D = {v : nu(G - v) = nu(G)}, A = N(D) minus D, C = the rest (n + 1 blossom runs)."""
    nu = matching_number(g)
    D = mask_of(v for v in range(g.n) if nu_without(g, 1 << v) == nu)
    A = g.neighborhood(bits(D)) & ~D
    C = g.vertex_mask & ~(D | A)
    return GallaiEdmonds(frozenset(bits(D)), frozenset(bits(A)), frozenset(bits(C)))


def is_factor_critical(g: Graph) -> bool:
    n = g.n
    if n % 2 == 0 or not is_connected(g):
        return False
    half = (n - 1) // 2
    if matching_number(g) != half:
        return False
    return all(nu_without(g, 1 << v) == half for v in range(n))


def non_factor_critical_vertex(g: Graph) -> Optional[int]:
    """Smallest v with G - v lacking a perfect matching (n odd), else None."""
    if g.n % 2 == 0:
        return None
    half = (g.n - 1) // 2
    return next((v for v in range(g.n) if nu_without(g, 1 << v) != half), None)


def check_gallai_edmonds(
    g: Graph, ge: GallaiEdmonds, matchings: Iterable[Matching] = ()
) -> list[str]:
    """Violations of the three Gallai-Edmonds clauses; ``matchings`` are maximum matchings to audit."""
    out: list[str] = []
    D, A, C = mask_of(ge.D), mask_of(ge.A), mask_of(ge.C)
    if D & A or D & C or A & C or (D | A | C) != g.vertex_mask:
        out.append("D, A, C do not partition V")
        return out
    d_comps = component_masks(g, within=D)
    for comp in d_comps:
        h, _ = induced_subgraph(g, bits(comp))
        if not is_factor_critical(h):
            out.append(f"component {sorted(bits(comp))} of G[D] is not factor-critical")
    hc, _ = induced_subgraph(g, bits(C))
    if not has_perfect_matching(hc):
        out.append("G[C] has no perfect matching")
    comp_of = {}
    for i, comp in enumerate(d_comps):
        for v in bits(comp):
            comp_of[v] = i
    nu = matching_number(g)
    for m in matchings:
        if len(m) != nu:
            out.append(f"audited matching {m.edges} is not maximum")
            continue
        mate = m.mates()
        used: set[int] = set()
        for a in bits(A):
            w = mate[a]
            if w == -1 or w not in comp_of:
                out.append(f"maximum matching {m.edges} does not match A-vertex {a} into D")
                break
            if comp_of[w] in used:
                out.append(f"maximum matching {m.edges} matches two A-vertices into one D-component")
                break
            used.add(comp_of[w])
    return out


# ---- strong / weak vertices -----------------------------------------------------


def neighbourhood_saturation(
    g: Graph, v: int, avoid_v: bool
) -> tuple[list[tuple[int, int]], Optional[list[int]]]:
    """Try to saturate N(v) by a matching of a bipartite g (of g - v if ``avoid_v``).

    Returns the maximum matching of the bipartite graph between N(v) and N(N(v))
    (minus v when ``avoid_v``), and, when it misses part of N(v), a Hall-deficient
    subset S of N(v): vertices reachable by alternating paths from exposed
    N(v)-vertices, whose neighbourhood inside that graph has |S| - deficiency
    vertices.
    """
    left = list(bits(g.rows[v]))
    strip = ~(1 << v) if avoid_v else -1
    right_of = {w: list(bits(g.rows[w] & strip)) for w in left}
    pairs = _hopcroft_karp(left, right_of)
    matching = sorted((min(a, b), max(a, b)) for a, b in pairs.items())
    if len(pairs) == len(left):
        return matching, None
    mate_r = {b: a for a, b in pairs.items()}
    seen = {w for w in left if w not in pairs}
    q = deque(seen)
    while q:
        w = q.popleft()
        for y in right_of[w]:
            x = mate_r.get(y)
            if x is not None and x not in seen:
                seen.add(x)
                q.append(x)
    return matching, sorted(seen)


def _require_bipartite(g: Graph, parts: Bipartition) -> None:
    if not is_valid_bipartition(g, parts):
        raise GraphError("parts is not a bipartition of the graph")


def is_strong_bipartite(g: Graph, parts: Bipartition, v: int) -> bool:
    """No matching of g - v saturates N(v)."""
    _require_bipartite(g, parts)
    _, deficient = neighbourhood_saturation(g, v, avoid_v=True)
    return deficient is not None


def is_square_strong_bipartite(g: Graph, parts: Bipartition, u: int) -> bool:
    """nu(g[N(u) + N(N(u))]) <= |N(u)| - 1, i.e. no matching of g saturates N(u)."""
    _require_bipartite(g, parts)
    if u not in parts.U:
        raise GraphError(f"vertex {u} is not on the U side")
    _, deficient = neighbourhood_saturation(g, u, avoid_v=False)
    return deficient is not None


def strong_weak_oracle(g: Graph, v: int, guard: Optional[int] = ORACLE_GUARD) -> str:
    """'weak' iff some maximal matching leaves v exposed."""
    for m in enumerate_maximal_matchings(g, guard):
        if not m.saturated >> v & 1:
            return "weak"
    return "strong"


def hall_deficiency(g: Graph, s: Iterable[int]) -> int:
    """|S| - |N(S)|."""
    s = list(s)
    return len(s) - popcount(g.neighborhood(s))


def vertex_strengths(g: Graph, guard: Optional[int] = ORACLE_GUARD) -> tuple[str, list[str]]:
    """Strong/weak status of every vertex, and which path decided it.

    v is weak iff some matching of g - v saturates N(v).  For bipartite g this
    is a bipartite matching problem; otherwise the maximal-matching oracle is
    used, and vertices are reported 'unknown' when g is above the guard.
    """
    if is_bipartite(g):
        out = []
        for v in range(g.n):
            _, deficient = neighbourhood_saturation(g, v, avoid_v=True)
            out.append("strong" if deficient is not None else "weak")
        return "bipartite", out
    if guard is not None and g.n > guard:
        return "unknown", ["unknown"] * g.n
    weak = 0
    for m in enumerate_maximal_matchings(g, guard):
        weak |= g.vertex_mask & ~m.saturated
        if weak == g.vertex_mask:
            break
    return "oracle", ["weak" if weak >> v & 1 else "strong" for v in range(g.n)]
