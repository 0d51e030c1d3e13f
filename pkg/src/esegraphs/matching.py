"""Maximum and maximal matchings.

``maximum_matching`` is Edmonds' blossom algorithm (O(n^3)); the bipartite
engine is Hopcroft-Karp.  ``enumerate_maximal_matchings`` is the exhaustive
ground-truth oracle used to cross-check everything structural.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .graph_core import (
    Bipartition,
    Graph,
    GraphError,
    SizeGuardError,
    bipartition,
    bits,
    is_complete,
    is_connected,
    is_valid_bipartition,
    mask_of,
)

ORACLE_GUARD = 24


class MatchingError(ValueError):
    pass


class OracleGuardError(SizeGuardError):
    pass


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]
    host: Graph = field(compare=False, repr=False)

    @classmethod
    def of(cls, host: Graph, edges: Iterable[tuple[int, int]]) -> "Matching":
        """Build and validate a matching of ``host``."""
        es = tuple(sorted(_norm(u, v) for u, v in edges))
        covered = 0
        for u, v in es:
            if u == v or not (0 <= u < host.n and 0 <= v < host.n) or not host.has_edge(u, v):
                raise MatchingError(f"({u}, {v}) is not an edge of the host graph")
            if covered >> u & 1 or covered >> v & 1:
                raise MatchingError(f"edge ({u}, {v}) shares an endpoint with another edge")
            covered |= (1 << u) | (1 << v)
        return cls(es, host)

    @classmethod
    def from_mates(cls, host: Graph, mate: list[int]) -> "Matching":
        return cls(tuple((v, w) for v, w in enumerate(mate) if w > v), host)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    @property
    def saturated(self) -> int:
        return mask_of(x for e in self.edges for x in e)

    def mates(self) -> list[int]:
        mate = [-1] * self.host.n
        for u, v in self.edges:
            mate[u], mate[v] = v, u
        return mate

    def as_lists(self) -> list[list[int]]:
        return [list(e) for e in self.edges]


# ---- blossom ------------------------------------------------------------------


def _blossom_mates(g: Graph) -> list[int]:
    n = g.n
    adj = [list(bits(r)) for r in g.rows]
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break

    def find_path(root: int) -> int:
        used = [False] * n
        p = [-1] * n
        base = list(range(n))
        used[root] = True
        q = deque([root])

        def lca(a: int, b: int) -> int:
            mark = [False] * n
            while True:
                a = base[a]
                mark[a] = True
                if match[a] == -1:
                    break
                a = p[match[a]]
            while True:
                b = base[b]
                if mark[b]:
                    return b
                b = p[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                p[v] = child
                child = match[v]
                v = p[match[v]]

        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        # augment along the alternating tree path
                        x = to
                        while x != -1:
                            px = p[x]
                            nxt = match[px]
                            match[x], match[px] = px, x
                            x = nxt
                        return to
                    used[match[to]] = True
                    q.append(match[to])
        return -1

    # An exposed vertex with no augmenting path now never gets one later,
    # so a single pass over the roots leaves no augmenting path anywhere.
    for root in range(n):
        if match[root] == -1:
            find_path(root)
    return match


def maximum_matching(g: Graph) -> Matching:
    return Matching.from_mates(g, _blossom_mates(g))


def matching_number(g: Graph) -> int:
    return sum(1 for v, w in enumerate(_blossom_mates(g)) if w > v)


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and 2 * matching_number(g) == g.n


def nu_without(g: Graph, mask: int) -> int:
    """nu(G - X) for the vertex set given by ``mask``."""
    return matching_number(g.remove_vertices_mask(mask))


# ---- Hopcroft-Karp --------------------------------------------------------------


def _hopcroft_karp(left: list[int], right_of: dict[int, list[int]]) -> dict[int, int]:
    INF = float("inf")
    mate_l: dict[int, int] = {u: -1 for u in left}
    mate_r: dict[int, int] = {}
    dist: dict[int, float] = {}

    def bfs() -> bool:
        q = deque()
        for u in left:
            if mate_l[u] == -1:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = INF
        found = False
        while q:
            u = q.popleft()
            for w in right_of[u]:
                m = mate_r.get(w, -1)
                if m == -1:
                    found = True
                elif dist[m] == INF:
                    dist[m] = dist[u] + 1
                    q.append(m)
        return found

    def dfs(u: int) -> bool:
        for w in right_of[u]:
            m = mate_r.get(w, -1)
            if m == -1 or (dist[m] == dist[u] + 1 and dfs(m)):
                mate_l[u] = w
                mate_r[w] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in left:
            if mate_l[u] == -1:
                dfs(u)
    return {u: w for u, w in mate_l.items() if w != -1}


def maximum_matching_bipartite(
    g: Graph, parts: Bipartition, restrict_to: Optional[Iterable[int]] = None
) -> Matching:
    """Maximum matching of g (or of g[restrict_to]) given a valid bipartition."""
    if not is_valid_bipartition(g, parts):
        raise GraphError("parts is not a bipartition of the graph")
    keep = g.vertex_mask if restrict_to is None else mask_of(restrict_to)
    wmask = mask_of(parts.W) & keep
    left = sorted(u for u in parts.U if keep >> u & 1)
    right_of = {u: list(bits(g.rows[u] & wmask)) for u in left}
    pairs = _hopcroft_karp(left, right_of)
    return Matching(tuple(sorted(_norm(u, w) for u, w in pairs.items())), g)


# ---- maximality and enumeration ---------------------------------------------------


def is_matching_of(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    try:
        Matching.of(g, edges)
    except MatchingError:
        return False
    return True


def is_maximal(g: Graph, m: Matching | Iterable[tuple[int, int]]) -> bool:
    """True iff the vertices left exposed by ``m`` form an independent set."""
    m = Matching.of(g, m.edges if isinstance(m, Matching) else m)
    exposed = g.vertex_mask & ~m.saturated
    return all(not (g.rows[v] & exposed) for v in bits(exposed))


def extend_to_maximal(g: Graph, edges: Iterable[tuple[int, int]]) -> Matching:
    """Greedily extend a matching (smallest free edge first) until maximal."""
    m = Matching.of(g, edges)
    covered = m.saturated
    out = list(m.edges)
    for u in range(g.n):
        if covered >> u & 1:
            continue
        free = g.rows[u] & ~covered
        if free:
            w = (free & -free).bit_length() - 1
            out.append(_norm(u, w))
            covered |= (1 << u) | (1 << w)
    return Matching(tuple(sorted(out)), g)


def enumerate_maximal_matchings(g: Graph, guard: Optional[int] = ORACLE_GUARD) -> Iterator[Matching]:
    """Every maximal matching exactly once, in lexicographic order of sorted edge lists.

    Vertices are decided smallest first: the current vertex is either matched to
    a larger undecided neighbour or left exposed, and an exposed vertex forces
    all its neighbours to be matched.  Each matching has exactly one branch.
    """
    if guard is not None and g.n > guard:
        raise OracleGuardError(f"maximal-matching enumeration is guarded at n <= {guard}, got n={g.n}")
    rows = g.rows

    def rec(undecided: int, nb_exposed: int, prefix: tuple) -> Iterator[tuple]:
        must = nb_exposed & undecided
        for x in bits(must):
            if not rows[x] & undecided:
                return
        if not undecided:
            yield prefix
            return
        v = (undecided & -undecided).bit_length() - 1
        rest = undecided ^ (1 << v)
        expose_iter = None
        first = None
        if not must >> v & 1:
            expose_iter = rec(rest, nb_exposed | rows[v], prefix)
            first = next(expose_iter, None)
            if first is not None and len(first) == len(prefix):
                # leaving everything else exposed sorts before any extension
                yield first
                first = None
        for w in bits(rows[v] & rest):
            yield from rec(rest & ~(1 << w), nb_exposed, prefix + ((v, w),))
        if first is not None:
            yield first
            yield from expose_iter

    for edges in rec(g.vertex_mask, 0, ()):
        yield Matching(edges, g)


def maximal_matching_sizes(g: Graph, guard: Optional[int] = ORACLE_GUARD) -> set[int]:
    return {len(m) for m in enumerate_maximal_matchings(g, guard)}


def two_maximal_matchings_of_different_size(
    g: Graph, guard: Optional[int] = ORACLE_GUARD
) -> Optional[tuple[Matching, Matching]]:
    """First pair (in stream order) of maximal matchings with distinct sizes, or None."""
    first: Optional[Matching] = None
    for m in enumerate_maximal_matchings(g, guard):
        if first is None:
            first = m
        elif len(m) != len(first):
            return (first, m) if len(first) < len(m) else (m, first)
    return None


def is_randomly_matchable(g: Graph) -> bool:
    """Connected g isomorphic to K_{2r} or K_{r,r}, r >= 1."""
    if not is_connected(g):
        raise GraphError("is_randomly_matchable expects a connected graph")
    if g.n < 2 or g.n % 2:
        return False
    if is_complete(g):
        return True
    parts = bipartition(g)
    if parts is None or len(parts.U) != len(parts.W):
        return False
    return g.num_edges() == len(parts.U) * len(parts.W)
