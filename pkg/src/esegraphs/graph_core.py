"""Simple undirected graphs stored as per-vertex neighbour bit rows.

Bit ``j`` of ``rows[i]`` is set iff ``ij`` is an edge.  Everything here is pure;
``Graph`` values are immutable and hashable.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

CANON_GUARD = 10


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class EdgeListError(GraphError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SizeGuardError(GraphError):
    """An exponential routine was asked to run above its size guard."""


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int], check: bool = True):
        rows = tuple(rows)
        if check:
            if n < 0 or len(rows) != n:
                raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
            full = (1 << n) - 1
            for v, r in enumerate(rows):
                if r & ~full:
                    raise GraphError(f"vertex {v} has a neighbour index >= n")
                if r >> v & 1:
                    raise GraphError(f"self-loop at vertex {v}")
                for w in bits(r):
                    if not rows[w] >> v & 1:
                        raise GraphError(f"asymmetric adjacency between {v} and {w}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.rows, False))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, check=False)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.n, self.rows))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def neighborhood(self, vertices: Iterable[int]) -> int:
        """Bit mask of N(V'): the union of the neighbourhoods."""
        mask = 0
        for v in vertices:
            mask |= self.rows[v]
        return mask

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows, check=False)

    def remove_vertices_mask(self, mask: int) -> "Graph":
        """Same vertex labels, all edges at ``mask`` deleted (vertices left isolated)."""
        keep = ~mask
        rows = [0 if mask >> v & 1 else r & keep for v, r in enumerate(self.rows)]
        return Graph(self.n, rows, check=False)


@dataclass(frozen=True)
class Bipartition:
    U: frozenset
    W: frozenset


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# ---- named graphs -----------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n, check=False)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)], check=False)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite_graph(r: int, s: int) -> Graph:
    """K_{r,s} with the r-side on vertices 0..r-1."""
    return Graph.from_edges(r + s, [(u, r + w) for u in range(r) for w in range(s)])


def star_graph(k: int) -> Graph:
    return complete_bipartite_graph(1, k)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.rows)
        offset += g.n
    return Graph(offset, rows, check=False)


# ---- codecs -------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size_prefix(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n <= 68719476735:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise GraphError(f"n={n} too large for graph6")


def encode_graph6(g: Graph) -> str:
    out = _g6_size_prefix(g.n)
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, g.n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(acc << (6 - nbits))
    return "".join(chr(c + 63) for c in out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    base = len(text) - len(text.lstrip())
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
        base += len(_G6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 word", base)
    vals = []
    for i, ch in enumerate(s):
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise Graph6Error(f"invalid graph6 character {ch!r}", base + i)
        vals.append(c)
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] != 63:
        if len(vals) < 4:
            raise Graph6Error("truncated size header", base + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
        if n <= 62:
            raise Graph6Error("non-minimal size header", base)
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated size header", base + len(vals))
        n = 0
        for c in vals[2:8]:
            n = (n << 6) | c
        pos = 8
        if n <= 258047:
            raise Graph6Error("non-minimal size header", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, found {len(body)}", base + pos + min(len(body), need)
        )
    rows = [0] * n
    k = 0
    j, i = 1, 0
    for bi, c in enumerate(body):
        for shift in range(5, -1, -1):
            bit = c >> shift & 1
            if k < nbits:
                if bit:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                i += 1
                if i == j:
                    j += 1
                    i = 0
            elif bit:
                raise Graph6Error("nonzero padding bits", base + pos + bi)
            k += 1
    return Graph(n, rows, check=False)


def decode_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines (0-based); an optional first line ``n <count>`` fixes the order."""
    n: Optional[int] = None
    edges: list[tuple[int, int, int]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if seen_content or len(parts) != 2:
                raise EdgeListError("'n <count>' is only allowed as the first line", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise EdgeListError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 0:
                raise EdgeListError("negative vertex count", lineno)
            seen_content = True
            continue
        seen_content = True
        if len(parts) != 2:
            raise EdgeListError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer endpoint in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise EdgeListError("negative vertex index", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v, lineno))
    if n is None:
        n = 1 + max((max(u, v) for u, v, _ in edges), default=-1)
    rows = [0] * n
    for u, v, lineno in edges:
        if u >= n or v >= n:
            raise EdgeListError(f"vertex index {max(u, v)} >= n={n}", lineno)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, check=False)


def encode_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ---- structural queries ------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, [(full ^ r) & ~(1 << v) for v, r in enumerate(g.rows)], check=False)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``s``, relabelled 0..|s|-1; also returns new->old labels."""
    index = sorted(set(s))
    pos = {v: i for i, v in enumerate(index)}
    rows = []
    for v in index:
        r = 0
        for w in bits(g.rows[v]):
            i = pos.get(w)
            if i is not None:
                r |= 1 << i
        rows.append(r)
    return Graph(len(index), rows, check=False), index


def component_masks(g: Graph, within: Optional[int] = None) -> list[int]:
    rows = g.rows
    left = g.vertex_mask if within is None else within
    comps = []
    while left:
        low = left & -left
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            nxt &= left & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        left &= ~comp
    return comps


def connected_components(g: Graph) -> list[list[int]]:
    return [list(bits(m)) for m in component_masks(g)]


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(component_masks(g)) == 1


def _two_colouring(g: Graph) -> tuple[list[int], Optional[tuple[int, int, list[int]]]]:
    """BFS two-colouring; on failure also returns an offending edge and the BFS parents."""
    colour = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in bits(g.rows[v]):
                if colour[w] == -1:
                    colour[w] = colour[v] ^ 1
                    parent[w] = v
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return colour, (v, w, parent)
    return colour, None


def bipartition(g: Graph) -> Optional[Bipartition]:
    """Two-colouring normalised so that |U| <= |W|, or None if g has an odd cycle.

    Each component is oriented so that its smaller colour class goes to U
    (ties: the class containing the component's smallest vertex), which keeps
    |U| <= |W| for the merged sides.
    """
    colour, bad = _two_colouring(g)
    if bad is not None:
        return None
    U: set[int] = set()
    W: set[int] = set()
    for comp in component_masks(g):
        side0 = [v for v in bits(comp) if colour[v] == 0]
        side1 = [v for v in bits(comp) if colour[v] == 1]
        first = min(bits(comp))
        if len(side1) < len(side0) or (len(side1) == len(side0) and colour[first] == 1):
            side0, side1 = side1, side0
        U.update(side0)
        W.update(side1)
    return Bipartition(frozenset(U), frozenset(W))


def is_bipartite(g: Graph) -> bool:
    return _two_colouring(g)[1] is None


def is_valid_bipartition(g: Graph, parts: Bipartition) -> bool:
    U, W = parts.U, parts.W
    if U & W or (U | W) != set(range(g.n)):
        return False
    um = mask_of(U)
    wm = mask_of(W)
    return all(not (g.rows[u] & um) for u in U) and all(not (g.rows[w] & wm) for w in W)


def find_odd_cycle(g: Graph) -> Optional[list[int]]:
    """An odd cycle (vertex sequence, closing edge implied) or None if bipartite."""
    colour, bad = _two_colouring(g)
    if bad is None:
        return None
    v, w, parent = bad

    def to_root(x):
        path = [x]
        while parent[x] != -1:
            x = parent[x]
            path.append(x)
        return path

    pv, pw = to_root(v), to_root(w)
    on_pw = {x: i for i, x in enumerate(pw)}
    for i, x in enumerate(pv):
        if x in on_pw:
            j = on_pw[x]
            return pv[: i + 1] + pw[:j][::-1]
    raise AssertionError("BFS trees of an odd edge must meet")


def is_odd_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if k < 3 or k % 2 == 0 or len(set(cycle)) != k:
        return False
    if any(not 0 <= v < g.n for v in cycle):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k))


def articulation_points(g: Graph) -> set[int]:
    base = len(component_masks(g))
    cuts = set()
    for v in range(g.n):
        if not g.rows[v]:
            continue
        rest = g.vertex_mask & ~(1 << v)
        if len(component_masks(g, within=rest)) > base:
            cuts.add(v)
    return cuts


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not articulation_points(g)


def eccentricities(g: Graph) -> list[float]:
    out: list[float] = []
    for s in range(g.n):
        seen = 1 << s
        frontier = seen
        dist = 0
        while True:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.rows[v]
            nxt &= ~seen
            if not nxt:
                break
            dist += 1
            seen |= nxt
            frontier = nxt
        out.append(dist if seen == g.vertex_mask else math.inf)
    return out


def diameter(g: Graph) -> float:
    """Largest shortest-path distance; ``math.inf`` when disconnected, 0 for n <= 1."""
    return max(eccentricities(g), default=0)


def is_complete(g: Graph) -> bool:
    full = g.vertex_mask
    return all(r == full ^ (1 << v) for v, r in enumerate(g.rows))


def is_complete_bipartite(g: Graph) -> bool:
    """Connected and equal to K_{r,s} for some r, s >= 1."""
    if g.n < 2 or not is_connected(g):
        return False
    parts = bipartition(g)
    if parts is None:
        return False
    return g.num_edges() == len(parts.U) * len(parts.W)


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    m = mask_of(vertices)
    return all(not (g.rows[v] & m) for v in bits(m))


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex v as perm[v]."""
    rows = [0] * g.n
    for v in range(g.n):
        r = 0
        for w in bits(g.rows[v]):
            r |= 1 << perm[w]
        rows[perm[v]] = r
    return Graph(g.n, rows, check=False)


# ---- canonical labelling ---------------------------------------------------------
#
# Individualisation-refinement: ordered colour refinement to an equitable
# partition, then branching on the first non-singleton cell.  Children in the
# same orbit of known automorphisms fixing the current prefix are skipped;
# twin transpositions seed the automorphism list and further automorphisms are
# harvested from equal leaves.  The canonical form is the graph6 word of the
# leaf relabelling with the smallest upper-triangle bit string.


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [mask_of(c) for c in cells]
        sig = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                r = rows[v]
                sig[v] = (ci, tuple(popcount(r & m) for m in masks))
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            for key in sorted(groups):
                new_cells.append(groups[key])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _leaf_key(rows: tuple[int, ...], order: list[int]) -> int:
    key = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            key = (key << 1) | (rj >> order[i] & 1)
    return key


def _twin_generators(g: Graph) -> list[tuple[int, ...]]:
    gens = []
    n = g.n
    classes: dict[tuple[int, int], list[int]] = {}
    for v in range(n):
        open_nb = g.rows[v]
        classes.setdefault((0, open_nb), []).append(v)
        classes.setdefault((1, open_nb | (1 << v)), []).append(v)
    for members in classes.values():
        for a, b in zip(members, members[1:]):
            perm = list(range(n))
            perm[a], perm[b] = b, a
            gens.append(tuple(perm))
    return gens


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in gens:
        for v in range(n):
            a, b = find(v), find(gamma[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_labeling(g: Graph, guard: int = CANON_GUARD) -> list[int]:
    """``order`` with order[position] = vertex, for the canonical relabelling."""
    if g.n > guard:
        raise SizeGuardError(f"canonical_form supports n <= {guard}, got n={g.n}")
    n = g.n
    if n == 0:
        return []
    rows = g.rows
    autos = _twin_generators(g)
    seen_leaves: dict[int, list[int]] = {}
    best: list = [None, None]

    def search(cells: list[list[int]], prefix: list[int]):
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            key = _leaf_key(rows, order)
            first = seen_leaves.get(key)
            if first is None:
                seen_leaves[key] = order
                if best[0] is None or key < best[0]:
                    best[0], best[1] = key, order
            else:
                gamma = [0] * n
                for a, b in zip(first, order):
                    gamma[a] = b
                autos.append(tuple(gamma))
            return
        ti = cells.index(target)
        explored: list[int] = []
        for v in target:
            if explored:
                gens = [a for a in autos if all(a[p] == p for p in prefix)]
                if gens:
                    roots = _orbit_roots(n, gens)
                    if any(roots[v] == roots[u] for u in explored):
                        continue
            explored.append(v)
            rest = [u for u in target if u != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1:]
            search(_refine(rows, child), prefix + [v])

    search(_refine(rows, [list(range(n))]), [])
    return best[1]


def canonical_graph(g: Graph, guard: int = CANON_GUARD) -> Graph:
    order = canonical_labeling(g, guard)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return permute(g, perm)


def canonical_form(g: Graph, guard: int = CANON_GUARD) -> str:
    return encode_graph6(canonical_graph(g, guard))


def is_isomorphic(g: Graph, h: Graph, guard: int = CANON_GUARD) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g, guard) == canonical_form(h, guard)


def find_isomorphism(g: Graph, h: Graph, guard: int = CANON_GUARD) -> Optional[list[int]]:
    """A map phi with g.has_edge(u, v) == h.has_edge(phi[u], phi[v]), or None."""
    if not is_isomorphic(g, h, guard):
        return None
    og = canonical_labeling(g, guard)
    oh = canonical_labeling(h, guard)
    phi = [0] * g.n
    for a, b in zip(og, oh):
        phi[a] = b
    return phi
