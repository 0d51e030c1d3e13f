"""Recognisers for equimatchable, edge-stable (ESE) and vertex-stable (VSE) graphs.

Each property has a structural recogniser and an exhaustive oracle; both
return a ``Classification`` carrying a certificate that ``verify_certificate``
replays against the input graph.  The structural recognisers work one
connected component at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .certificates import POSITIVE, Certificate, edge_list
from .decomposition import (
    is_factor_critical,
    neighbourhood_saturation,
    non_factor_critical_vertex,
)
from .families import small_catalog
from .graph_core import (
    Bipartition,
    Graph,
    bipartition,
    bits,
    canonical_form,
    complement,
    complete_graph,
    component_masks,
    find_isomorphism,
    find_odd_cycle,
    induced_subgraph,
    is_bipartite,
    is_complete,
    is_complete_bipartite,
    is_connected,
    is_independent,
    is_odd_cycle,
    is_valid_bipartition,
    mask_of,
    popcount,
)
from .matching import (
    ORACLE_GUARD,
    Matching,
    OracleGuardError,
    enumerate_maximal_matchings,
    extend_to_maximal,
    has_perfect_matching,
    is_matching_of,
    is_maximal,
    is_randomly_matchable,
    matching_number,
    maximum_matching,
    nu_without,
)


class UndecidedAtScale(OracleGuardError):
    """The general equimatchability fallback would have to enumerate above the guard."""

    def __init__(self, component: list[int], guard: int):
        super().__init__(
            f"component {component} ({len(component)} vertices) needs the exhaustive "
            f"fallback, which is guarded at n <= {guard}"
        )
        self.component = component
        self.guard = guard


class NotEquimatchableError(ValueError):
    pass


@dataclass(frozen=True)
class Classification:
    verdict: bool
    class_tags: frozenset
    certificate: Certificate

    def __bool__(self) -> bool:
        return self.verdict

    @property
    def answer(self) -> str:
        return "yes" if self.verdict else "no"

    def to_dict(self) -> dict:
        return {
            "verdict": self.answer,
            "class_tags": sorted(self.class_tags),
            "certificate": self.certificate.to_dict(),
        }


_CLAIM_TAGS = {
    "equimatchable": {"equimatchable"},
    "ese": {"ese", "equimatchable"},
    "vse": {"vse", "equimatchable"},
}

ComponentResult = tuple[bool, Certificate, set]


def _cert(kind: str, claim: str, n: int, **payload) -> Certificate:
    return Certificate(kind, claim, tuple(range(n)), payload)


def _componentwise(g: Graph, claim: str, fn: Callable[[Graph], ComponentResult]) -> Classification:
    parts = []
    tags: set = set()
    comps = component_masks(g)
    for comp in comps:
        h, index = induced_subgraph(g, bits(comp))
        try:
            ok, cert, ctags = fn(h)
        except UndecidedAtScale as exc:
            raise UndecidedAtScale(index, exc.guard) from None
        cert = cert.relabel(index)
        if not ok:
            if len(comps) == 1:
                tags |= ctags - _CLAIM_TAGS[claim]
            if is_bipartite(g):
                tags.add("bipartite")
            return Classification(False, frozenset(tags), cert)
        parts.append(cert)
        if len(comps) == 1:
            tags |= ctags
    tags |= _CLAIM_TAGS[claim]
    if is_bipartite(g):
        tags.add("bipartite")
    if len(parts) == 1:
        cert = parts[0]
    else:
        cert = Certificate("Componentwise", claim, tuple(range(g.n)), {"parts": parts})
    return Classification(True, frozenset(tags), cert)


# ---- equimatchability -------------------------------------------------------------


def _independent_triples(h: Graph):
    full = h.vertex_mask
    for a in range(h.n):
        na = full & ~h.rows[a] & ~((2 << a) - 1)
        for b in bits(na):
            nb = na & ~h.rows[b] & ~((2 << b) - 1)
            for c in bits(nb):
                yield a, b, c


def _triple_with_perfect_rest(h: Graph) -> Optional[tuple[tuple[int, int, int], Matching]]:
    target = (h.n - 3) // 2
    for t in _independent_triples(h):
        rest = h.remove_vertices_mask(mask_of(t))
        m = maximum_matching(rest)
        if len(m) == target:
            return t, m
    return None


def _fc_refutation(h: Graph, claim: str) -> Certificate:
    """Direct refutation for a factor-critical graph that is not ESE.

    Either an independent triple whose removal leaves a perfect matching (two
    maximal matchings of G), or an induced one-edge triple {v, a, b} with the
    same property (two maximal matchings of G minus ab).
    """
    n = h.n
    target = (n - 3) // 2
    full_m = maximum_matching(h)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                inner = [(x, y) for x, y in ((a, b), (a, c), (b, c)) if h.has_edge(x, y)]
                if len(inner) > 1:
                    continue
                m = maximum_matching(h.remove_vertices_mask((1 << a) | (1 << b) | (1 << c)))
                if len(m) != target:
                    continue
                if not inner:
                    return _cert("TwoMaximalMatchings", claim, n, m1=edge_list(m), m2=edge_list(full_m),
                                 removed_edge=None, removed_vertex=None)
                u1, u2 = inner[0]
                m2 = maximum_matching(h.remove_vertices_mask(1 << u1))
                return _cert("TwoMaximalMatchings", claim, n, m1=edge_list(m), m2=edge_list(m2),
                             removed_edge=[u1, u2], removed_vertex=None)
    raise AssertionError("factor-critical non-ESE graph without a witnessing triple")


def _oracle_equimatchable_local(h: Graph, guard: Optional[int], claim_yes: str, claim_no: str, **removal):
    first = None
    count = 0
    for m in enumerate_maximal_matchings(h, guard):
        count += 1
        if first is None:
            first = m
        elif len(m) != len(first):
            small, large = (first, m) if len(first) < len(m) else (m, first)
            payload = dict(m1=edge_list(small), m2=edge_list(large), removed_edge=None, removed_vertex=None)
            payload.update(removal)
            return False, Certificate("TwoMaximalMatchings", claim_no, tuple(range(h.n)), payload)
    size = len(first) if first is not None else None
    return True, Certificate("OracleExhaustive", claim_yes, tuple(range(h.n)),
                             {"maximal_matchings": count, "size": size})


def _equimatchable_component(h: Graph, guard: Optional[int]) -> ComponentResult:
    n = h.n
    full_m = maximum_matching(h)
    nu = len(full_m)
    tags: set = set()
    if 2 * nu == n:
        if is_randomly_matchable(h):
            form = "complete" if is_complete(h) else "complete-bipartite"
            return True, _cert("RandomlyMatchable", "equimatchable", n, form=form), {"randomly-matchable"}
        for x, y in h.edges():
            rest = maximum_matching(h.remove_vertices_mask((1 << x) | (1 << y)))
            if len(rest) < nu - 1:
                m1 = edge_list(list(rest.edges) + [(x, y)])
                return False, _cert("TwoMaximalMatchings", "not-equimatchable", n, m1=m1,
                                    m2=edge_list(full_m), removed_edge=None, removed_vertex=None), tags
        return False, _cert("NotRandomlyMatchable", "not-equimatchable", n,
                            perfect_matching=edge_list(full_m)), tags

    if is_factor_critical(h):
        tags.add("factor-critical")
        hit = _triple_with_perfect_rest(h)
        if hit is None:
            return True, _cert("FactorCriticalEquimatchable", "equimatchable", n), tags
        _, m = hit
        return False, _cert("TwoMaximalMatchings", "not-equimatchable", n, m1=edge_list(m),
                            m2=edge_list(full_m), removed_edge=None, removed_vertex=None), tags

    parts = bipartition(h)
    if parts is not None:
        tags.add("bipartite")
        U, W = sorted(parts.U), sorted(parts.W)
        deficient = []
        for u in U:
            matching, S = neighbourhood_saturation(h, u, avoid_v=True)
            if S is None:
                hu = h.remove_vertices_mask(1 << u)
                weak = extend_to_maximal(hu, matching)
                if nu == len(U):
                    return False, _cert("TwoMaximalMatchings", "not-equimatchable", n, m1=edge_list(weak),
                                        m2=edge_list(full_m), removed_edge=None, removed_vertex=None), tags
                return False, _cert("BipartiteWeakVertex", "not-equimatchable", n, U=U, W=W, u=u,
                                    matching=edge_list(matching)), tags
            deficient.append([u, S])
        return True, _cert("BipartiteEquimatchableWitness", "equimatchable", n, U=U, W=W,
                           deficient=deficient), tags

    if guard is not None and n > guard:
        raise UndecidedAtScale(list(range(n)), guard)
    ok, cert = _oracle_equimatchable_local(h, guard, "equimatchable", "not-equimatchable")
    return ok, cert, tags


def is_equimatchable(g: Graph, guard: Optional[int] = ORACLE_GUARD) -> Classification:
    return _componentwise(g, "equimatchable", lambda h: _equimatchable_component(h, guard))


def is_equimatchable_oracle(g: Graph, guard: Optional[int] = ORACLE_GUARD) -> Classification:
    ok, cert = _oracle_equimatchable_local(g, guard, "equimatchable", "not-equimatchable")
    tags = {"equimatchable"} if ok else set()
    return Classification(ok, frozenset(tags), cert)


# ---- ESE ------------------------------------------------------------------------------


@lru_cache(maxsize=1)
def _catalog_forms() -> tuple[str, ...]:
    return tuple(canonical_form(c) for c in small_catalog())


def fc_ese_structure(h: Graph) -> Optional[Certificate]:
    """Structural witness for a factor-critical graph on 2r+1 >= 7 vertices to be ESE.

    Odd clique; K_{2r+1} minus a nonempty matching (complement has maximum
    degree 1); or an independent S, |S| >= 3, complete to the rest with
    nu(G - S) = 1.  Any such S is a clique component of the complement, so each
    clique component of size >= 3 is tried, and nu = 1 is read off the degree
    sequence of G - S: k, then k ones (a star), or 2, 2, 2 (a triangle).
    """
    n = h.n
    r = (n - 1) // 2
    hc = complement(h)
    cdeg = hc.degrees()
    if max(cdeg, default=0) == 0:
        return _cert("OddClique", "ese", n, r=r)
    if max(cdeg) <= 1:
        return _cert("G1Witness", "ese", n, removed=edge_list(hc.edges()))
    full = h.vertex_mask
    for comp in component_masks(hc):
        size = popcount(comp)
        if size < 3:
            continue
        if any((hc.rows[v] | (1 << v)) != comp for v in bits(comp)):
            continue
        rest = full & ~comp
        degs = sorted((popcount(h.rows[v] & rest) for v in bits(rest)), reverse=True)
        nz = [d for d in degs if d]
        star = bool(nz) and nz[0] >= 1 and nz[1:] == [1] * nz[0]
        if star or nz == [2, 2, 2]:
            return _cert("G2Witness", "ese", n, S=list(bits(comp)))
    return None


def _bipartite_ese(h: Graph, parts: Bipartition, certify: bool, claim_yes: str = "ese",
                   claim_no: str = "not-ese") -> tuple[bool, Optional[Certificate]]:
    n = h.n
    U, W = sorted(parts.U), sorted(parts.W)
    if len(U) == len(W):
        if not certify:
            return False, None
        for u in U:
            matching, S = neighbourhood_saturation(h, u, avoid_v=False)
            if S is None:
                return False, _cert("BipartiteRefutation", claim_no, n, U=U, W=W, u=u,
                                    matching=edge_list(matching))
        # no perfect matching: a maximum matching misses some u in U and saturates N(u)
        m = maximum_matching(h)
        sat = m.saturated
        u = next(x for x in U if not sat >> x & 1)
        return False, _cert("BipartiteRefutation", claim_no, n, U=U, W=W, u=u, matching=edge_list(m))
    deficient = []
    for u in U:
        matching, S = neighbourhood_saturation(h, u, avoid_v=False)
        if S is None:
            if not certify:
                return False, None
            return False, _cert("BipartiteRefutation", claim_no, n, U=U, W=W, u=u,
                                matching=edge_list(matching))
        deficient.append([u, S])
    if not certify:
        return True, None
    return True, _cert("BipartiteESEWitness", claim_yes, n, U=U, W=W, deficient=deficient)


def _ese_component(h: Graph, certify: bool = True) -> tuple[bool, Optional[Certificate], set]:
    n = h.n
    if n <= 2:
        tags = {"factor-critical"} if n == 1 else set()
        return True, (_cert("Trivial", "ese", n) if certify else None), tags
    parts = bipartition(h)
    if parts is not None:
        ok, cert = _bipartite_ese(h, parts, certify)
        return ok, cert, {"bipartite"}
    struct = None
    if n >= 7 and n % 2 == 1:
        struct = fc_ese_structure(h)
        if struct is None and not certify:
            return False, None, set()
    if not is_factor_critical(h):
        if not certify:
            return False, None, set()
        return False, _cert("NotFactorCritical", "not-ese", n, odd_cycle=find_odd_cycle(h),
                            vertex=non_factor_critical_vertex(h)), set()
    tags = {"factor-critical"}
    if n <= 5:
        catalog = small_catalog()
        try:
            index = _catalog_forms().index(canonical_form(h))
        except ValueError:
            index = None
        if index is not None:
            if not certify:
                return True, None, tags
            phi = find_isomorphism(catalog[index], h)
            return True, _cert("SmallCatalogMatch", "ese", n, index=index, mapping=phi), tags
    elif struct is not None:
        return True, struct, tags
    if not certify:
        return False, None, tags
    return False, _fc_refutation(h, "not-ese"), tags


def is_ese(g: Graph) -> Classification:
    return _componentwise(g, "ese", _ese_component)


def ese_verdict(g: Graph) -> bool:
    """``is_ese(g).verdict`` without building certificates."""
    for comp in component_masks(g):
        h, _ = induced_subgraph(g, bits(comp))
        if not _ese_component(h, certify=False)[0]:
            return False
    return True


def is_ese_oracle(g: Graph, guard: Optional[int] = ORACLE_GUARD) -> Classification:
    ok, cert = _oracle_equimatchable_local(g, guard, "ese", "not-ese")
    if not ok:
        return Classification(False, frozenset(), cert)
    base = cert.payload
    for u, v in g.edges():
        sub_ok, sub = _oracle_equimatchable_local(g.remove_edge(u, v), guard, "ese", "not-ese",
                                                  removed_edge=[u, v])
        if not sub_ok:
            return Classification(False, frozenset({"equimatchable"}), sub)
    return Classification(True, frozenset(_CLAIM_TAGS["ese"]), Certificate(
        "OracleExhaustive", "ese", tuple(range(g.n)), dict(base)))


# ---- VSE ------------------------------------------------------------------------------


def _first_non_edge(h: Graph) -> list[int]:
    for u in range(h.n):
        missing = h.vertex_mask & ~h.rows[u] & ~((2 << u) - 1)
        if missing:
            return [u, (missing & -missing).bit_length() - 1]
    raise ValueError("graph is complete")


def _vse_component(h: Graph) -> ComponentResult:
    n = h.n
    if n <= 2 or is_complete(h):
        return True, _cert("VSEForm", "vse", n, form="complete", witness=None), set()
    parts = bipartition(h)
    if parts is None:
        return False, _cert("NonBipartiteNonComplete", "not-vse", n, odd_cycle=find_odd_cycle(h),
                            non_edge=_first_non_edge(h)), set()
    if h.num_edges() == len(parts.U) * len(parts.W):
        return True, _cert("VSEForm", "vse", n, form="complete-bipartite", witness=None), {"bipartite"}
    ok, cert = _bipartite_ese(h, parts, True, claim_yes="ese", claim_no="not-vse")
    if ok:
        return True, _cert("VSEForm", "vse", n, form="bipartite-ESE", witness=cert), {"bipartite", "ese"}
    return False, cert, {"bipartite"}


def is_vse(g: Graph) -> Classification:
    return _componentwise(g, "vse", _vse_component)


def is_vse_oracle(g: Graph, guard: Optional[int] = ORACLE_GUARD) -> Classification:
    ok, cert = _oracle_equimatchable_local(g, guard, "vse", "not-vse")
    if not ok:
        return Classification(False, frozenset(), cert)
    base = cert.payload
    for v in range(g.n):
        sub_ok, sub = _oracle_equimatchable_local(g.remove_vertices_mask(1 << v), guard, "vse", "not-vse",
                                                  removed_vertex=v)
        if not sub_ok:
            return Classification(False, frozenset({"equimatchable"}), sub)
    return Classification(True, frozenset(_CLAIM_TAGS["vse"]), Certificate(
        "OracleExhaustive", "vse", tuple(range(g.n)), dict(base)))


# ---- critical edges -----------------------------------------------------------------------


def critical_edges(g: Graph, guard: Optional[int] = ORACLE_GUARD) -> list[tuple[int, int]]:
    """Edges whose deletion destroys equimatchability (g must be equimatchable)."""
    if not is_equimatchable(g, guard):
        raise NotEquimatchableError("critical edges are only defined for equimatchable graphs")
    return [(u, v) for u, v in g.edges() if not is_equimatchable(g.remove_edge(u, v), guard)]


# ---- certificate replay ---------------------------------------------------------------------

_ESE_KINDS_CLAIMS = {"ese", "equimatchable"}
_ALLOWED = {
    "Trivial": {"ese", "vse", "equimatchable"},
    "OddClique": {"ese", "vse", "equimatchable"},
    "G1Witness": _ESE_KINDS_CLAIMS,
    "G2Witness": _ESE_KINDS_CLAIMS,
    "SmallCatalogMatch": _ESE_KINDS_CLAIMS,
    "BipartiteESEWitness": _ESE_KINDS_CLAIMS,
    "BipartiteEquimatchableWitness": {"equimatchable"},
    "BipartiteRefutation": {"not-ese", "not-vse"},
    "BipartiteWeakVertex": {"not-equimatchable", "not-ese", "not-vse"},
    "NotFactorCritical": {"not-ese"},
    "RandomlyMatchable": {"equimatchable"},
    "NotRandomlyMatchable": {"not-equimatchable", "not-ese", "not-vse"},
    "FactorCriticalEquimatchable": {"equimatchable"},
    "NonBipartiteNonComplete": {"not-vse"},
    "VSEForm": {"vse", "equimatchable"},
    "OracleExhaustive": {"equimatchable", "ese", "vse"},
    "Componentwise": {"equimatchable", "ese", "vse"},
    "TwoMaximalMatchings": {"not-equimatchable", "not-ese", "not-vse"},
}


def verify_certificate(g: Graph, cert: Certificate | dict, guard: Optional[int] = ORACLE_GUARD) -> bool:
    """Replay ``cert`` against ``g``; False on any mismatch."""
    try:
        if isinstance(cert, dict):
            cert = Certificate.from_dict(cert)
        return _verify(g, cert, guard, top=True)
    except (ValueError, KeyError, TypeError, IndexError, AttributeError, StopIteration):
        return False


def _bip_parts(h: Graph, p: dict) -> Optional[Bipartition]:
    parts = Bipartition(frozenset(p["U"]), frozenset(p["W"]))
    if len(parts.U) != len(p["U"]) or len(parts.W) != len(p["W"]):
        return None
    if not is_valid_bipartition(h, parts) or not is_connected(h):
        return None
    return parts


def _verify(g: Graph, cert: Certificate, guard: Optional[int], top: bool) -> bool:
    if cert.claim not in _ALLOWED[cert.kind]:
        return False
    comp = list(cert.component)
    if len(set(comp)) != len(comp) or any(not 0 <= v < g.n for v in comp):
        return False
    cmask = mask_of(comp)
    if g.neighborhood(comp) & ~cmask:
        return False
    if top and cert.positive and cmask != g.vertex_mask:
        return False

    if cert.kind == "Componentwise":
        expected = sorted(component_masks(g, within=cmask))
        parts = cert.payload["parts"]
        got = sorted(mask_of(p.component) for p in parts)
        if got != expected:
            return False
        return all(p.claim == cert.claim and _verify(g, p, guard, top=False) for p in parts)

    h, index = induced_subgraph(g, comp)
    local = {v: i for i, v in enumerate(index)}
    c = cert.relabel_with(local.__getitem__)
    p = c.payload
    n = h.n
    kind = c.kind

    if kind == "TwoMaximalMatchings":
        target = h
        if p.get("removed_edge") is not None:
            if cert.claim != "not-ese" or p.get("removed_vertex") is not None:
                return False
            a, b = p["removed_edge"]
            if not h.has_edge(a, b):
                return False
            target = h.remove_edge(a, b)
        elif p.get("removed_vertex") is not None:
            if cert.claim != "not-vse":
                return False
            target = h.remove_vertices_mask(1 << p["removed_vertex"])
        m1 = [tuple(e) for e in p["m1"]]
        m2 = [tuple(e) for e in p["m2"]]
        return len(m1) != len(m2) and is_maximal(target, m1) and is_maximal(target, m2)

    if kind == "Trivial":
        return n <= 2 and is_connected(h)

    if kind == "OddClique":
        return n == 2 * p["r"] + 1 and is_complete(h)

    if kind == "G1Witness":
        removed = [tuple(e) for e in p["removed"]]
        if n < 7 or n % 2 == 0 or not removed:
            return False
        if not is_matching_of(complete_graph(n), removed):
            return False
        expect = complete_graph(n)
        for a, b in removed:
            expect = expect.remove_edge(a, b)
        return expect == h

    if kind == "G2Witness":
        S = p["S"]
        smask = mask_of(S)
        rest = h.vertex_mask & ~smask
        if n < 7 or n % 2 == 0 or len(set(S)) != len(S) or len(S) < 3:
            return False
        if popcount(rest) != len(S) + 1 or not is_independent(h, S):
            return False
        if any((h.rows[s] & rest) != rest for s in S):
            return False
        hr, _ = induced_subgraph(h, bits(rest))
        return matching_number(hr) == 1

    if kind == "SmallCatalogMatch":
        cat = small_catalog()[p["index"]]
        phi = p["mapping"]
        if cat.n != n or sorted(phi) != list(range(n)):
            return False
        return all(cat.has_edge(i, j) == h.has_edge(phi[i], phi[j])
                   for i in range(n) for j in range(i + 1, n))

    if kind in ("BipartiteESEWitness", "BipartiteEquimatchableWitness"):
        parts = _bip_parts(h, p)
        if parts is None:
            return False
        strict = kind == "BipartiteESEWitness"
        if (len(parts.U) >= len(parts.W)) if strict else (len(parts.U) > len(parts.W)):
            return False
        table = {u: S for u, S in p["deficient"]}
        if set(table) != set(parts.U):
            return False
        for u, S in table.items():
            if not S or len(set(S)) != len(S) or mask_of(S) & ~h.rows[u]:
                return False
            slack = popcount(h.neighborhood(S)) - len(S)
            if slack > (-1 if strict else 0):
                return False
        return True

    if kind in ("BipartiteRefutation", "BipartiteWeakVertex"):
        parts = _bip_parts(h, p)
        if parts is None or len(parts.U) > len(parts.W) or n < 3:
            return False
        u = p["u"]
        if u not in parts.U:
            return False
        m = [tuple(e) for e in p["matching"]]
        if not is_matching_of(h, m):
            return False
        sat = mask_of(x for e in m for x in e)
        if h.rows[u] & ~sat:
            return False
        if kind == "BipartiteWeakVertex":
            return not sat >> u & 1
        if c.claim == "not-vse":
            return h.num_edges() != len(parts.U) * len(parts.W)
        return True

    if kind == "NotFactorCritical":
        if n < 3 or not is_connected(h) or not is_odd_cycle(h, p["odd_cycle"]):
            return False
        if n % 2 == 0:
            return True
        v = p["vertex"]
        return v is not None and 0 <= v < n and nu_without(h, 1 << v) < (n - 1) // 2

    if kind == "RandomlyMatchable":
        if p["form"] == "complete":
            return is_complete(h)
        return p["form"] == "complete-bipartite" and is_complete_bipartite(h)

    if kind == "NotRandomlyMatchable":
        m = [tuple(e) for e in p["perfect_matching"]]
        return (is_connected(h) and is_matching_of(h, m) and 2 * len(m) == n
                and not is_randomly_matchable(h))

    if kind == "FactorCriticalEquimatchable":
        return is_factor_critical(h) and _triple_with_perfect_rest(h) is None

    if kind == "NonBipartiteNonComplete":
        a, b = p["non_edge"]
        return (is_connected(h) and is_odd_cycle(h, p["odd_cycle"]) and a != b
                and 0 <= a < n and 0 <= b < n and not h.has_edge(a, b))

    if kind == "VSEForm":
        form = p["form"]
        if form == "complete":
            return is_complete(h)
        if form == "complete-bipartite":
            return is_complete_bipartite(h)
        w = p.get("witness")
        if form != "bipartite-ESE" or w is None or w.kind != "BipartiteESEWitness":
            return False
        lifted = cert.payload["witness"]
        return tuple(sorted(lifted.component)) == tuple(sorted(comp)) and _verify(g, lifted, guard, top=False)

    if kind == "OracleExhaustive":
        oracle = {"equimatchable": is_equimatchable_oracle, "ese": is_ese_oracle, "vse": is_vse_oracle}
        return oracle[c.claim](h, guard).verdict

    return False


def classify(g: Graph, which, guard: Optional[int] = ORACLE_GUARD) -> dict[str, Classification]:
    out = {}
    for w in which:
        if w == "equimatchable":
            out[w] = is_equimatchable(g, guard)
        elif w == "ese":
            out[w] = is_ese(g)
        elif w == "vse":
            out[w] = is_vse(g)
        else:
            raise ValueError(f"unknown class {w!r}")
    return out
