"""Exhaustive small-graph census and recogniser/oracle cross-validation.

Counts are always of canonical representatives.  The labeled sweep walks all
2^C(n,2) edge subsets in Gray-code order (one edge flip per step) and is
sharded by index range across worker processes; shard results are merged by
canonical word, so the report does not depend on the worker count.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .decomposition import is_factor_critical
from .equimatch import (
    ese_verdict,
    is_equimatchable,
    is_equimatchable_oracle,
    is_ese,
    is_ese_oracle,
    is_vse,
    is_vse_oracle,
    verify_certificate,
)
from .graph_core import (
    CANON_GUARD,
    Graph,
    GraphError,
    articulation_points,
    bits,
    canonical_form,
    component_masks,
    decode_graph6,
    diameter,
    encode_graph6,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_two_connected,
)
from .matching import ORACLE_GUARD, OracleGuardError, has_perfect_matching, matching_number

LABELED_GUARD = 8
CHECKS = ("equimatchable", "ese", "vse")

_RECOGNISERS = {"equimatchable": is_equimatchable, "ese": is_ese, "vse": is_vse}
_ORACLES = {"equimatchable": is_equimatchable_oracle, "ese": is_ese_oracle, "vse": is_vse_oracle}


class CensusScopeError(GraphError):
    pass


@dataclass
class CensusReport:
    n: Optional[int]
    scope: str
    counts: dict = field(default_factory=dict)
    classes: dict = field(default_factory=dict)
    discrepancies: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    scanned: int = 0
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies and not self.violations

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def summary(self) -> str:
        lines = [f"census n={self.n if self.n is not None else 'stream'} scope={self.scope} scanned={self.scanned}"]
        width = max([len(k) for k in self.counts] + [5])
        lines.append(f"  {'class':<{width}}  count")
        for k in sorted(self.counts):
            lines.append(f"  {k:<{width}}  {self.counts[k]}")
        lines.append(f"  discrepancies: {len(self.discrepancies)}")
        lines.append(f"  violations:    {len(self.violations)}")
        lines.append(f"  skipped:       {len(self.skipped)}")
        lines += [f"  note: {x}" for x in self.notes]
        return "\n".join(lines)


# ---- enumeration -----------------------------------------------------------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    # graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
    return [(i, j) for j in range(n) for i in range(j)]


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[str, ...]:
    """Canonical words of all graphs on n vertices, by one-vertex augmentation."""
    if n == 0:
        return (encode_graph6(Graph(0, ())),)
    if n == 1:
        return (canonical_form(Graph(1, (0,))),)
    seen = set()
    for word in _classes(n - 1):
        base = decode_graph6(word)
        for nb in range(1 << (n - 1)):
            rows = [r | ((nb >> v & 1) << (n - 1)) for v, r in enumerate(base.rows)]
            rows.append(nb)
            seen.add(canonical_form(Graph(n, rows, check=False)))
    return tuple(sorted(seen))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, in sorted-word order."""
    if n < 0:
        raise CensusScopeError("n must be non-negative")
    if n > LABELED_GUARD:
        raise CensusScopeError(
            f"built-in enumeration stops at n = {LABELED_GUARD}; pass an external graph6 stream for n = {n}"
        )
    for word in _classes(n):
        g = decode_graph6(word)
        if not connected_only or is_connected(g):
            yield g


def read_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    """One graph6 word per line; blank lines are skipped.  Errors carry the line number."""
    for lineno, line in enumerate(lines, 1):
        word = line.strip()
        if not word:
            continue
        try:
            yield decode_graph6(word)
        except GraphError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None


def _word(g: Graph) -> str:
    return canonical_form(g) if g.n <= CANON_GUARD else encode_graph6(g)


# ---- factor-critical ESE census --------------------------------------------------------------


def is_fc_ese(g: Graph) -> bool:
    """Connected, factor-critical and ESE (recogniser path)."""
    return is_connected(g) and ese_verdict(g) and is_factor_critical(g)


def _fc_ese_shard(n: int, lo: int, hi: int) -> list[str]:
    pairs = _pairs(n)
    rows = [0] * n
    gray = lo ^ (lo >> 1)
    for k in bits(gray):
        i, j = pairs[k]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    min_deg = 2 if n >= 3 else 0
    found = set()
    for idx in range(lo, hi):
        if idx > lo:
            i, j = pairs[(idx & -idx).bit_length() - 1]
            rows[i] ^= 1 << j
            rows[j] ^= 1 << i
        # factor-critical graphs on n >= 3 vertices have minimum degree >= 2
        if min_deg and min(r.bit_count() for r in rows) < min_deg:
            continue
        g = Graph(n, rows, check=False)
        if is_fc_ese(g):
            found.add(canonical_form(g))
    return sorted(found)


def _shards(total: int, workers: int) -> list[tuple[int, int]]:
    k = max(1, min(workers, total))
    step = -(-total // k)
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]


def census_fc_ese(
    n: int,
    workers: int = 1,
    stream: Optional[Iterable[Graph]] = None,
    confirm: bool = True,
    guard: Optional[int] = ORACLE_GUARD,
) -> CensusReport:
    """Connected factor-critical ESE classes on n vertices.

    Built in for n <= 7 (labeled-exhaustive); otherwise ``stream`` must supply
    the graphs.  Each positive class is re-checked by the exhaustive oracle
    when ``confirm`` is set.
    """
    if n < 1 or n % 2 == 0:
        raise CensusScopeError(f"factor-critical graphs have odd order, got n={n}")
    report = CensusReport(n=n, scope="connected")
    if stream is None:
        if n > 7:
            raise CensusScopeError(f"the built-in factor-critical census stops at n = 7; got n = {n}")
        total = 1 << (n * (n - 1) // 2)
        shards = _shards(total, workers)
        if workers > 1 and len(shards) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_fc_ese_shard, [n] * len(shards), *zip(*shards)))
        else:
            parts = [_fc_ese_shard(n, lo, hi) for lo, hi in shards]
        words = sorted(set().union(*parts))
        report.scanned = total
        report.notes.append(f"labeled-exhaustive over {total} edge subsets, {len(shards)} shard(s)")
    else:
        found = set()
        for g in stream:
            if g.n != n:
                continue
            report.scanned += 1
            if is_fc_ese(g):
                found.add(_word(g))
        words = sorted(found)
    for word in words:
        g = decode_graph6(word)
        if not confirm:
            continue
        try:
            oracle = is_ese_oracle(g, guard).verdict and is_factor_critical(g)
        except OracleGuardError:
            report.skipped.append({"graph6": word, "reason": "oracle guard"})
            continue
        if not oracle:
            report.discrepancies.append(
                {"graph6": word, "check": "fc-ese", "recognizer": "yes", "oracle": "no"})
    report.counts["fc-ese"] = len(words)
    report.classes["fc-ese"] = words
    return report


def census_fc_ese_upto(orders: Iterable[int], workers: int = 1) -> CensusReport:
    """Union of ``census_fc_ese`` over several orders."""
    out = CensusReport(n=None, scope="connected")
    words: list[str] = []
    for n in orders:
        r = census_fc_ese(n, workers)
        words += r.classes["fc-ese"]
        out.discrepancies += r.discrepancies
        out.skipped += r.skipped
        out.scanned += r.scanned
        out.notes.append(f"n={n}: {r.counts['fc-ese']} classes")
    out.counts["fc-ese"] = len(words)
    out.classes["fc-ese"] = sorted(words)
    return out


# ---- cross-validation ----------------------------------------------------------------------


def _dedupe(graphs: Iterable[Graph], report: CensusReport) -> list[Graph]:
    seen = set()
    out = []
    for g in graphs:
        w = _word(g)
        if g.n > CANON_GUARD and "some inputs above the canonizer guard are counted as given" not in report.notes:
            report.notes.append("some inputs above the canonizer guard are counted as given")
        if w in seen:
            continue
        seen.add(w)
        out.append(g)
    return out


def _cross_one(args):
    g, checks, guard = args
    word = encode_graph6(g)
    disc, skipped, yes = [], [], []
    for c in checks:
        try:
            a = _RECOGNISERS[c](g) if c != "equimatchable" else is_equimatchable(g, guard)
            b = _ORACLES[c](g, guard)
        except OracleGuardError as exc:
            skipped.append({"graph6": word, "check": c, "reason": str(exc)})
            continue
        if a.verdict != b.verdict:
            disc.append({"graph6": word, "check": c, "recognizer": a.answer, "oracle": b.answer})
        elif not verify_certificate(g, a.certificate, guard):
            disc.append({"graph6": word, "check": c, "recognizer": a.answer, "oracle": b.answer,
                         "reason": "certificate rejected"})
        if a.verdict:
            yes.append(c)
            if c == "ese" and is_connected(g) and is_factor_critical(g):
                yes.append("fc-ese")
    return word, disc, skipped, yes


def cross_validate(
    graphs: Iterable[Graph],
    checks: Iterable[str] = ("ese",),
    guard: Optional[int] = ORACLE_GUARD,
    workers: int = 1,
    n: Optional[int] = None,
    scope: str = "stream",
) -> CensusReport:
    checks = tuple(c for c in CHECKS if c in set(checks))
    if not checks:
        raise ValueError("no checks selected")
    report = CensusReport(n=n, scope=scope)
    todo = []
    for g in _dedupe(graphs, report):
        if guard is not None and g.n > guard:
            report.skipped.append({"graph6": encode_graph6(g), "check": "*", "reason": f"n > guard {guard}"})
            continue
        todo.append((g, checks, guard))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_cross_one, todo, chunksize=max(1, len(todo) // (8 * workers))))
    else:
        results = [_cross_one(t) for t in todo]
    counts = {c: 0 for c in checks}
    if "ese" in checks:
        counts["fc-ese"] = 0
    for word, disc, skipped, yes in results:
        report.scanned += 1
        report.discrepancies += disc
        report.skipped += skipped
        for c in yes:
            counts[c] += 1
    report.counts = counts
    return report


# ---- property corollaries ---------------------------------------------------------------------


def property_violations(g: Graph) -> list[str]:
    """Corollaries that must hold for a connected ESE graph; empty when g is not ESE."""
    if not ese_verdict(g):
        return []
    out = []
    n = g.n
    if n >= 3:
        nu = matching_number(g)
        for u, v in g.edges():
            if matching_number(g.remove_edge(u, v)) != nu:
                out.append(f"matching number drops when ({u}, {v}) is removed")
                break
        if has_perfect_matching(g):
            out.append("has a perfect matching")
    if n >= 3 and is_factor_critical(g):
        if not is_two_connected(g):
            out.append("factor-critical but not 2-connected")
        if diameter(g) > 2:
            out.append("factor-critical with diameter > 2")
    if articulation_points(g) and not is_bipartite(g):
        out.append("has a cut vertex but is not bipartite")
    return out


def verify_properties(graphs: Iterable[Graph], n: Optional[int] = None, scope: str = "stream") -> CensusReport:
    """Check the ESE corollaries on every ESE input (componentwise for disconnected inputs)."""
    report = CensusReport(n=n, scope=scope)
    ese_count = 0
    for g in _dedupe(graphs, report):
        report.scanned += 1
        word = encode_graph6(g)
        comps = component_masks(g)
        if ese_verdict(g):
            ese_count += 1
        for comp in comps:
            h, index = induced_subgraph(g, bits(comp))
            for msg in property_violations(h):
                where = "" if len(comps) == 1 else f" (component {index})"
                report.violations.append({"graph6": word, "property": msg + where})
    report.counts["ese"] = ese_count
    return report
