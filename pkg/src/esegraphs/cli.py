"""Command-line frontend: classify, decompose, gen, census, oracle.

Exit status: 0 ran to completion, 2 input or parameter error, 3 census found a
discrepancy or a property violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from . import census as census_mod
from .decomposition import gallai_edmonds, is_factor_critical, vertex_strengths
from .equimatch import (
    UndecidedAtScale,
    is_equimatchable,
    is_equimatchable_oracle,
    is_ese,
    is_ese_oracle,
    is_vse,
    is_vse_oracle,
)
from .families import (
    CATALOG_NAMES,
    FamilyParameterError,
    G2Shape,
    all_fc_ese_constructions,
    gen_bipartite_ese,
    gen_g1,
    gen_g2,
    small_catalog,
)
from .graph_core import (
    Graph,
    GraphError,
    bits,
    complete_bipartite_graph,
    complete_graph,
    component_masks,
    decode_edge_list,
    decode_graph6,
    encode_edge_list,
    encode_graph6,
    induced_subgraph,
)
from .matching import ORACLE_GUARD, OracleGuardError, is_randomly_matchable

EXIT_OK, EXIT_INPUT, EXIT_CENSUS = 0, 2, 3
CLASSIFY_WHICH = ("equimatchable", "ese", "vse", "factor-critical", "randomly-matchable")
ORACLE_WHICH = ("equimatchable", "ese", "vse")


class InputError(Exception):
    pass


@dataclass
class CliConfig:
    inputs: list = field(default_factory=list)  # empty means standard input
    fmt: str = "graph6"
    structured: bool = False
    guard: Optional[int] = ORACLE_GUARD
    workers: int = 1
    warnings: list = field(default_factory=list)

    @classmethod
    def from_args(cls, args) -> "CliConfig":
        cfg = cls(
            inputs=list(getattr(args, "inputs", []) or []),
            fmt=getattr(args, "format", "graph6"),
            structured=getattr(args, "json", False),
            workers=max(1, getattr(args, "workers", 1)),
        )
        guard = getattr(args, "guard", None)
        if getattr(args, "force_oracle", False):
            cfg.guard = guard
            cfg.warnings.append(
                "--force-oracle: exhaustive enumeration "
                + (f"guarded at n <= {guard}" if guard is not None else "is unguarded")
                + "; runtime is exponential in n")
        elif guard is not None:
            cfg.guard = guard
            if guard != ORACLE_GUARD:
                cfg.warnings.append(f"oracle guard overridden: n <= {guard}")
        return cfg


# ---- input ------------------------------------------------------------------------------


def _read_sources(cfg: CliConfig) -> list[tuple[str, str]]:
    if not cfg.inputs:
        return [("<stdin>", sys.stdin.read())]
    out = []
    for path in cfg.inputs:
        try:
            with open(path) as fh:
                out.append((path, fh.read()))
        except OSError as exc:
            raise InputError(f"{path}: {exc.strerror}") from None
    return out


def parse_graphs(text: str, fmt: str, source: str = "<input>") -> list[Graph]:
    """graph6: one word per line.  edges: blocks separated by blank lines."""
    graphs = []
    if fmt == "graph6":
        for lineno, line in enumerate(text.splitlines(), 1):
            word = line.strip()
            if not word:
                continue
            try:
                graphs.append(decode_graph6(word))
            except GraphError as exc:
                raise InputError(f"{source}: line {lineno}: {exc}") from None
        return graphs
    block: list[str] = []
    start = 1
    for lineno, line in enumerate(text.splitlines() + [""], 1):
        if line.strip():
            if not block:
                start = lineno
            block.append(line)
            continue
        if block and any(b.split("#", 1)[0].strip() for b in block):
            try:
                graphs.append(decode_edge_list("\n".join(block)))
            except GraphError as exc:
                line_no = start + getattr(exc, "line", 1) - 1
                msg = str(exc).split(": ", 1)[-1]
                raise InputError(f"{source}: line {line_no}: {msg}") from None
        block = []
    return graphs


def read_graphs(cfg: CliConfig) -> list[Graph]:
    graphs = []
    for source, text in _read_sources(cfg):
        graphs += parse_graphs(text, cfg.fmt, source)
    return graphs


def emit_graph(g: Graph, fmt: str) -> str:
    return encode_graph6(g) if fmt == "graph6" else encode_edge_list(g)


# ---- per-graph work -------------------------------------------------------------------------


def randomly_matchable(g: Graph) -> bool:
    """Every component is K_{2r} or K_{r,r}."""
    for comp in component_masks(g):
        h, _ = induced_subgraph(g, bits(comp))
        if not is_randomly_matchable(h):
            return False
    return True


def classify_one(args) -> dict:
    g, which, guard = args
    out: dict = {"graph6": encode_graph6(g), "n": g.n, "results": {}}
    for w in which:
        try:
            if w == "equimatchable":
                res = is_equimatchable(g, guard).to_dict()
            elif w == "ese":
                res = is_ese(g).to_dict()
            elif w == "vse":
                res = is_vse(g).to_dict()
            elif w == "factor-critical":
                res = {"verdict": "yes" if is_factor_critical(g) else "no"}
            else:
                res = {"verdict": "yes" if randomly_matchable(g) else "no"}
        except UndecidedAtScale as exc:
            res = {"verdict": "undecided", "error": str(exc)}
        out["results"][w] = res
    return out


def oracle_one(args) -> dict:
    g, which, guard = args
    fns = {"equimatchable": is_equimatchable_oracle, "ese": is_ese_oracle, "vse": is_vse_oracle}
    out: dict = {"graph6": encode_graph6(g), "n": g.n, "results": {}}
    for w in which:
        try:
            out["results"][w] = fns[w](g, guard).to_dict()
        except OracleGuardError as exc:
            out["results"][w] = {"verdict": "undecided", "error": str(exc)}
    return out


def decompose_one(args) -> dict:
    g, guard = args
    ge = gallai_edmonds(g)
    method, strengths = vertex_strengths(g, guard)
    d = {"graph6": encode_graph6(g), "n": g.n}
    d.update(ge.as_dict())
    d["factor_critical"] = is_factor_critical(g)
    d["strength_method"] = method
    d["strength"] = strengths
    return d


def _map(fn, items: list, workers: int) -> list:
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _parse_which(text: str, allowed: Sequence[str]) -> list[str]:
    which = [w.strip() for w in text.split(",") if w.strip()]
    bad = [w for w in which if w not in allowed]
    if bad or not which:
        raise InputError(f"--which must be a comma list drawn from {', '.join(allowed)}; got {text!r}")
    return which


def _human_results(rec: dict) -> str:
    parts = [rec["graph6"]]
    for w, res in rec["results"].items():
        cert = res.get("certificate")
        tail = f" [{cert['kind']}]" if cert else ""
        parts.append(f"{w}={res['verdict']}{tail}")
    return "  ".join(parts)


def _emit_records(records: list[dict], cfg: CliConfig, human) -> None:
    for msg in cfg.warnings:
        print(f"warning: {msg}", file=sys.stderr)
    for i, rec in enumerate(records):
        if cfg.structured:
            rec = dict(rec, index=i)
            if cfg.warnings:
                rec["warnings"] = cfg.warnings
            rec["guard"] = cfg.guard
            print(json.dumps(rec, sort_keys=True))
        else:
            print(human(rec))


# ---- commands -------------------------------------------------------------------------------


def cmd_classify(cfg: CliConfig, which: Sequence[str]) -> int:
    graphs = read_graphs(cfg)
    records = _map(classify_one, [(g, tuple(which), cfg.guard) for g in graphs], cfg.workers)
    _emit_records(records, cfg, _human_results)
    return EXIT_OK


def cmd_oracle(cfg: CliConfig, which: Sequence[str]) -> int:
    graphs = read_graphs(cfg)
    records = _map(oracle_one, [(g, tuple(which), cfg.guard) for g in graphs], cfg.workers)
    _emit_records(records, cfg, _human_results)
    return EXIT_OK


def _human_decomp(rec: dict) -> str:
    s = " ".join(f"{v}:{x[0]}" for v, x in enumerate(rec["strength"]))
    return (f"{rec['graph6']}  D={rec['D']} A={rec['A']} C={rec['C']} "
            f"factor-critical={'yes' if rec['factor_critical'] else 'no'} "
            f"strength({rec['strength_method']})=[{s}]")


def cmd_decompose(cfg: CliConfig) -> int:
    graphs = read_graphs(cfg)
    records = _map(decompose_one, [(g, cfg.guard) for g in graphs], cfg.workers)
    _emit_records(records, cfg, _human_decomp)
    return EXIT_OK


def generate(family: str, params: Sequence[str], seed: int = 0) -> list[tuple[str, Graph]]:
    def ints(k):
        if len(params) != k:
            raise FamilyParameterError(f"{family} takes {k} integer parameter(s), got {len(params)}")
        try:
            return [int(p) for p in params]
        except ValueError:
            raise FamilyParameterError(f"{family} parameters must be integers: {list(params)}") from None

    if family == "g1":
        r, k = ints(2)
        return [(f"g1(r={r},k={k})", gen_g1(r, k))]
    if family == "g2":
        shape = params[1] if len(params) > 1 else None
        try:
            if len(params) == 2 and shape == "triangle":
                r = int(params[0])
                return [(f"g2(r={r},triangle)", gen_g2(r, G2Shape.triangle()))]
            if len(params) == 3 and shape == "star":
                r, k = int(params[0]), int(params[2])
                return [(f"g2(r={r},star({k}))", gen_g2(r, G2Shape.star(k)))]
        except ValueError as exc:
            if isinstance(exc, FamilyParameterError):
                raise
            raise FamilyParameterError(f"g2 parameters must be integers: {list(params)}") from None
        raise FamilyParameterError("g2 takes 'R star K' or 'R triangle'")
    if family == "bip":
        r, s = ints(2)
        return [(f"bip(r={r},s={s},seed={seed})", gen_bipartite_ese(r, s, seed))]
    if family == "catalog":
        ints(0)
        return list(zip(CATALOG_NAMES, small_catalog()))
    if family == "complete":
        (n,) = ints(1)
        if n < 0:
            raise FamilyParameterError("complete takes n >= 0")
        return [(f"K{n}", complete_graph(n))]
    if family == "complete-bipartite":
        r, s = ints(2)
        if r < 0 or s < 0:
            raise FamilyParameterError("complete-bipartite takes r, s >= 0")
        return [(f"K{r},{s}", complete_bipartite_graph(r, s))]
    if family == "fc-ese":
        (r,) = ints(1)
        if r < 3:
            raise FamilyParameterError("fc-ese takes r >= 3")
        return all_fc_ese_constructions(r)
    raise FamilyParameterError(f"unknown family {family!r}")


def cmd_gen(cfg: CliConfig, family: str, params: Sequence[str], seed: int = 0) -> int:
    items = generate(family, params, seed)
    for name, g in items:
        if cfg.structured:
            print(json.dumps({"name": name, "graph6": encode_graph6(g), "n": g.n, "edges": g.edges()}))
        elif cfg.fmt == "graph6":
            print(encode_graph6(g))
        else:
            print(f"# {name}")
            print(encode_edge_list(g))
    return EXIT_OK


def cmd_census(cfg: CliConfig, n: int, mode: str, checks: Sequence[str], scope: str,
               stream_path: Optional[str]) -> int:
    stream = None
    if stream_path is not None:
        cfg.inputs = [stream_path]
        cfg.fmt = "graph6"
        stream = read_graphs(cfg)
    try:
        if mode == "fc-ese":
            report = census_mod.census_fc_ese(n, cfg.workers, stream=stream, guard=cfg.guard)
        else:
            if stream is None:
                graphs = list(census_mod.enumerate_graphs(n, connected_only=(scope == "connected")))
            else:
                graphs = [g for g in stream if g.n == n]
            if mode == "cross-validate":
                report = census_mod.cross_validate(graphs, checks, cfg.guard, cfg.workers, n=n, scope=scope)
            elif mode == "properties":
                report = census_mod.verify_properties(graphs, n=n, scope=scope)
            else:
                report = census_mod.CensusReport(n=n, scope=scope, scanned=len(graphs))
                report.counts["classes"] = len(graphs)
    except census_mod.CensusScopeError as exc:
        raise InputError(str(exc)) from None
    report.notes += cfg.warnings
    for msg in cfg.warnings:
        print(f"warning: {msg}", file=sys.stderr)
    print(report.to_json() if cfg.structured else report.summary())
    return EXIT_OK if report.ok else EXIT_CENSUS


# ---- argument parsing ---------------------------------------------------------------------------


def _common(p: argparse.ArgumentParser, inputs: bool = True) -> None:
    if inputs:
        p.add_argument("inputs", nargs="*", help="input files (default: standard input)")
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.add_argument("--json", action="store_true", help="one JSON object per line")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--guard", type=int, default=None, help=f"oracle size guard (default {ORACLE_GUARD})")
    p.add_argument("--force-oracle", action="store_true", help="lift the oracle guard (warning is echoed)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="esegraphs", description="equimatchable / ESE / VSE graph toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="structural recognisers with certificates")
    _common(p)
    p.add_argument("--which", default="equimatchable,ese,vse",
                   help="comma list from " + ",".join(CLASSIFY_WHICH))

    p = sub.add_parser("oracle", help="exhaustive maximal-matching oracle")
    _common(p)
    p.add_argument("--which", default="equimatchable,ese,vse", help="comma list from " + ",".join(ORACLE_WHICH))

    p = sub.add_parser("decompose", help="Gallai-Edmonds decomposition and vertex strength")
    _common(p)

    p = sub.add_parser("gen", help="generate family members")
    _common(p, inputs=False)
    p.add_argument("family", choices=("g1", "g2", "bip", "catalog", "complete", "complete-bipartite", "fc-ese"))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("census", help="exhaustive census and cross-validation")
    _common(p, inputs=False)
    p.add_argument("n", type=int)
    p.add_argument("mode", choices=("fc-ese", "cross-validate", "properties", "count"))
    p.add_argument("--checks", default="ese", help="for cross-validate: comma list from " + ",".join(ORACLE_WHICH))
    p.add_argument("--all", dest="scope", action="store_const", const="all", default="connected",
                   help="scan all graphs, not only connected ones")
    p.add_argument("--input", dest="stream", default=None, help="external graph6 stream instead of built-in enumeration")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    cfg = CliConfig.from_args(args)
    try:
        if args.command == "classify":
            return cmd_classify(cfg, _parse_which(args.which, CLASSIFY_WHICH))
        if args.command == "oracle":
            return cmd_oracle(cfg, _parse_which(args.which, ORACLE_WHICH))
        if args.command == "decompose":
            return cmd_decompose(cfg)
        if args.command == "gen":
            return cmd_gen(cfg, args.family, args.params, args.seed)
        if args.command == "census":
            checks = _parse_which(args.checks, ORACLE_WHICH)
            return cmd_census(cfg, args.n, args.mode, checks, args.scope, args.stream)
    except FamilyParameterError as exc:
        sub = {a.dest: a for a in ap._actions}.get("command")
        usage = sub.choices[args.command].format_usage() if sub else ap.format_usage()
        print(usage.rstrip(), file=sys.stderr)
        print(f"esegraphs gen: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, GraphError) as exc:
        print(f"esegraphs: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
