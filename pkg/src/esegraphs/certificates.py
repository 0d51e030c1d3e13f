"""Certificate records and their JSON form.

A certificate asserts one ``claim`` about the subgraph induced by ``component``
(original vertex labels).  For negative claims the component must be a union of
connected components of the input, so the refutation lifts to the whole graph;
positive claims about a disconnected graph use a ``Componentwise`` record.

Schema (stable)::

    {"kind": str, "claim": str, "component": [int, ...], "payload": {...}}

Payload keys by kind:

    Trivial                         {}
    Componentwise                   {"parts": [certificate, ...]}
    TwoMaximalMatchings             {"m1": edges, "m2": edges,
                                     "removed_edge": [u, v] | null,
                                     "removed_vertex": v | null}
    OddClique                       {"r": int}
    G1Witness                       {"removed": edges}
    G2Witness                       {"S": [v, ...]}
    SmallCatalogMatch               {"index": int, "mapping": [v, ...]}
    BipartiteESEWitness             {"U": [...], "W": [...], "deficient": [[u, [S...]], ...]}
    BipartiteEquimatchableWitness   same fields as BipartiteESEWitness
    BipartiteRefutation             {"U": [...], "W": [...], "u": v, "matching": edges}
    BipartiteWeakVertex             {"U": [...], "W": [...], "u": v, "matching": edges}
    NotFactorCritical               {"odd_cycle": [...], "vertex": v | null}
    RandomlyMatchable               {"form": "complete" | "complete-bipartite"}
    NotRandomlyMatchable            {"perfect_matching": edges}
    FactorCriticalEquimatchable     {}
    NonBipartiteNonComplete         {"odd_cycle": [...], "non_edge": [u, v]}
    VSEForm                         {"form": "complete" | "complete-bipartite" | "bipartite-ESE",
                                     "witness": certificate | null}
    OracleExhaustive                {"maximal_matchings": int, "size": int | null}

``edges`` is a list of ``[u, v]`` pairs with u < v.  ``mapping[i]`` is the vertex
that catalog vertex ``i`` is sent to.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

CLAIMS = ("equimatchable", "not-equimatchable", "ese", "not-ese", "vse", "not-vse")
POSITIVE = {"equimatchable", "ese", "vse"}

KINDS = (
    "Trivial",
    "Componentwise",
    "TwoMaximalMatchings",
    "OddClique",
    "G1Witness",
    "G2Witness",
    "SmallCatalogMatch",
    "BipartiteESEWitness",
    "BipartiteEquimatchableWitness",
    "BipartiteRefutation",
    "BipartiteWeakVertex",
    "NotFactorCritical",
    "RandomlyMatchable",
    "NotRandomlyMatchable",
    "FactorCriticalEquimatchable",
    "NonBipartiteNonComplete",
    "VSEForm",
    "OracleExhaustive",
)

_VERTEX_KEYS = {"u", "vertex", "removed_vertex"}
_LIST_KEYS = {"S", "U", "W", "odd_cycle", "mapping"}
_PAIR_KEYS = {"removed_edge", "non_edge"}
_EDGES_KEYS = {"m1", "m2", "removed", "matching", "perfect_matching"}


@dataclass(frozen=True)
class Certificate:
    kind: str
    claim: str
    component: tuple = ()
    payload: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        if self.claim not in CLAIMS:
            raise ValueError(f"unknown claim {self.claim!r}")

    @property
    def positive(self) -> bool:
        return self.claim in POSITIVE

    def to_dict(self) -> dict:
        payload = {}
        for k, v in self.payload.items():
            if k == "parts":
                v = [p.to_dict() for p in v]
            elif k == "witness" and v is not None:
                v = v.to_dict()
            payload[k] = v
        return {"kind": self.kind, "claim": self.claim, "component": list(self.component), "payload": payload}

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        payload = dict(d.get("payload", {}))
        if "parts" in payload:
            payload["parts"] = [cls.from_dict(p) for p in payload["parts"]]
        if payload.get("witness") is not None:
            payload["witness"] = cls.from_dict(payload["witness"])
        return cls(d["kind"], d["claim"], tuple(d.get("component", ())), payload)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))

    def relabel(self, index: Sequence[int]) -> "Certificate":
        """Map local labels i -> index[i] throughout."""
        return self.relabel_with(index.__getitem__)

    def relabel_with(self, f: Callable[[int], int]) -> "Certificate":
        return Certificate(
            self.kind,
            self.claim,
            tuple(sorted(f(v) for v in self.component)),
            _relabel_payload(self.payload, f),
        )


def _edges(es, f=lambda x: x) -> list[list[int]]:
    return sorted(sorted((f(a), f(b))) for a, b in es)


def _relabel_payload(payload: dict, f: Callable[[int], int]) -> dict:
    out: dict[str, Any] = {}
    for k, v in payload.items():
        if v is None:
            out[k] = None
        elif k in _VERTEX_KEYS:
            out[k] = f(v)
        elif k in _LIST_KEYS:
            mapped = [f(x) for x in v]
            out[k] = mapped if k in ("odd_cycle", "mapping") else sorted(mapped)
        elif k in _PAIR_KEYS:
            out[k] = sorted(f(x) for x in v)
        elif k in _EDGES_KEYS:
            out[k] = _edges(v, f)
        elif k == "deficient":
            out[k] = sorted([f(u), sorted(f(x) for x in s)] for u, s in v)
        elif k == "witness":
            out[k] = v.relabel_with(f)
        elif k == "parts":
            out[k] = [p.relabel_with(f) for p in v]
        else:
            out[k] = v
    return out


def edge_list(es) -> list[list[int]]:
    return _edges(es)
