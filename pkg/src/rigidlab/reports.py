"""Machine-readable verification records and canonical JSON serialization.

Reports are built from named claims, each carrying what was claimed, what was
computed, and a verdict.  Claims with no asserted value are "recorded": they
document a computation without contributing to pass/fail.  Serialization is
canonical (sorted keys, fixed indentation, trailing newline), so a report
rerun with its recorded seeds is byte-identical.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .graphs import Graph, graph_to_json


def canonical_dumps(obj: object) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def graph_fingerprint(g: Graph) -> dict:
    payload = canonical_dumps(graph_to_json(g)).encode()
    return {
        "order": g.order,
        "edge_count": len(g.edges),
        "sha256": hashlib.sha256(payload).hexdigest(),
    }


@dataclass(frozen=True)
class Claim:
    name: str
    claimed: object
    computed: object
    verdict: str  # "pass" | "fail" | "recorded"

    def to_json(self) -> dict:
        return {"claimed": self.claimed, "computed": self.computed, "verdict": self.verdict}


def make_claim(name: str, claimed: object, computed: object) -> Claim:
    return Claim(name, claimed, computed, "pass" if computed == claimed else "fail")


def record_claim(name: str, computed: object) -> Claim:
    return Claim(name, None, computed, "recorded")


def claims_to_json(claims: list[Claim]) -> dict:
    return {c.name: c.to_json() for c in claims}


def claims_pass(claims: list[Claim]) -> bool:
    return all(c.verdict == "pass" for c in claims if c.verdict != "recorded")


@dataclass
class VerificationReport:
    """A named check over a constructed object: claims, notes, seeds, verdict."""

    kind: str
    params: dict
    claims: list[Claim] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seeds: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return claims_pass(self.claims)

    def claim(self, name: str) -> Claim:
        for c in self.claims:
            if c.name == name:
                return c
        raise KeyError(f"no claim named {name!r}")

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "claims": claims_to_json(self.claims),
            "notes": list(self.notes),
            "seeds": self.seeds,
            "passed": self.passed,
        }


@dataclass
class NonDefinabilityReport:
    """Record of one locality-violation run: the pair, the witness, the queries.

    Self-contained: rerunning with the recorded seeds reproduces every verdict
    byte for byte.
    """

    d: int
    r: int
    construction: dict
    graphs: dict
    hanf: dict
    queries: dict
    claims: list[Claim]
    rule: str
    seeds: dict
    trials: int
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return claims_pass(self.claims)

    def claim(self, name: str) -> Claim:
        for c in self.claims:
            if c.name == name:
                return c
        raise KeyError(f"no claim named {name!r}")

    def to_json(self) -> dict:
        return {
            "kind": "locality-separation",
            "d": self.d,
            "r": self.r,
            "construction": self.construction,
            "graphs": self.graphs,
            "hanf": self.hanf,
            "queries": self.queries,
            "claims": claims_to_json(self.claims),
            "rule": self.rule,
            "seeds": self.seeds,
            "trials": self.trials,
            "notes": list(self.notes),
            "passed": self.passed,
        }


def dump_report(report) -> str:
    return canonical_dumps(report.to_json())
