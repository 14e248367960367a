"""First-order formulas over relational signatures, and finite structures.

Formulas are trees over variables v0, v1, ...; all five connectives are
primitive nodes (nothing is desugared).  Structures are finite: the universe
is 0..size-1 and each relation symbol holds a set of tuples of its arity.
Evaluation is naive recursion over the universe, adequate for desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Optional

from .graphs import Graph


# ---------------------------------------------------------------------------
# signatures


@dataclass(frozen=True)
class Signature:
    """Relation symbols with positive arities; symbol names are unique."""

    relations: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        names = [name for name, _ in self.relations]
        if len(set(names)) != len(names):
            raise ValueError("signature has duplicate symbol names")
        for name, arity in self.relations:
            if not name:
                raise ValueError("signature has an empty symbol name")
            if arity < 1:
                raise ValueError(f"symbol {name!r} has non-positive arity {arity}")
        object.__setattr__(self, "relations", tuple(sorted(self.relations)))

    @staticmethod
    def of(arities: Mapping[str, int]) -> "Signature":
        return Signature(tuple(arities.items()))

    @cached_property
    def arity_map(self) -> dict[str, int]:
        return dict(self.relations)

    def arity(self, symbol: str) -> int:
        try:
            return self.arity_map[symbol]
        except KeyError:
            raise KeyError(f"symbol {symbol!r} is not in the signature") from None

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.arity_map


GRAPH_SIGNATURE = Signature.of({"~": 2})


# ---------------------------------------------------------------------------
# formulas


class Formula:
    """Base class for formula nodes; variables are identified by index i (vi)."""

    __slots__ = ()


@dataclass(frozen=True)
class Equals(Formula):
    left: int
    right: int


@dataclass(frozen=True)
class Atom(Formula):
    symbol: str
    args: tuple[int, ...]


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: int
    body: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: int
    body: Formula


_BINARY = (And, Or, Implies, Iff)


def validate_formula(f: Formula, sig: Signature) -> None:
    """Check that every atom uses a declared symbol with the right arity."""
    if isinstance(f, Atom):
        if f.symbol not in sig:
            raise ValueError(f"unknown relation symbol {f.symbol!r}")
        if len(f.args) != sig.arity(f.symbol):
            raise ValueError(
                f"symbol {f.symbol!r} has arity {sig.arity(f.symbol)}, got {len(f.args)} arguments"
            )
    elif isinstance(f, Not):
        validate_formula(f.body, sig)
    elif isinstance(f, _BINARY):
        validate_formula(f.left, sig)
        validate_formula(f.right, sig)
    elif isinstance(f, (Exists, Forall)):
        validate_formula(f.body, sig)
    elif not isinstance(f, Equals):
        raise TypeError(f"not a formula node: {f!r}")


def free_vars(f: Formula) -> frozenset[int]:
    """The free set, by its six defining clauses."""
    if isinstance(f, Equals):
        return frozenset((f.left, f.right))
    if isinstance(f, Atom):
        return frozenset(f.args)
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, _BINARY):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, (Exists, Forall)):
        return free_vars(f.body) - {f.var}
    raise TypeError(f"not a formula node: {f!r}")


def is_sentence(f: Formula) -> bool:
    return not free_vars(f)


# ---------------------------------------------------------------------------
# structures


@dataclass(frozen=True)
class SigmaStructure:
    """A finite structure: universe 0..universe_size-1 and one table per symbol."""

    signature: Signature
    universe_size: int
    tables: tuple[tuple[str, tuple[tuple[int, ...], ...]], ...]

    def __post_init__(self) -> None:
        if self.universe_size < 0:
            raise ValueError(f"universe size must be non-negative, got {self.universe_size}")
        given = dict(self.tables)
        for symbol in given:
            if symbol not in self.signature:
                raise ValueError(f"table for undeclared symbol {symbol!r}")
        canon = []
        for symbol, arity in self.signature.relations:
            rows = set()
            for row in given.get(symbol, ()):  # missing symbols get empty tables
                t = tuple(int(x) for x in row)
                if len(t) != arity:
                    raise ValueError(
                        f"tuple {t!r} has length {len(t)}, symbol {symbol!r} has arity {arity}"
                    )
                for x in t:
                    if not 0 <= x < self.universe_size:
                        raise ValueError(f"tuple entry {x} outside universe of size {self.universe_size}")
                rows.add(t)
            canon.append((symbol, tuple(sorted(rows))))
        object.__setattr__(self, "tables", tuple(canon))

    @staticmethod
    def make(universe_size: int, relations: Mapping[str, object], signature: Optional[Signature] = None) -> "SigmaStructure":
        if signature is None:
            arities = {}
            for symbol, rows in relations.items():
                rows = list(rows)  # type: ignore[arg-type]
                if not rows:
                    raise ValueError(
                        f"cannot infer the arity of empty relation {symbol!r}; pass a signature"
                    )
                arities[symbol] = len(rows[0])
            signature = Signature.of(arities)
        tables = tuple((s, tuple(tuple(r) for r in rows)) for s, rows in relations.items())  # type: ignore[union-attr]
        return SigmaStructure(signature, universe_size, tables)

    @cached_property
    def table_map(self) -> dict[str, frozenset[tuple[int, ...]]]:
        return {symbol: frozenset(rows) for symbol, rows in self.tables}

    def relation(self, symbol: str) -> frozenset[tuple[int, ...]]:
        try:
            return self.table_map[symbol]
        except KeyError:
            raise KeyError(f"symbol {symbol!r} is not in the signature") from None


class EvaluationError(ValueError):
    pass


def evaluate(s: SigmaStructure, f: Formula, assignment: Optional[Mapping[int, int]] = None) -> bool:
    """Standard recursive semantics; quantifiers range over the whole universe."""
    validate_formula(f, s.signature)
    asg: dict[int, int] = dict(assignment or {})
    missing = sorted(free_vars(f) - set(asg))
    if missing:
        names = ", ".join(f"v{i}" for i in missing)
        raise EvaluationError(f"unassigned free variables: {names}")
    for var, val in asg.items():
        if not 0 <= val < s.universe_size:
            raise EvaluationError(f"v{var} assigned {val}, outside universe of size {s.universe_size}")
    n = s.universe_size
    tables = s.table_map
    missing_mark = object()

    def rec(node: Formula) -> bool:
        if isinstance(node, Equals):
            return asg[node.left] == asg[node.right]
        if isinstance(node, Atom):
            return tuple(asg[i] for i in node.args) in tables[node.symbol]
        if isinstance(node, Not):
            return not rec(node.body)
        if isinstance(node, And):
            return rec(node.left) and rec(node.right)
        if isinstance(node, Or):
            return rec(node.left) or rec(node.right)
        if isinstance(node, Implies):
            return (not rec(node.left)) or rec(node.right)
        if isinstance(node, Iff):
            return rec(node.left) == rec(node.right)
        if isinstance(node, (Exists, Forall)):
            saved = asg.get(node.var, missing_mark)
            want = isinstance(node, Exists)
            result = not want
            for a in range(n):
                asg[node.var] = a
                if rec(node.body) == want:
                    result = want
                    break
            if saved is missing_mark:
                asg.pop(node.var, None)
            else:
                asg[node.var] = saved  # type: ignore[assignment]
            return result
        raise TypeError(f"not a formula node: {node!r}")

    return rec(f)


# ---------------------------------------------------------------------------
# the theory of graphs and the bridge to Graph

# forall v0 forall v1 (v0 ~ v1 -> v1 ~ v0)
GRAPH_AXIOM: Formula = Forall(0, Forall(1, Implies(Atom("~", (0, 1)), Atom("~", (1, 0)))))


def graph_theory() -> tuple[Formula, ...]:
    return (GRAPH_AXIOM,)


@dataclass(frozen=True)
class GraphTheoryCheck:
    """Whether the symmetry axiom holds, with irreflexivity reported separately.

    The axiom does not forbid x ~ x; callers who care get the flag."""

    models: bool
    irreflexive: bool

    def __bool__(self) -> bool:
        return self.models


def models_graph_theory(s: SigmaStructure) -> GraphTheoryCheck:
    if "~" not in s.signature or s.signature.arity("~") != 2:
        raise ValueError("structure has no binary symbol '~'")
    rel = s.relation("~")
    models = evaluate(s, GRAPH_AXIOM)
    irreflexive = all(a != b for a, b in rel)
    return GraphTheoryCheck(models, irreflexive)


def gaifman_graph(s: SigmaStructure) -> Graph:
    """Symmetrize a binary relation into a simple graph; loops are discarded."""
    if s.signature != GRAPH_SIGNATURE:
        raise ValueError("Gaifman construction expects exactly the signature {'~': 2}")
    edges = {(a, b) if a < b else (b, a) for a, b in s.relation("~") if a != b}
    return Graph(s.universe_size, tuple(edges))


def structure_from_graph(g: Graph) -> SigmaStructure:
    """The {~}-structure with both orientations of every edge."""
    rows: list[tuple[int, ...]] = []
    for u, v in g.edges:
        rows.append((u, v))
        rows.append((v, u))
    return SigmaStructure(GRAPH_SIGNATURE, g.order, (("~", tuple(rows)),))


def graph_from_structure(s: SigmaStructure) -> Graph:
    """Inverse bridge; requires the structure to model the graph theory."""
    check = models_graph_theory(s)
    if not check.models:
        raise ValueError("structure does not model the graph theory (relation is not symmetric)")
    return gaifman_graph(s)


def structure_to_json(s: SigmaStructure) -> dict:
    return {
        "universe": s.universe_size,
        "relations": {symbol: [list(t) for t in rows] for symbol, rows in s.tables},
    }


def structure_from_json(obj: object, signature: Optional[Signature] = None) -> SigmaStructure:
    if not isinstance(obj, dict):
        raise ValueError("structure JSON: expected an object")
    if "universe" not in obj:
        raise ValueError("structure JSON: missing field 'universe'")
    n = obj["universe"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError("structure JSON: field 'universe' must be a non-negative integer")
    raw = obj.get("relations", {})
    if not isinstance(raw, dict):
        raise ValueError("structure JSON: field 'relations' must be an object")
    relations: dict[str, list[tuple[int, ...]]] = {}
    for symbol, rows in raw.items():
        if not isinstance(rows, list) or not all(
            isinstance(t, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in t)
            for t in rows
        ):
            raise ValueError(
                f"structure JSON: field 'relations.{symbol}' must be a list of integer tuples"
            )
        relations[symbol] = [tuple(t) for t in rows]
    try:
        return SigmaStructure.make(n, relations, signature)
    except ValueError as exc:
        raise ValueError(f"structure JSON: field 'relations' invalid: {exc}") from exc
