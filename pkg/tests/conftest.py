"""Shared fixtures: small graph builders and brute-force oracles.

The oracles here are deliberately naive (permutation search, cut enumeration,
window enumeration, bottom-up truth tables) so they stay independent of the
implementations they check.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from rigidlab import (
    GRAPH_SIGNATURE,
    And,
    Atom,
    Equals,
    Exists,
    Forall,
    Graph,
    Iff,
    Implies,
    Not,
    Or,
    SigmaStructure,
    connected_components,
    induced_subgraph,
)


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def random_graph(rng, n: int, p: float = 0.5) -> Graph:
    edges = tuple(e for e in combinations(range(n), 2) if rng.random() < p)
    return Graph(n, edges)


def cyclic_window_edges(n: int, d: int) -> set[tuple[int, int]]:
    """Edge set of the cyclic window graph, straight from the window definition."""
    edges = set()
    for i in range(n):
        window = [(i + j) % n for j in range(d)]
        for a, b in combinations(window, 2):
            edges.add((a, b) if a < b else (b, a))
    return edges


def brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exhaustive permutation search; order <= 8."""
    if g1.order != g2.order or len(g1.edges) != len(g2.edges):
        return False
    target = set(g2.edges)
    for perm in permutations(range(g1.order)):
        mapped = {
            (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
            for u, v in g1.edges
        }
        if mapped == target:
            return True
    return False


def brute_k_connected(g: Graph, k: int) -> bool:
    """Exhaustive removal of every vertex set of size < k; order <= 12."""
    if g.order <= k:
        return False
    for size in range(k):
        for cut in combinations(range(g.order), size):
            rest = [v for v in range(g.order) if v not in cut]
            sub, _ = induced_subgraph(g, rest)
            if len(connected_components(sub)) > 1:
                return False
    return True


def table_eval(s: SigmaStructure, f, assignment=None) -> bool:
    """Independent evaluator: satisfying-assignment tables built bottom-up."""
    n = s.universe_size

    def sat(node):
        # returns (ordered free vars, set of satisfying tuples over them)
        if isinstance(node, Equals):
            fv = tuple(sorted({node.left, node.right}))
            rows = {
                t for t in product(range(n), repeat=len(fv))
                if t[fv.index(node.left)] == t[fv.index(node.right)]
            }
            return fv, rows
        if isinstance(node, Atom):
            fv = tuple(sorted(set(node.args)))
            table = s.relation(node.symbol)
            rows = {
                t for t in product(range(n), repeat=len(fv))
                if tuple(t[fv.index(a)] for a in node.args) in table
            }
            return fv, rows
        if isinstance(node, Not):
            fv, rows = sat(node.body)
            return fv, set(product(range(n), repeat=len(fv))) - rows
        if isinstance(node, (And, Or, Implies, Iff)):
            fv1, rows1 = sat(node.left)
            fv2, rows2 = sat(node.right)
            fv = tuple(sorted(set(fv1) | set(fv2)))
            out = set()
            for t in product(range(n), repeat=len(fv)):
                a = tuple(t[fv.index(v)] for v in fv1) in rows1
                b = tuple(t[fv.index(v)] for v in fv2) in rows2
                value = {
                    And: a and b,
                    Or: a or b,
                    Implies: (not a) or b,
                    Iff: a == b,
                }[type(node)]
                if value:
                    out.add(t)
            return fv, out
        if isinstance(node, (Exists, Forall)):
            fv_b, rows_b = sat(node.body)
            fv = tuple(v for v in fv_b if v != node.var)
            out = set()
            for t in product(range(n), repeat=len(fv)):
                hits = 0
                for a in range(n):
                    full = {v: x for v, x in zip(fv, t)}
                    full[node.var] = a
                    if tuple(full[v] for v in fv_b) in rows_b:
                        hits += 1
                keep = hits > 0 if isinstance(node, Exists) else hits == n
                if keep:
                    out.add(t)
            return fv, out
        raise TypeError(node)

    fv, rows = sat(f)
    asg = assignment or {}
    return tuple(asg[v] for v in fv) in rows


def random_formula(rng, depth, scope):
    """Random formula tree whose free variables stay within `scope`."""
    leaf = depth == 0 or (scope and rng.random() < 0.25)
    if leaf and scope:
        if rng.random() < 0.3:
            return Equals(rng.choice(scope), rng.choice(scope))
        return Atom("~", (rng.choice(scope), rng.choice(scope)))
    kind = rng.randrange(7)
    if kind == 0 or not scope:
        var = rng.randrange(3)
        ctor = Forall if rng.random() < 0.5 else Exists
        return ctor(var, random_formula(rng, depth - 1, sorted(set(scope) | {var})))
    if kind == 1:
        return Not(random_formula(rng, depth - 1, scope))
    ctor = (And, Or, Implies, Iff)[kind % 4]
    return ctor(
        random_formula(rng, depth - 1, scope),
        random_formula(rng, depth - 1, scope),
    )


def random_sentence(rng, depth=4):
    return random_formula(rng, depth, [])


def random_structure(rng, max_universe=8):
    n = rng.randint(1, max_universe)
    pairs = [(a, b) for a in range(n) for b in range(n) if rng.random() < 0.3]
    return SigmaStructure.make(n, {"~": pairs}, GRAPH_SIGNATURE)
