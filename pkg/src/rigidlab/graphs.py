"""Finite simple undirected graphs on the vertex set 0..order-1.

Edges are kept in a canonical form (u < v, lexicographically sorted) so that
serialized output is byte-stable.  All values are immutable and all operations
are pure functions, so independent calls may run concurrently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class Graph:
    """A simple graph: vertex count plus a canonical tuple of edges."""

    order: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be non-negative, got {self.order}")
        canon = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise ValueError(f"edge {e!r} has an endpoint outside 0..{self.order - 1}")
            canon.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.order)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(s) for s in self.adjacency))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def is_complete(self) -> bool:
        return 2 * len(self.edges) == self.order * (self.order - 1)

    def relabel(self, mapping: Sequence[int]) -> Graph:
        """Graph with vertex v renamed to mapping[v]; mapping must be a bijection."""
        if sorted(mapping) != list(range(self.order)):
            raise ValueError("mapping is not a bijection on the vertex range")
        return Graph(self.order, tuple((mapping[u], mapping[v]) for u, v in self.edges))


@dataclass(frozen=True)
class VertexBijection:
    """A bijection between two vertex ranges, stored as the forward map."""

    mapping: tuple[int, ...]
    codomain_order: int

    def __post_init__(self) -> None:
        if len(self.mapping) != self.codomain_order:
            raise ValueError("domain and codomain orders differ")
        if sorted(self.mapping) != list(range(self.codomain_order)):
            raise ValueError("mapping is not a bijection onto the codomain range")

    @property
    def domain_order(self) -> int:
        return len(self.mapping)

    def apply(self, v: int) -> int:
        return self.mapping[v]

    def inverse(self) -> VertexBijection:
        inv = [0] * self.codomain_order
        for v, w in enumerate(self.mapping):
            inv[w] = v
        return VertexBijection(tuple(inv), self.domain_order)

    def is_isomorphism_between(self, g1: Graph, g2: Graph) -> bool:
        """Re-apply the map to g1's edges and compare with g2's edge set exactly."""
        if g1.order != self.domain_order or g2.order != self.codomain_order:
            return False
        mapped = {
            (a, b) if a < b else (b, a)
            for a, b in ((self.mapping[u], self.mapping[v]) for u, v in g1.edges)
        }
        return mapped == set(g2.edges)

    def to_json(self) -> list[int]:
        return list(self.mapping)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of g2 are shifted up by g1.order."""
    shift = g1.order
    edges = list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges]
    return Graph(g1.order + g2.order, tuple(edges))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on the given vertices, relabeled 0..k-1 in sorted order.

    Returns the subgraph together with the sorted tuple of original vertices,
    so position i of the tuple names the original identity of new vertex i.
    """
    verts = sorted(set(vertices))
    for v in verts:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(verts)}
    keep = set(verts)
    edges = [(index[u], index[v]) for u, v in g.edges if u in keep and v in keep]
    return Graph(len(verts), tuple(edges)), tuple(verts)


def r_ball(g: Graph, center: int, radius: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on all vertices at distance <= radius from center.

    Computed by breadth-first traversal; vertices unreachable within the radius
    are excluded.  Returns (ball graph, original vertices it was induced on).
    """
    if not 0 <= center < g.order:
        raise ValueError(f"vertex {center} out of range for order {g.order}")
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    dist = {center: 0}
    queue = deque([center])
    while queue:
        u = queue.popleft()
        if dist[u] == radius:
            continue
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return induced_subgraph(g, dist.keys())


def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Partition into maximal connected vertex sets, ordered by smallest vertex."""
    seen = [False] * g.order
    parts: list[tuple[int, ...]] = []
    for start in range(g.order):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        parts.append(tuple(sorted(comp)))
    return tuple(parts)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def _flow_at_least(g: Graph, s: int, t: int, k: int) -> bool:
    """True iff there are >= k internally vertex-disjoint s-t paths (Menger).

    Unit-capacity max-flow on the vertex-split digraph: vertex v becomes arc
    v_in -> v_out of capacity 1; each edge contributes arcs of effectively
    unbounded capacity between the splits.  Augmentation stops at k paths.
    """
    n = g.order
    big = n + 1
    # node 2v = v_in, 2v+1 = v_out
    cap: dict[tuple[int, int], int] = {}
    adj: list[list[int]] = [[] for _ in range(2 * n)]

    def add_arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            cap[(a, b)] = 0
            cap[(b, a)] = cap.get((b, a), 0)
            adj[a].append(b)
            adj[b].append(a)
        cap[(a, b)] += c

    for v in range(n):
        add_arc(2 * v, 2 * v + 1, 1)
    for u, v in g.edges:
        add_arc(2 * u + 1, 2 * v, big)
        add_arc(2 * v + 1, 2 * u, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < k:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in adj[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return False
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return True


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff g has more than k vertices and no cut of fewer than k vertices.

    K_n counts as (n-1)-connected, not n-connected.  Decided by vertex-disjoint
    paths between all non-adjacent pairs (unit-capacity max-flow, early exit).
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if g.order <= k:
        return False
    if g.is_complete():
        return True
    if not is_connected(g):
        return False
    for s, t in combinations(range(g.order), 2):
        if t in g.adjacency[s]:
            continue
        if not _flow_at_least(g, s, t, k):
            return False
    return True


def _vertex_invariants(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    degs = [len(s) for s in g.adjacency]
    return [(degs[v], tuple(sorted(degs[w] for w in g.adjacency[v]))) for v in range(g.order)]


def are_isomorphic(g1: Graph, g2: Graph) -> Optional[VertexBijection]:
    """Exact isomorphism test; returns a witness bijection or None.

    Backtracking with degree-sequence and neighbor-degree-multiset pruning.
    Meant for small graphs (neighborhood balls); no canonical labeling.
    """
    n = g1.order
    if n != g2.order or len(g1.edges) != len(g2.edges):
        return None
    if n == 0:
        return VertexBijection((), 0)
    inv1 = _vertex_invariants(g1)
    inv2 = _vertex_invariants(g2)
    if sorted(inv1) != sorted(inv2):
        return None
    candidates = [[w for w in range(n) if inv2[w] == inv1[v]] for v in range(n)]

    # Static search order: most constrained first, preferring vertices attached
    # to already-placed ones so adjacency checks prune early.
    order: list[int] = []
    placed: set[int] = set()
    remaining = set(range(n))
    while remaining:
        attached = [v for v in remaining if g1.adjacency[v] & placed]
        pool = attached if attached else list(remaining)
        nxt = min(pool, key=lambda v: (len(candidates[v]), -len(g1.adjacency[v]), v))
        order.append(nxt)
        placed.add(nxt)
        remaining.discard(nxt)

    mapping = [-1] * n
    used = [False] * n
    adj1, adj2 = g1.adjacency, g2.adjacency

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in order[:i]:
                if (u in adj1[v]) != (mapping[u] in adj2[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if backtrack(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    if not backtrack(0):
        return None
    witness = VertexBijection(tuple(mapping), n)
    assert witness.is_isomorphism_between(g1, g2)
    return witness


def graph_to_json(g: Graph) -> dict:
    """{"order": n, "edges": [[u, v], ...]} with u < v, lexicographically sorted."""
    return {"order": g.order, "edges": [[u, v] for u, v in g.edges]}


def graph_from_json(obj: object) -> Graph:
    if not isinstance(obj, dict):
        raise ValueError("graph JSON: expected an object")
    if "order" not in obj:
        raise ValueError("graph JSON: missing field 'order'")
    order = obj["order"]
    if not isinstance(order, int) or isinstance(order, bool) or order < 0:
        raise ValueError("graph JSON: field 'order' must be a non-negative integer")
    raw = obj.get("edges", [])
    if not isinstance(raw, list):
        raise ValueError("graph JSON: field 'edges' must be a list of pairs")
    edges = []
    for e in raw:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise ValueError(f"graph JSON: field 'edges' contains a malformed entry {e!r}")
        edges.append((e[0], e[1]))
    try:
        return Graph(order, tuple(edges))
    except ValueError as exc:
        raise ValueError(f"graph JSON: field 'edges' invalid: {exc}") from exc
