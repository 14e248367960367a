"""(2,3)-pebble game: the rank of a graph in the generic plane rigidity matroid.

Every vertex starts with two pebbles.  An edge is accepted when four pebbles
can be gathered on its endpoints; gathering moves pebbles backwards along
directed accepted edges, reversing the path.  The number of accepted edges is
the matroid rank, so a graph on n >= 2 vertices is generically rigid in the
plane exactly when the rank reaches 2n - 3.
"""

from __future__ import annotations

from .graphs import Graph


def _move_pebble_to(target: int, other: int, pebbles: list[int], out: list[set[int]]) -> bool:
    """Try to bring one pebble onto `target` without taking from `other`."""
    seen = {target, other}
    parent: dict[int, int] = {}
    stack = [target]
    while stack:
        a = stack.pop()
        for b in out[a]:
            if b in seen:
                continue
            if pebbles[b] > 0:
                pebbles[b] -= 1
                pebbles[target] += 1
                # reverse the traversal path target -> ... -> a -> b
                out[a].discard(b)
                out[b].add(a)
                node = a
                while node != target:
                    p = parent[node]
                    out[p].discard(node)
                    out[node].add(p)
                    node = p
                return True
            seen.add(b)
            parent[b] = a
            stack.append(b)
    return False


def pebble_game_rank(g: Graph) -> int:
    """Rank of g's edge set in the (2,3)-sparsity matroid."""
    n = g.order
    pebbles = [2] * n
    out: list[set[int]] = [set() for _ in range(n)]
    rank = 0
    for u, v in g.edges:
        while pebbles[u] + pebbles[v] < 4:
            if not (_move_pebble_to(u, v, pebbles, out) or _move_pebble_to(v, u, pebbles, out)):
                break
        if pebbles[u] + pebbles[v] >= 4:
            pebbles[u] -= 1
            out[u].add(v)
            rank += 1
    return rank


def geiringer_locally_2_rigid(g: Graph) -> bool:
    """Plane rigidity via the spanning-sparse-subgraph characterization.

    True iff g has a spanning subgraph with 2n - 3 edges in which every
    m-vertex subgraph has at most 2m - 3 edges; decided by the pebble game
    reaching full rank.
    """
    if g.order < 2:
        raise ValueError(f"graph must have at least 2 vertices, got {g.order}")
    return pebble_game_rank(g) == 2 * g.order - 3
