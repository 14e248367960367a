"""Pure simplicial complexes given by their facets, and the window families.

A complex is stored as its maximal faces; the downward closure is implicit.
Two constructions are provided: cyclic windows (d consecutive residues mod n)
and path windows (d consecutive integers, no wraparound).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph


@dataclass(frozen=True)
class SimplicialComplex:
    """Ground set 0..ground_size-1 plus a canonical tuple of facets.

    Construction deduplicates facets and drops non-maximal ones, so the stored
    list always satisfies the facet invariants regardless of input.
    """

    ground_size: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.ground_size < 0:
            raise ValueError(f"ground_size must be non-negative, got {self.ground_size}")
        seen = set()
        for f in self.facets:
            for v in f:
                if not 0 <= v < self.ground_size:
                    raise ValueError(f"facet {f!r} has vertex {v} outside the ground set")
            fs = frozenset(f)
            if len(fs) != len(f):
                raise ValueError(f"facet {f!r} repeats a vertex")
            seen.add(fs)
        maximal = [f for f in seen if not any(f < g for g in seen)]
        object.__setattr__(
            self, "facets", tuple(sorted(tuple(sorted(f)) for f in maximal))
        )

    def dims(self) -> tuple[int, ...]:
        return tuple(sorted({len(f) - 1 for f in self.facets}))


def build_cyclic_complex(n: int, d: int) -> SimplicialComplex:
    """Complex on 0..n-1 whose facets are the n windows {i, i+1, ..., i+d-1} mod n."""
    if d < 1:
        raise ValueError(f"window size d must be >= 1, got {d}")
    if d >= n:
        raise ValueError(f"window size d must be smaller than n, got d={d}, n={n}")
    facets = [tuple(sorted((i + j) % n for j in range(d))) for i in range(n)]
    return SimplicialComplex(n, tuple(facets))


def build_path_complex(n: int, d: int) -> SimplicialComplex:
    """Complex on 0..n-1 whose facets are the n-d+1 windows {i, i+1, ..., i+d-1}."""
    if d < 1:
        raise ValueError(f"window size d must be >= 1, got {d}")
    if d > n:
        raise ValueError(f"window size d must be at most n, got d={d}, n={n}")
    facets = [tuple(range(i, i + d)) for i in range(n - d + 1)]
    return SimplicialComplex(n, tuple(facets))


def graph_of(c: SimplicialComplex) -> Graph:
    """The graph whose edges are exactly the 2-element faces of the complex."""
    edges = set()
    for f in c.facets:
        edges.update(combinations(f, 2))
    return Graph(c.ground_size, tuple(edges))


def faces_of_dim(c: SimplicialComplex, k: int) -> tuple[tuple[int, ...], ...]:
    """All distinct (k+1)-element subsets of facets, sorted canonically."""
    if k < 0:
        raise ValueError(f"dimension must be >= 0, got {k}")
    faces = set()
    for f in c.facets:
        if len(f) >= k + 1:
            faces.update(combinations(f, k + 1))
    return tuple(sorted(faces))


def is_pure_k_complex(c: SimplicialComplex, k: int) -> bool:
    """True iff every facet has exactly k+1 vertices."""
    return all(len(f) == k + 1 for f in c.facets)


@dataclass(frozen=True)
class KCircuitCheck:
    """Outcome of the parity test: every (k-1)-face in an even (>= 2) count of k-faces.

    `incidence` lists every (k-1)-face with the number of facets containing it;
    `violations` are the faces with an odd or sub-2 count.  The check records
    counts, not just a verdict, so callers can assert "exactly two".
    """

    k: int
    is_pure: bool
    incidence: tuple[tuple[tuple[int, ...], int], ...]
    violations: tuple[tuple[int, ...], ...]

    @property
    def is_circuit(self) -> bool:
        return self.is_pure and not self.violations

    def __bool__(self) -> bool:
        return self.is_circuit

    def counts(self) -> dict[tuple[int, ...], int]:
        return dict(self.incidence)


def is_k_circuit(c: SimplicialComplex, k: int) -> KCircuitCheck:
    """Check that c is a pure k-complex whose codimension-1 faces have even incidence."""
    if k < 0:
        raise ValueError(f"dimension must be >= 0, got {k}")
    pure = is_pure_k_complex(c, k)
    if k == 0:
        # the empty face lies in every facet
        sub_faces: tuple[tuple[int, ...], ...] = ((),) if c.facets else ()
    else:
        sub_faces = faces_of_dim(c, k - 1)
    incidence = []
    violations = []
    for face in sub_faces:
        fs = set(face)
        count = sum(1 for f in c.facets if fs <= set(f))
        incidence.append((face, count))
        if count % 2 != 0 or count < 2:
            violations.append(face)
    return KCircuitCheck(k, pure, tuple(incidence), tuple(violations))


def complex_to_json(c: SimplicialComplex) -> dict:
    """{"ground_size": n, "facets": [[...], ...]}, facets sorted lexicographically."""
    return {"ground_size": c.ground_size, "facets": [list(f) for f in c.facets]}


def complex_from_json(obj: object) -> SimplicialComplex:
    if not isinstance(obj, dict):
        raise ValueError("complex JSON: expected an object")
    if "ground_size" not in obj:
        raise ValueError("complex JSON: missing field 'ground_size'")
    n = obj["ground_size"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError("complex JSON: field 'ground_size' must be a non-negative integer")
    raw = obj.get("facets", [])
    if not isinstance(raw, list):
        raise ValueError("complex JSON: field 'facets' must be a list of vertex lists")
    facets = []
    for f in raw:
        if not isinstance(f, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in f
        ):
            raise ValueError(f"complex JSON: field 'facets' contains a malformed entry {f!r}")
        facets.append(tuple(f))
    try:
        return SimplicialComplex(n, tuple(facets))
    except ValueError as exc:
        raise ValueError(f"complex JSON: field 'facets' invalid: {exc}") from exc
