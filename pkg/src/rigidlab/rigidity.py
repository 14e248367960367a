"""Bar-joint frameworks and randomized exact tests for generic rigidity.

All arithmetic is exact: configurations are integer points, ranks come from
fraction-free elimination, and every rank is cross-checked modulo two large
primes.  "Generic" is realized by sampling integer configurations uniformly
from a large box; a framework that achieves the generic rank certifies a
"rigid" verdict (rank is maximized on a Zariski-open set, so any witness is a
lower bound for the generic rank), while "not-rigid" verdicts are one-sided
probabilistic outcomes recorded together with the repetition count and seeds.
"""

from __future__ import annotations

import random
import secrets
from dataclasses import dataclass
from typing import Optional

from .complexes import SimplicialComplex, graph_of, is_k_circuit
from .graphs import Graph, is_connected, is_k_connected
from .linalg import checked_rank, integer_kernel_basis, transpose
from .pebble import geiringer_locally_2_rigid, pebble_game_rank

__all__ = [
    "Framework",
    "RigidityMatrix",
    "RigidityVerdict",
    "HypothesesNotMetError",
    "are_equivalent",
    "are_congruent",
    "rigidity_matrix",
    "local_rank_target",
    "stress_rank_target",
    "equilibrium_stress_basis",
    "stress_matrix",
    "is_locally_rigid_generic",
    "is_globally_rigid_generic",
    "is_locally_1_rigid",
    "is_globally_1_rigid",
    "geiringer_locally_2_rigid",
    "pebble_game_rank",
    "cjt_globally_rigid_predicate",
    "SAMPLE_BOUND",
    "DEFAULT_TRIALS",
]

# Coordinates are drawn uniformly from [-SAMPLE_BOUND, SAMPLE_BOUND].
SAMPLE_BOUND = 1 << 20
DEFAULT_TRIALS = 3


@dataclass(frozen=True)
class Framework:
    """A graph together with an integer configuration in dimension dim."""

    graph: Graph
    dim: int
    config: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dim}")
        pts = tuple(tuple(int(x) for x in p) for p in self.config)
        if len(pts) != self.graph.order:
            raise ValueError(
                f"config has {len(pts)} points but the graph has {self.graph.order} vertices"
            )
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(f"point {p!r} does not have {self.dim} coordinates")
        object.__setattr__(self, "config", pts)

    def to_json(self) -> dict:
        from .graphs import graph_to_json

        return {
            "graph": graph_to_json(self.graph),
            "dim": self.dim,
            "config": [list(p) for p in self.config],
        }

    @staticmethod
    def from_json(obj: object) -> "Framework":
        from .graphs import graph_from_json

        if not isinstance(obj, dict):
            raise ValueError("framework JSON: expected an object")
        for field in ("graph", "dim", "config"):
            if field not in obj:
                raise ValueError(f"framework JSON: missing field '{field}'")
        dim = obj["dim"]
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise ValueError("framework JSON: field 'dim' must be a positive integer")
        raw = obj["config"]
        if not isinstance(raw, list) or not all(
            isinstance(p, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in p)
            for p in raw
        ):
            raise ValueError("framework JSON: field 'config' must be a list of integer points")
        return Framework(graph_from_json(obj["graph"]), dim, tuple(tuple(p) for p in raw))


def _sq_dist(p: tuple[int, ...], q: tuple[int, ...]) -> int:
    return sum((a - b) * (a - b) for a, b in zip(p, q))


def _check_same_shape(f1: Framework, f2: Framework) -> None:
    if f1.graph != f2.graph:
        raise ValueError("frameworks are over different graphs")
    if f1.dim != f2.dim:
        raise ValueError(f"frameworks have different dimensions {f1.dim} and {f2.dim}")


def are_equivalent(f1: Framework, f2: Framework) -> bool:
    """True iff squared lengths agree on every edge (exact integer comparison)."""
    _check_same_shape(f1, f2)
    return all(
        _sq_dist(f1.config[u], f1.config[v]) == _sq_dist(f2.config[u], f2.config[v])
        for u, v in f1.graph.edges
    )


def are_congruent(f1: Framework, f2: Framework) -> bool:
    """True iff squared distances agree on every vertex pair, edges or not."""
    _check_same_shape(f1, f2)
    n = f1.graph.order
    return all(
        _sq_dist(f1.config[u], f1.config[v]) == _sq_dist(f2.config[u], f2.config[v])
        for u in range(n)
        for v in range(u + 1, n)
    )


@dataclass(frozen=True)
class RigidityMatrix:
    """One row per edge: p(u)-p(v) in u's column block, the negative in v's."""

    dim: int
    order: int
    edges: tuple[tuple[int, int], ...]
    rows: tuple[tuple[int, ...], ...]


def rigidity_matrix(fw: Framework) -> RigidityMatrix:
    d = fw.dim
    n = fw.graph.order
    rows = []
    for u, v in fw.graph.edges:
        row = [0] * (d * n)
        pu, pv = fw.config[u], fw.config[v]
        for t in range(d):
            row[d * u + t] = pu[t] - pv[t]
            row[d * v + t] = pv[t] - pu[t]
        rows.append(tuple(row))
    return RigidityMatrix(d, n, fw.graph.edges, tuple(rows))


def local_rank_target(n: int, d: int) -> int:
    """Generic rank of a locally rigid graph on n >= d+1 vertices: dn - d(d+1)/2."""
    return d * n - d * (d + 1) // 2


def stress_rank_target(n: int, d: int) -> int:
    """Stress-matrix rank certifying generic global rigidity for n >= d+2: n - d - 1."""
    return n - d - 1


def _sample_config(rng: random.Random, n: int, d: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(rng.randint(-SAMPLE_BOUND, SAMPLE_BOUND) for _ in range(d)) for _ in range(n)
    )


def equilibrium_stress_basis(fw: Framework) -> list[list[int]]:
    """Integer basis of the stresses: kernel of the transposed rigidity matrix."""
    rm = rigidity_matrix(fw)
    return integer_kernel_basis(transpose([list(r) for r in rm.rows]))


def stress_matrix(g: Graph, omega) -> list[list[int]]:
    """The n x n matrix with -omega_uv off-diagonal on edges and zero row sums."""
    if len(omega) != len(g.edges):
        raise ValueError("stress vector length does not match the edge count")
    n = g.order
    m = [[0] * n for _ in range(n)]
    for w, (u, v) in zip(omega, g.edges):
        m[u][v] = -w
        m[v][u] = -w
    for u in range(n):
        m[u][u] = -sum(m[u][v] for v in range(n) if v != u)
    return m


@dataclass(frozen=True)
class RigidityVerdict:
    """Outcome of a randomized rigidity test, with its full reproduction data.

    A "rigid" verdict is a certificate: the achieved rank lower-bounds the
    generic rank.  A "not-rigid" verdict is probabilistic and records how many
    samples were tried.  For the global test, observed/target ranks refer to
    the stress matrix and the rigidity-matrix ranks are reported alongside.
    """

    kind: str  # "local" | "global"
    dim: int
    rigid: bool
    certainty: str  # "certificate" | "probabilistic"
    method: str
    observed_rank: Optional[int]
    target_rank: Optional[int]
    trials: int
    seed: Optional[int]
    trial_seeds: tuple[int, ...]
    rank_cross_checked: bool
    local_observed_rank: Optional[int] = None
    local_target_rank: Optional[int] = None

    def __bool__(self) -> bool:
        return self.rigid

    def to_json(self) -> dict:
        return {
            "property": self.kind,
            "dim": self.dim,
            "verdict": "rigid" if self.rigid else "not-rigid",
            "certainty": self.certainty,
            "method": self.method,
            "observed_rank": self.observed_rank,
            "target_rank": self.target_rank,
            "trials": self.trials,
            "seed": self.seed,
            "trial_seeds": list(self.trial_seeds),
            "rank_cross_checked": self.rank_cross_checked,
            "local_observed_rank": self.local_observed_rank,
            "local_target_rank": self.local_target_rank,
        }


def _resolve_seed(seed: Optional[int]) -> int:
    return seed if seed is not None else secrets.randbits(63)


def _convention_verdict(g: Graph, d: int, kind: str, seed: Optional[int]) -> RigidityVerdict:
    # Below affine span (n <= d+1) rigidity degenerates; the standard
    # convention is: rigid iff complete.
    rigid = g.is_complete()
    return RigidityVerdict(
        kind=kind,
        dim=d,
        rigid=rigid,
        certainty="certificate" if rigid else "probabilistic",
        method="complete-convention",
        observed_rank=None,
        target_rank=None,
        trials=0,
        seed=seed,
        trial_seeds=(),
        rank_cross_checked=True,
    )


def is_locally_rigid_generic(
    g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: Optional[int] = None
) -> RigidityVerdict:
    """Randomized exact test for generic local rigidity in dimension d.

    Samples integer configurations; rigid iff the rigidity matrix achieves
    rank d*n - d(d+1)/2 at some sample.  For n <= d+1 the verdict is the
    completeness convention.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    master = _resolve_seed(seed)
    n = g.order
    if n <= d + 1:
        return _convention_verdict(g, d, "local", master)
    rng = random.Random(master)
    trial_seeds = tuple(rng.randrange(1 << 63) for _ in range(trials))
    target = local_rank_target(n, d)
    best = 0
    cross_ok = True
    used = []
    for ts in trial_seeds:
        used.append(ts)
        fw = Framework(g, d, _sample_config(random.Random(ts), n, d))
        rank, ok = checked_rank([list(r) for r in rigidity_matrix(fw).rows])
        cross_ok = cross_ok and ok
        best = max(best, rank)
        if rank == target:
            break
    rigid = best == target
    return RigidityVerdict(
        kind="local",
        dim=d,
        rigid=rigid,
        certainty="certificate" if rigid else "probabilistic",
        method="generic-rank",
        observed_rank=best,
        target_rank=target,
        trials=len(used),
        seed=master,
        trial_seeds=tuple(used),
        rank_cross_checked=cross_ok,
    )


def is_globally_rigid_generic(
    g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: Optional[int] = None
) -> RigidityVerdict:
    """Randomized exact test for generic global rigidity in dimension d.

    Per trial: sample a configuration; require the local rank first; then take
    a random integer combination of an exact stress basis and test whether the
    stress matrix achieves rank n - d - 1.  Achieving it certifies global
    rigidity; failing across all trials is a probabilistic "not-rigid".
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    master = _resolve_seed(seed)
    n = g.order
    if n <= d + 1:
        return _convention_verdict(g, d, "global", master)
    rng = random.Random(master)
    trial_seeds = tuple(rng.randrange(1 << 63) for _ in range(trials))
    local_target = local_rank_target(n, d)
    target = stress_rank_target(n, d)
    best_local = 0
    best_stress = 0
    cross_ok = True
    rigid = False
    used = []
    for ts in trial_seeds:
        used.append(ts)
        trial_rng = random.Random(ts)
        fw = Framework(g, d, _sample_config(trial_rng, n, d))
        rm = rigidity_matrix(fw)
        rank, ok = checked_rank([list(r) for r in rm.rows])
        cross_ok = cross_ok and ok
        best_local = max(best_local, rank)
        if rank != local_target:
            continue
        basis = integer_kernel_basis(transpose([list(r) for r in rm.rows]))
        if not basis:
            continue
        coeffs = [trial_rng.randint(-SAMPLE_BOUND, SAMPLE_BOUND) for _ in basis]
        omega = [
            sum(c * vec[i] for c, vec in zip(coeffs, basis)) for i in range(len(g.edges))
        ]
        srank, ok2 = checked_rank(stress_matrix(g, omega))
        cross_ok = cross_ok and ok2
        best_stress = max(best_stress, srank)
        if srank == target:
            rigid = True
            break
    return RigidityVerdict(
        kind="global",
        dim=d,
        rigid=rigid,
        certainty="certificate" if rigid else "probabilistic",
        method="stress-rank",
        observed_rank=best_stress,
        target_rank=target,
        trials=len(used),
        seed=master,
        trial_seeds=tuple(used),
        rank_cross_checked=cross_ok,
        local_observed_rank=best_local,
        local_target_rank=local_target,
    )


def is_locally_1_rigid(g: Graph) -> bool:
    """Dimension-1 characterization: locally rigid on the line iff connected."""
    return is_connected(g)


def is_globally_1_rigid(g: Graph) -> bool:
    """Dimension-1 characterization: globally rigid on the line iff 2-connected.

    Complete graphs on at most two vertices are globally rigid as well; the
    2-connectivity form of the characterization presupposes >= 3 vertices.
    """
    if g.order <= 2:
        return g.is_complete()
    return is_k_connected(g, 2)


class HypothesesNotMetError(ValueError):
    """Raised when a conditional rigidity criterion is applied out of scope."""


def cjt_globally_rigid_predicate(c: SimplicialComplex, k: int) -> bool:
    """Global (k+1)-rigidity criterion for graphs of simplicial k-circuits.

    Requires k >= 3 and that c actually is a k-circuit; on the hypotheses the
    graph is globally (k+1)-rigid iff it is K_{k+1}, K_{k+2}, or
    (k+2)-connected.  Hypothesis violations raise, never return a verdict.
    """
    if k < 3:
        raise HypothesesNotMetError(f"criterion requires k >= 3, got k={k}")
    check = is_k_circuit(c, k)
    if not check.is_circuit:
        sample = ", ".join(str(f) for f in check.violations[:3])
        raise HypothesesNotMetError(
            f"complex is not a {k}-circuit: {len(check.violations)} codimension-1 "
            f"faces have odd or sub-2 incidence (first: {sample})"
        )
    g = graph_of(c)
    if g.order in (k + 1, k + 2) and g.is_complete():
        return True
    return is_k_connected(g, k + 2)
