"""Neighborhood censuses, the radius-r equivalence, and the locality verifiers.

Two graphs are radius-r equivalent when a bijection matches every vertex to
one whose r-ball is isomorphic.  The rigidity queries LOC/GLO are Boolean
queries on {~}-structures; a first-order definable query must take equal
values on radius-r equivalent structures for some fixed r, so a family of
equivalent pairs separated by a query rules out first-order definability.
This module builds the window-graph pairs, checks the equivalence with an
explicit witness, runs the queries, and assembles the whole argument into
reproducible reports.
"""

from __future__ import annotations

import random
import secrets
from dataclasses import dataclass
from typing import Optional

from .complexes import build_cyclic_complex, build_path_complex, graph_of, is_k_circuit
from .fo import (
    GRAPH_SIGNATURE,
    SigmaStructure,
    gaifman_graph,
    models_graph_theory,
    structure_from_graph,
)
from .graphs import Graph, VertexBijection, are_isomorphic, disjoint_union, r_ball
from .pebble import geiringer_locally_2_rigid
from .reports import (
    Claim,
    NonDefinabilityReport,
    VerificationReport,
    graph_fingerprint,
    make_claim,
    record_claim,
)
from .rigidity import (
    DEFAULT_TRIALS,
    RigidityVerdict,
    is_globally_1_rigid,
    is_globally_rigid_generic,
    is_locally_1_rigid,
    is_locally_rigid_generic,
)

# The inference this workbench runs, in one sentence.
LOCALITY_RULE = (
    "a first-order definable Boolean query takes equal values on radius-r "
    "neighborhood-equivalent structures for some fixed r; exhibiting, at the "
    "requested r, an equivalent pair that the query separates rules out a "
    "first-order definition"
)


# ---------------------------------------------------------------------------
# ball censuses and the radius-r equivalence


@dataclass(frozen=True)
class BallClass:
    """One isomorphism class of r-balls: a representative and its centers."""

    representative: Graph
    centers: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.centers)

    @property
    def sample_center(self) -> int:
        return self.centers[0]


@dataclass(frozen=True)
class BallCensus:
    """All r-balls of a graph, grouped by isomorphism type.

    Multiplicities sum to the graph's order; representatives are pairwise
    non-isomorphic; classes are ordered by (order, edge count, degree
    sequence, first found) so censuses are diffable.
    """

    graph_order: int
    radius: int
    classes: tuple[BallClass, ...]
    class_of: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "graph_order": self.graph_order,
            "radius": self.radius,
            "classes": [
                {
                    "ball_order": c.representative.order,
                    "ball_edge_count": len(c.representative.edges),
                    "multiplicity": c.multiplicity,
                    "sample_center": c.sample_center,
                }
                for c in self.classes
            ],
        }


def ball_census(g: Graph, r: int) -> BallCensus:
    """Compute every r-ball and group the balls by graph isomorphism."""
    if r < 0:
        raise ValueError(f"radius must be >= 0, got {r}")
    reps: list[Graph] = []
    centers: list[list[int]] = []
    keys: list[tuple] = []
    assignment = []
    for v in range(g.order):
        ball, _ = r_ball(g, v, r)
        key = (ball.order, len(ball.edges), ball.degree_sequence())
        hit = None
        for idx, rep in enumerate(reps):
            if keys[idx] == key and are_isomorphic(rep, ball) is not None:
                hit = idx
                break
        if hit is None:
            reps.append(ball)
            centers.append([v])
            keys.append(key)
            assignment.append(len(reps) - 1)
        else:
            centers[hit].append(v)
            assignment.append(hit)
    order_idx = sorted(range(len(reps)), key=lambda i: keys[i])  # stable: first-found breaks ties
    renumber = {old: new for new, old in enumerate(order_idx)}
    classes = tuple(
        BallClass(reps[old], tuple(centers[old])) for old in order_idx
    )
    return BallCensus(g.order, r, classes, tuple(renumber[a] for a in assignment))


def verify_hanf_witness(g1: Graph, g2: Graph, r: int, bij: VertexBijection) -> bool:
    """Re-check the defining condition vertex by vertex."""
    if g1.order != bij.domain_order or g2.order != bij.codomain_order:
        return False
    for v in range(g1.order):
        b1, _ = r_ball(g1, v, r)
        b2, _ = r_ball(g2, bij.apply(v), r)
        if are_isomorphic(b1, b2) is None:
            return False
    return True


def hanf_equivalent(g1: Graph, g2: Graph, r: int) -> Optional[VertexBijection]:
    """A bijection matching r-ball isomorphism types pointwise, or None.

    Exists iff the two ball censuses agree class by class with equal
    multiplicities.  The returned witness maps centers class-wise and is
    re-verified at every vertex before being returned.
    """
    if g1.order != g2.order:
        return None
    c1 = ball_census(g1, r)
    c2 = ball_census(g2, r)
    if len(c1.classes) != len(c2.classes):
        return None
    used: set[int] = set()
    mapping = [-1] * g1.order
    for cls1 in c1.classes:
        hit = None
        for j, cls2 in enumerate(c2.classes):
            if j in used or cls1.multiplicity != cls2.multiplicity:
                continue
            if are_isomorphic(cls1.representative, cls2.representative) is not None:
                hit = j
                break
        if hit is None:
            return None
        used.add(hit)
        for a, b in zip(cls1.centers, c2.classes[hit].centers):
            mapping[a] = b
    bij = VertexBijection(tuple(mapping), g2.order)
    if not verify_hanf_witness(g1, g2, r, bij):
        return None
    return bij


# ---------------------------------------------------------------------------
# the Boolean queries


@dataclass(frozen=True)
class QueryResult:
    """Verdict of LOC/GLO on a structure, with the method that decided it."""

    query: str  # "loc" | "glo"
    d: int
    value: bool
    method: str
    graph_model: bool
    verdict: Optional[RigidityVerdict] = None
    seed: Optional[int] = None

    def __bool__(self) -> bool:
        return self.value

    def to_json(self) -> dict:
        return {
            "query": self.query,
            "d": self.d,
            "value": self.value,
            "method": self.method,
            "graph_model": self.graph_model,
            "rigidity": self.verdict.to_json() if self.verdict is not None else None,
            "seed": self.seed,
        }


def _rigidity_query(
    s: SigmaStructure, d: int, which: str, trials: int, seed: Optional[int]
) -> QueryResult:
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if s.signature != GRAPH_SIGNATURE:
        raise ValueError("queries are defined on structures over the signature {'~': 2}")
    if not models_graph_theory(s).models:
        return QueryResult(which, d, False, "graph-theory-check", False, None, seed)
    g = gaifman_graph(s)
    if d == 1:
        value = is_locally_1_rigid(g) if which == "loc" else is_globally_1_rigid(g)
        return QueryResult(which, d, value, "connectivity", True, None, seed)
    if d == 2 and which == "loc" and g.order >= 2:
        return QueryResult(which, d, geiringer_locally_2_rigid(g), "pebble-game", True, None, seed)
    test = is_locally_rigid_generic if which == "loc" else is_globally_rigid_generic
    verdict = test(g, d, trials=trials, seed=seed)
    return QueryResult(which, d, verdict.rigid, verdict.method, True, verdict, verdict.seed)


def loc_query(
    s: SigmaStructure, d: int, trials: int = DEFAULT_TRIALS, seed: Optional[int] = None
) -> QueryResult:
    """True iff s models the graph theory and its graph is locally d-rigid."""
    return _rigidity_query(s, d, "loc", trials, seed)


def glo_query(
    s: SigmaStructure, d: int, trials: int = DEFAULT_TRIALS, seed: Optional[int] = None
) -> QueryResult:
    """True iff s models the graph theory and its graph is globally d-rigid."""
    return _rigidity_query(s, d, "glo", trials, seed)


# ---------------------------------------------------------------------------
# the counterexample pairs


def build_counterexample(d: int, r: int) -> tuple[Graph, Graph]:
    """The window pair at radius r: one big cycle of windows vs. two half-size ones.

    G1 is the graph of the cyclic window complex on 4rd+4 vertices; G2 is the
    disjoint union of two copies of the one on 2rd+2 vertices.  Orders agree.
    """
    if d < 2:
        raise ValueError(f"window construction needs d >= 2, got {d} (use cycles for d=1)")
    if r < 1:
        raise ValueError(f"radius must be >= 1 for the window construction, got {r}")
    half = graph_of(build_cyclic_complex(2 * r * d + 2, d))
    big = graph_of(build_cyclic_complex(4 * r * d + 4, d))
    return big, disjoint_union(half, half)


def theorem_pair(d: int, r: int) -> tuple[Graph, Graph, dict]:
    """The pair used by verify_theorem; d=1 falls back to plain cycles.

    Window complexes with window 1 are edgeless, so for d=1 the pair is the
    cycle on 4r+4 vertices against two cycles on 2r+2 vertices, which carries
    the classical connectivity argument that the construction generalizes.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if r < 1:
        raise ValueError(f"radius must be >= 1, got {r}")
    if d == 1:
        n = 2 * r + 2
        half = graph_of(build_cyclic_complex(n, 2))
        g1 = graph_of(build_cyclic_complex(2 * n, 2))
        g2 = disjoint_union(half, half)
        params = {"family": "cycle", "window": 2, "n_big": 2 * n, "n_component": n}
    else:
        n = 2 * r * d + 2
        g1, g2 = build_counterexample(d, r)
        params = {"family": "cyclic-window", "window": d, "n_big": 2 * n, "n_component": n}
    return g1, g2, params


# ---------------------------------------------------------------------------
# verifiers


def _path_window_graph(m: int, d: int) -> Graph:
    # degenerate radius: the ball is a point and so is the window graph
    if m == 1:
        return Graph(1)
    return graph_of(build_path_complex(m, d))


def verify_neighborhood_lemma(d: int, r: int, n: Optional[int] = None) -> VerificationReport:
    """Census the r-balls of the cyclic window graph and identify their type.

    Asserts that all balls form a single isomorphism class (the rotation acts
    transitively).  The class representative is then compared against two
    path-window candidates: one of size 2rd+1 and one of size 2r(d-1)+1 (in r
    steps a walk moves at most d-1 positions per step).  Both outcomes are
    recorded without asserting either as ground truth.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if r < 0:
        raise ValueError(f"radius must be >= 0, got {r}")
    if n is None:
        n = 2 * r * d + 2
    if n < 2 * r * d + 2:
        raise ValueError(f"hypothesis requires n >= 2rd+2 = {2 * r * d + 2}, got n={n}")
    c = build_cyclic_complex(n, d)
    g = graph_of(c)
    census = ball_census(g, r)
    single = len(census.classes) == 1
    rep = census.classes[0].representative
    m_stated = 2 * r * d + 1
    m_stepped = 2 * r * (d - 1) + 1
    cmp_stated = _path_window_graph(m_stated, d)
    cmp_stepped = _path_window_graph(m_stepped, d)
    iso_stated = are_isomorphic(rep, cmp_stated) is not None
    iso_stepped = are_isomorphic(rep, cmp_stepped) is not None
    claims = [
        make_claim("single_ball_isomorphism_class", True, single),
        record_claim(f"ball_isomorphic_to_path_window_graph_m{m_stated}", iso_stated),
        record_claim(f"ball_isomorphic_to_path_window_graph_m{m_stepped}", iso_stepped),
        record_claim("ball_order", rep.order),
        record_claim("ball_edge_count", len(rep.edges)),
    ]
    report = VerificationReport(
        kind="neighborhood-census",
        params={
            "d": d,
            "r": r,
            "n": n,
            "candidate_sizes": {"stated": m_stated, "stepped": m_stepped},
        },
        claims=claims,
    )
    if m_stated != m_stepped and iso_stated != iso_stepped:
        report.notes.append(
            "the two candidate sizes disagree; each step reaches at most d-1 "
            "positions, so the r-ball spans 2r(d-1)+1 consecutive vertices"
        )
    return report


def verify_circuit(d: int, n: int) -> VerificationReport:
    """Parity check for the cyclic window complex at k = d-1, with counts."""
    if d < 2:
        raise ValueError(f"window size must be >= 2, got {d}")
    k = d - 1
    c = build_cyclic_complex(n, d)
    check = is_k_circuit(c, k)
    exactly_two = bool(check.incidence) and all(cnt == 2 for _, cnt in check.incidence)
    claims = [
        make_claim("pure_k_complex", True, check.is_pure),
        make_claim("every_codim1_face_in_even_count_of_facets", True, not check.violations),
        make_claim("every_codim1_face_in_exactly_two_facets", True, exactly_two),
        record_claim("codim1_face_count", len(check.incidence)),
        record_claim("violation_count", len(check.violations)),
    ]
    report = VerificationReport(
        kind="circuit-structure",
        params={"d": d, "n": n, "k": k, "facet_count": len(c.facets)},
        claims=claims,
    )
    if check.violations:
        sample = [list(f) for f in check.violations[:5]]
        report.notes.append(
            f"codimension-1 faces with odd incidence exist, e.g. {sample}: dropping "
            "an interior element of a window leaves a face contained in that window only"
        )
    return report


def verify_connectivity(d: int, n: int) -> VerificationReport:
    """Connectivity of the cyclic window graph against the (d+1) target."""
    from .graphs import is_k_connected

    if d < 2:
        raise ValueError(f"window size must be >= 2, got {d}")
    g = graph_of(build_cyclic_complex(n, d))
    params = {"d": d, "n": n, "order": g.order, "edge_count": len(g.edges)}
    if d == 2:
        claims = [
            make_claim("graph_is_2_connected", True, is_k_connected(g, 2)),
            make_claim("graph_is_3_connected", False, is_k_connected(g, 3)),
        ]
        report = VerificationReport(kind="connectivity", params=params, claims=claims)
        report.notes.append(
            "window size 2 gives a plain cycle: 2-connected but never 3-connected, "
            "so the (d+1)-connectivity pattern of wider windows does not extend to d=2"
        )
        return report
    claims = [
        make_claim(f"graph_is_{d + 1}_connected", True, is_k_connected(g, d + 1)),
    ]
    return VerificationReport(kind="connectivity", params=params, claims=claims)


def verify_theorem(
    d: int, r: int, seed: Optional[int] = None, trials: int = DEFAULT_TRIALS
) -> NonDefinabilityReport:
    """Run the whole separation argument at (d, r) and record every step.

    Builds the pair, finds and re-checks the radius-r witness, evaluates LOC
    and GLO on both sides, and succeeds iff both queries separate the pair.
    The expected directions (true on the connected graph, false on the
    disconnected one) are recorded; for d >= 4 the circuit-criterion route is
    run next to the stress test and the two are compared when applicable.
    """
    master = seed if seed is not None else secrets.randbits(63)
    rng = random.Random(master)
    sub = {name: rng.randrange(1 << 63) for name in ("loc_g1", "glo_g1", "loc_g2", "glo_g2")}
    g1, g2, construction = theorem_pair(d, r)
    s1 = structure_from_graph(g1)
    s2 = structure_from_graph(g2)

    bij = hanf_equivalent(g1, g2, r)
    reverified = bij is not None and verify_hanf_witness(g1, g2, r, bij)

    loc1 = loc_query(s1, d, trials, sub["loc_g1"])
    glo1 = glo_query(s1, d, trials, sub["glo_g1"])
    loc2 = loc_query(s2, d, trials, sub["loc_g2"])
    glo2 = glo_query(s2, d, trials, sub["glo_g2"])

    claims: list[Claim] = [
        make_claim("orders_equal", True, g1.order == g2.order),
        make_claim("hanf_equivalent", True, bij is not None),
        make_claim("loc_query_separates_the_pair", True, loc1.value != loc2.value),
        make_claim("glo_query_separates_the_pair", True, glo1.value != glo2.value),
        record_claim("loc_on_g1", loc1.value),
        record_claim("loc_on_g2", loc2.value),
        record_claim("glo_on_g1", glo1.value),
        record_claim("glo_on_g2", glo2.value),
    ]
    notes: list[str] = []
    if d == 2:
        notes.append(
            "window size 2 gives plain cycles, which are not generically rigid in "
            "the plane (edge count 2n-3 is unreachable), so both sides of the pair "
            "are expected to answer false; the separation claims record that outcome"
        )
    if d >= 4:
        from .rigidity import HypothesesNotMetError, cjt_globally_rigid_predicate

        c1 = build_cyclic_complex(construction["n_big"], d)
        try:
            pred = cjt_globally_rigid_predicate(c1, d - 1)
            claims.append(record_claim("circuit_criterion_hypotheses_met", True))
            claims.append(
                make_claim("circuit_criterion_agrees_with_stress_route", True, pred == glo1.value)
            )
        except HypothesesNotMetError as exc:
            claims.append(record_claim("circuit_criterion_hypotheses_met", False))
            claims.append(record_claim("circuit_criterion_agrees_with_stress_route", None))
            notes.append(f"circuit-criterion route not applicable: {exc}")

    return NonDefinabilityReport(
        d=d,
        r=r,
        construction=construction,
        graphs={"g1": graph_fingerprint(g1), "g2": graph_fingerprint(g2)},
        hanf={
            "witness_exists": bij is not None,
            "witness": bij.to_json() if bij is not None else None,
            "per_vertex_recheck": reverified,
        },
        queries={
            "loc": {"g1": loc1.to_json(), "g2": loc2.to_json()},
            "glo": {"g1": glo1.to_json(), "g2": glo2.to_json()},
        },
        claims=claims,
        rule=LOCALITY_RULE,
        seeds={"master": master, **sub},
        trials=trials,
        notes=notes,
    )
