"""rigidlab: exact rigidity tests, window complexes, first-order model
checking, and neighborhood-census comparisons over finite graphs."""

from .complexes import (
    KCircuitCheck,
    SimplicialComplex,
    build_cyclic_complex,
    build_path_complex,
    complex_from_json,
    complex_to_json,
    faces_of_dim,
    graph_of,
    is_k_circuit,
    is_pure_k_complex,
)
from .fo import (
    GRAPH_AXIOM,
    GRAPH_SIGNATURE,
    Atom,
    Equals,
    EvaluationError,
    Exists,
    Forall,
    Formula,
    And,
    Iff,
    Implies,
    Not,
    Or,
    Signature,
    SigmaStructure,
    evaluate,
    free_vars,
    gaifman_graph,
    graph_from_structure,
    graph_theory,
    is_sentence,
    models_graph_theory,
    structure_from_graph,
    structure_from_json,
    structure_to_json,
)
from .foparse import FormulaSyntaxError, format_formula, parse_formula
from .graphs import (
    Graph,
    VertexBijection,
    are_isomorphic,
    connected_components,
    disjoint_union,
    graph_from_json,
    graph_to_json,
    induced_subgraph,
    is_connected,
    is_k_connected,
    r_ball,
)
from .linalg import exact_rank, integer_kernel_basis, rank_mod_p
from .locality import (
    BallCensus,
    BallClass,
    QueryResult,
    ball_census,
    build_counterexample,
    glo_query,
    hanf_equivalent,
    loc_query,
    verify_circuit,
    verify_connectivity,
    verify_hanf_witness,
    verify_neighborhood_lemma,
    verify_theorem,
)
from .rigidity import (
    Framework,
    HypothesesNotMetError,
    RigidityMatrix,
    RigidityVerdict,
    are_congruent,
    are_equivalent,
    cjt_globally_rigid_predicate,
    equilibrium_stress_basis,
    geiringer_locally_2_rigid,
    is_globally_1_rigid,
    is_globally_rigid_generic,
    is_locally_1_rigid,
    is_locally_rigid_generic,
    local_rank_target,
    pebble_game_rank,
    rigidity_matrix,
    stress_matrix,
    stress_rank_target,
)

__version__ = "0.1.0"
