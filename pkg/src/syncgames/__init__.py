"""Exact arithmetic for synchronous nonlocal-game correlations.

Correlations between finite sets are column-stochastic matrices of
rationals.  The package composes them, decides the synchronous /
nonsignaling / symmetric / deterministic / classical class predicates,
decides categorical properties (section, retraction, mono, epi,
bimorphism, isomorphism) with explicit witnesses, and carries the
inclusion-exclusion toolkit used by the two-output constructions.
"""

from .boole import (
    ATOMS,
    INTERSECTIONS,
    AffineInequality,
    AtomReconstruction,
    BooleVector,
    InequalitySystem,
    TripleBounds,
    atoms_to_intersections,
    boole_vector,
    intersections_to_atoms,
    measure_to_atoms,
    pair_bounds,
    pairwise_intersection_vector,
    triple_bounds,
    triple_inequalities,
)
from .category import (
    ClassLabel,
    classical_decomposition,
    classify,
    compose,
    deterministic_function,
    is_deterministic,
    is_nonsignaling,
    is_symmetric,
    is_synchronous,
)
from .constructors import (
    BINARY,
    RANDOM_KINDS,
    TERNARY,
    ClassicalModel,
    GaussianRational,
    QuantumModel,
    classical_model,
    classical_model_from_json_dict,
    classical_model_to_json_dict,
    compose_quantum_models,
    enumerate_functions,
    from_classical_model,
    from_deterministic_pair,
    from_function,
    from_function_indices,
    from_quantum_model,
    gaussian,
    gr_add,
    gr_conj_transpose,
    gr_identity,
    gr_kron,
    gr_matrix,
    gr_mul,
    gr_trace_product,
    quantum_model_from_json_dict,
    quantum_model_to_json_dict,
    random_classical_model,
    random_correlation,
    random_quantum_model,
    two_input_classical,
    two_input_nonsignaling,
    two_output_classical,
    two_output_nonsignaling,
    validate_quantum_model,
)
from .corrcore import (
    Correlation,
    DeterministicPair,
    FiniteSet,
    KernelVector,
    PairDistribution,
    PairWeights,
    as_rational,
    deserialize,
    finite_set,
    format_rational,
    from_json_dict,
    identity,
    make_correlation,
    pair_distribution,
    pair_weights,
    serialize,
    to_json_dict,
)
from .errors import (
    ColumnSumNotOneError,
    ConditionViolatedError,
    DomainTooSmallError,
    MarginalMismatchError,
    NegativeEntryError,
    NotARetractionError,
    NotASectionError,
    NotCompleteError,
    NotHermitianError,
    NotIdempotentError,
    NotInCategoryError,
    NotNormalizedAtEmptySetError,
    NotSymmetricError,
    NotSynchronousError,
    OutOfRangeError,
    ParseError,
    SetMismatchError,
    ShapeMismatchError,
    SymmetryRequiredError,
    SyncGamesError,
    UnknownLabelError,
    UnsupportedShapeError,
    WeightsNotNormalizedError,
)
from .morphology import (
    CategoryTag,
    WitnessPair,
    epi_witness,
    is_bimorphism,
    is_epimorphism,
    is_isomorphism,
    is_member,
    is_monomorphism,
    is_retraction,
    is_section,
    left_nullspace_basis,
    mono_witness,
    require_member,
    retraction_right_inverse,
    right_nullspace_basis,
    section_left_inverse,
    witness_from_json_dict,
    witness_to_json_dict,
)
from .simplex import find_nonnegative_combination

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
