"""Circuits-first matroid toolkit.

Builds finite matroids from uniform/linear/graphic/named sources, computes
duals and minors, and machine-checks that every circuit-cocircuit
intersection of size k in {4, 5, 6} yields one of size k - 2, with
constructive witness chains cross-checked against brute-force oracles.
"""

from .analyze import (
    CCIntersection,
    CeFamily,
    ConjectureEntry,
    ConjectureReport,
    DEFAULT_PAIR_CAP,
    ExtractionStep,
    LiftStep,
    OracleStep,
    OxleyMinor,
    PropertyReport,
    SuiteResult,
    WitnessChain,
    WitnessStep,
    achieved_sizes,
    cc_intersections,
    ce_family,
    check_ce_families,
    check_circuit_pairs,
    check_rank2_circuits,
    find_intersection_of_size,
    lift_intersection,
    oxley_minor,
    verify_conjecture,
    witness_k4,
    witness_k5,
    witness_k6,
)
from .construct import (
    GraphSpec,
    MatrixOverGF,
    NAMED_CATALOG,
    from_circuits,
    from_graph,
    from_matrix,
    named,
    random_linear,
    random_matrix,
    uniform,
)
from .core import (
    AxiomReport,
    CircuitFamily,
    ElemSet,
    GroundSet,
    MAX_GROUND,
    MAX_SCAN,
    Matroid,
    validate_circuit_axioms,
)
from .errors import (
    AxiomError,
    CapExceeded,
    ExtractionFailed,
    InvalidParameter,
    LiftFailed,
    MatroidError,
    OverlappingSpec,
    ParseError,
    PreconditionViolated,
    TheoremViolation,
    UnknownName,
)
from .transform import MinorSpec, cocircuits, contract, corank, delete, dual, minor

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "AxiomReport",
    "CCIntersection",
    "CapExceeded",
    "CeFamily",
    "CircuitFamily",
    "ConjectureEntry",
    "ConjectureReport",
    "DEFAULT_PAIR_CAP",
    "ElemSet",
    "ExtractionFailed",
    "ExtractionStep",
    "GraphSpec",
    "GroundSet",
    "InvalidParameter",
    "LiftFailed",
    "LiftStep",
    "MAX_GROUND",
    "MAX_SCAN",
    "MatrixOverGF",
    "Matroid",
    "MatroidError",
    "MinorSpec",
    "NAMED_CATALOG",
    "OracleStep",
    "OverlappingSpec",
    "OxleyMinor",
    "ParseError",
    "PreconditionViolated",
    "PropertyReport",
    "SuiteResult",
    "TheoremViolation",
    "UnknownName",
    "WitnessChain",
    "WitnessStep",
    "achieved_sizes",
    "cc_intersections",
    "ce_family",
    "check_ce_families",
    "check_circuit_pairs",
    "check_rank2_circuits",
    "cocircuits",
    "contract",
    "corank",
    "delete",
    "dual",
    "find_intersection_of_size",
    "from_circuits",
    "from_graph",
    "from_matrix",
    "lift_intersection",
    "minor",
    "named",
    "oxley_minor",
    "random_linear",
    "random_matrix",
    "uniform",
    "validate_circuit_axioms",
    "verify_conjecture",
    "witness_k4",
    "witness_k5",
    "witness_k6",
]
