"""Journal ranking axioms: self-consistency, invariance to aggregation, and their clash."""

from .axioms import (
    ImpossibilityCertificate,
    IaViolation,
    certify_impossibility,
    check_ia,
    check_sc_method,
    validate_certificate,
)
from .core import (
    ClassFlags,
    MatchesMatrix,
    Problem,
    ProblemError,
    aggregate,
    classify,
    extremal_transform,
    matches_matrix,
    sum_problems,
)
from .decomp import (
    CompetitorSet,
    Decomposition,
    DecompositionError,
    Layer,
    SearchBounds,
    canonical_decomposition,
    competitor_set,
    enumerate_decompositions,
    validate_decomposition,
)
from .formats import parse_problem
from .methods import ScoreVector, flat, induced_order, least_squares, net_sum
from .sc import (
    DominanceWitness,
    EnumerationLimitError,
    ScViolation,
    WeakOrder,
    enumerate_weak_orders,
    sc_admissible,
    sc_admissible_set,
    sc_check_scores,
    sc_dominates,
)
from .search import FamilySpec, enumerate_problems, sweep_impossibility, sweep_violations

__version__ = "0.1.0"
