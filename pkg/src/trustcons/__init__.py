"""Trust-network consensus over argument weightings.

Agents connected by a row-stochastic trust matrix average their scores for a
library of argument weightings until they agree, then either pick the
best-supported weightings or blend them into one aggregated weighting.
"""

from .argumentation import (
    PROPERTIES,
    ArgumentationFramework,
    WeightingFunction,
    WeightingLibrary,
    WeightingProperty,
    attackers,
    check_property,
    filter_library,
    hcat_weighting,
)
from .consensus import (
    ConsensusResult,
    PowerIteration,
    ScoringProfile,
    aggregate_weighting,
    consensus_scores,
    dictatorship_possible,
    output_set,
    power_consensus,
    propagate_step,
    run_consensus,
    stationary_exact,
)
from .errors import ConvergenceError, GenerationError, NoUniqueConsensusError, ValidationError
from .io import load_roundabout
from .trust import (
    GenerationConfig,
    TrustGraphAnalysis,
    TrustMatrix,
    analyze_graph,
    can_reach_consensus,
    generate_convergent,
    same_support,
    validate,
)

__version__ = "0.1.0"
