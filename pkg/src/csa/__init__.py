"""Decision-support engine for ranking, weighting and trisecting a set of
candidate disorders from a clinician's pairwise judgments."""

__version__ = "0.1.0"

from .orders import (  # noqa: F401
    Axiom,
    Disorder,
    DisorderSet,
    OrderClass,
    PairJudgment,
    Ranking,
    StrictRelation,
    Verdict,
    build_relation,
    check_axiom,
    classify,
    derive_indifference,
    enumerate_semiorder_chains,
    rank_linear,
    rank_weak,
)
from .weighting import (  # noqa: F401
    ComparisonMatrix,
    Hierarchy,
    ImportanceScale,
    assign_scale_weights,
    build_importance_scale,
    consistency,
    principal_eigen,
    validate_matrix,
    weigh_hierarchy,
)
from .trisection import (  # noqa: F401
    esv,
    percentile_thresholds,
    statistical_thresholds,
    topo_rank,
    trisect,
)
from .store import SessionStore  # noqa: F401
