"""Citation indices and input-oriented CCR efficiency analysis for researchers."""

from .analysis import (
    AnalysisError,
    CorrelationPair,
    CorrelationReport,
    MetricReport,
    RankEntry,
    Ranking,
    build_report,
    rank,
    rank_correlation,
)
from .corpus import (
    CorpusError,
    DmuAggregate,
    PaperRecord,
    ResearcherProfile,
    aggregate,
    aggregates_to_csv,
    parse_aggregates,
    parse_h_values,
    parse_papers,
    parse_profiles,
    profiles_to_csv,
)
from .dea import (
    DEFAULT_EPSILON,
    DeaError,
    DmuSet,
    EfficiencyScore,
    build_ccr_lp,
    ccr_all,
    ccr_efficiency,
    frontier,
)
from .indices import (
    IndexName,
    IndexValue,
    PenaltyParams,
    a_index,
    compute_indices,
    g_index,
    h_core,
    h_index,
    individual_h,
    r_index,
    scientific_impact,
    scientific_impact_penalized,
    t_index,
    t_index_thresholded,
)
from .lp import (
    FEASIBILITY_TOL,
    PIVOT_TOL,
    Constraint,
    LinearProgram,
    LpSolution,
    LpStatus,
    Relation,
    solve_lp,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisError",
    "Constraint",
    "CorpusError",
    "CorrelationPair",
    "CorrelationReport",
    "DEFAULT_EPSILON",
    "DeaError",
    "DmuAggregate",
    "DmuSet",
    "EfficiencyScore",
    "FEASIBILITY_TOL",
    "IndexName",
    "IndexValue",
    "LinearProgram",
    "LpSolution",
    "LpStatus",
    "MetricReport",
    "PIVOT_TOL",
    "PaperRecord",
    "PenaltyParams",
    "RankEntry",
    "Ranking",
    "Relation",
    "ResearcherProfile",
    "a_index",
    "aggregate",
    "aggregates_to_csv",
    "build_ccr_lp",
    "build_report",
    "ccr_all",
    "ccr_efficiency",
    "compute_indices",
    "frontier",
    "g_index",
    "h_core",
    "h_index",
    "individual_h",
    "parse_aggregates",
    "parse_h_values",
    "parse_papers",
    "parse_profiles",
    "profiles_to_csv",
    "r_index",
    "rank",
    "rank_correlation",
    "scientific_impact",
    "scientific_impact_penalized",
    "solve_lp",
    "t_index",
    "t_index_thresholded",
]
