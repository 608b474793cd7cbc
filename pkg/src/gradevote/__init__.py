"""Grade-based election tallying.

Methods: general majority judgement (any ordered grade scale, iterated
median tie-break), its three-grade raw-score form, a strong/weak approval
election procedure with block ranking and ballot rejection, and a
binary-bracket baseline.  A brute-force property harness checks weak
consistency, participation (no-show) behaviour, and polarization shifts on
desk-scale instances.
"""

from .approval import (
    APPROVAL_SCALE,
    ApprovalTally,
    approval_rank,
    borderline_candidates,
    classify_block,
)
from .ballot_io import (
    ElectionConfig,
    ParseIssue,
    ParseReport,
    ballots_to_csv,
    bracket_ballots_to_json,
    config_to_json,
    load_config,
    parse_ballots,
    parse_bracket_ballots,
    parse_result_json,
    percent_half_up,
    render_bracket,
    render_result,
)
from .bracket import (
    BracketBallot,
    BracketNode,
    BracketResult,
    NodeDecision,
    bracket_elect,
    bracket_tree,
    sincere_ballot,
)
from .core import (
    Ballot,
    Candidate,
    ConfigError,
    ElectionProfile,
    GradeProfile,
    GradeScale,
    ValidationError,
    VoteError,
    build_profiles,
    election_from_counts,
)
from .fixtures import FIXTURES, Fixture, load_fixture
from .mj import MajorityGrade, majority_grade, majority_value, mj_rank
from .mj3 import AltScores, ScorePair, Tally3, alt_scores, mj3_rank, score3
from .properties import (
    ConsistencyViolation,
    CrossMethodReport,
    ManipulationReport,
    NoShowCounterexample,
    NoShowSweepReport,
    Outcome,
    PartitionCheckReport,
    PolarizationShift,
    check_consistency,
    check_consistency_splits,
    manipulation_probe,
    outcome_of,
    polarization_sweep,
    polarize,
    random_consistency_sweep,
    search_cross_method_disagreements,
    search_no_show,
    search_no_show_exhaustive,
)
from .results import Block, RankedEntry, RankedResult

__version__ = "0.1.0"

__all__ = [
    "APPROVAL_SCALE",
    "AltScores",
    "ApprovalTally",
    "Ballot",
    "Block",
    "BracketBallot",
    "BracketNode",
    "BracketResult",
    "Candidate",
    "ConfigError",
    "ConsistencyViolation",
    "CrossMethodReport",
    "ElectionConfig",
    "ElectionProfile",
    "FIXTURES",
    "Fixture",
    "GradeProfile",
    "GradeScale",
    "MajorityGrade",
    "ManipulationReport",
    "NoShowCounterexample",
    "NoShowSweepReport",
    "NodeDecision",
    "Outcome",
    "ParseIssue",
    "ParseReport",
    "PartitionCheckReport",
    "PolarizationShift",
    "RankedEntry",
    "RankedResult",
    "ScorePair",
    "Tally3",
    "ValidationError",
    "VoteError",
    "approval_rank",
    "alt_scores",
    "ballots_to_csv",
    "borderline_candidates",
    "bracket_ballots_to_json",
    "bracket_elect",
    "bracket_tree",
    "build_profiles",
    "check_consistency",
    "check_consistency_splits",
    "classify_block",
    "config_to_json",
    "election_from_counts",
    "load_config",
    "load_fixture",
    "majority_grade",
    "majority_value",
    "manipulation_probe",
    "mj3_rank",
    "mj_rank",
    "outcome_of",
    "parse_ballots",
    "parse_bracket_ballots",
    "parse_result_json",
    "percent_half_up",
    "polarization_sweep",
    "polarize",
    "random_consistency_sweep",
    "render_bracket",
    "render_result",
    "score3",
    "search_cross_method_disagreements",
    "search_no_show",
    "search_no_show_exhaustive",
    "sincere_ballot",
]
