"""Scoring-play combinatorial games with exact rational scores.

Build game trees, evaluate final scores under optimal play, combine games
with four sum operators (disjunctive, conjunctive, selective, sequential),
compute heap values for octal rulesets under each operator, and hunt for
periodicity in the value tables.
"""

from .game import (GameId, Score, as_score, is_leaf, left_options, make_game,
                   max_score_magnitude, negate, number, reverse, right_options,
                   score, shift, store_size, structural_sort_key)
from .evaluate import FinalScores, Outcome, best_line, final_scores, outcome, outcome_of_scores
from .operators import Operator, eval_sum, sum_games
from .notation import (NotationError, format_game, format_score, parse_game,
                       parse_game_lines, parse_octal)
from .octal import (OctalRuleset, OperatorPeriods, PeriodComparison, PeriodReport,
                    compare_periods, default_points, find_period, grundy_value,
                    heap_game, heap_moves, heap_value, reference_period, value_table)
from .structure import (ContextWitness, IdentityTestReport, ImpartialParams,
                        conjunctive_inverse, distinguishing_context, identity_game,
                        identity_test, inverse_search, is_impartial, nonzero_witness,
                        random_game, random_impartial)
from .verify import CheckResult, check_names, run_checks

__all__ = [
    "GameId", "Score", "as_score", "is_leaf", "left_options", "make_game",
    "max_score_magnitude", "negate", "number", "reverse", "right_options",
    "score", "shift", "store_size", "structural_sort_key",
    "FinalScores", "Outcome", "best_line", "final_scores", "outcome", "outcome_of_scores",
    "Operator", "eval_sum", "sum_games",
    "NotationError", "format_game", "format_score", "parse_game",
    "parse_game_lines", "parse_octal",
    "OctalRuleset", "OperatorPeriods", "PeriodComparison", "PeriodReport",
    "compare_periods", "default_points", "find_period", "grundy_value",
    "heap_game", "heap_moves", "heap_value", "reference_period", "value_table",
    "ContextWitness", "IdentityTestReport", "ImpartialParams",
    "conjunctive_inverse", "distinguishing_context", "identity_game",
    "identity_test", "inverse_search", "is_impartial", "nonzero_witness",
    "random_game", "random_impartial",
    "CheckResult", "check_names", "run_checks",
]

__version__ = "0.1.0"
