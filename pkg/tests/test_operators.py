"""The four sum operators: materialized trees and the direct evaluator."""

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from conftest import as_tuple, naive_sum_scores, small_games_st
from scoreplay import (Operator, eval_sum, final_scores, identity_game,
                       make_game, number, outcome, parse_game, score,
                       sum_games)

OPS = tuple(Operator)
COMMUTATIVE = (Operator.DISJUNCTIVE, Operator.CONJUNCTIVE, Operator.SELECTIVE)


def paired_towers():
    """Two fixed trees whose composition scores are forced lines."""
    g = parse_game("{{.|-2|{.|3|{1|0|-4}}}|5|.}")
    h = parse_game("{.|2|{{{6|4|.}|-1|.}|7|.}}")
    return g, h


def test_operator_parse():
    assert Operator.parse("disjunctive") is Operator.DISJUNCTIVE
    assert Operator.parse("disj") is Operator.DISJUNCTIVE
    assert Operator.parse("CONJ") is Operator.CONJUNCTIVE
    assert Operator.parse("sel") is Operator.SELECTIVE
    assert Operator.parse("seq") is Operator.SEQUENTIAL
    for bad in ("se", "x", "", "sequentially-ish"):
        with pytest.raises(ValueError):
            Operator.parse(bad)


def test_empty_sum_rejected():
    for op in OPS:
        with pytest.raises(ValueError):
            sum_games(op, [])
        with pytest.raises(ValueError):
            eval_sum(op, [])


def test_disjunctive_leaves():
    assert eval_sum(Operator.DISJUNCTIVE, [number(2), number(-2)]) == (0, 0)


def test_conjunctive_paired_towers():
    g, h = paired_towers()
    fs = eval_sum(Operator.CONJUNCTIVE, [g, h])
    assert fs.sl == 5 and fs.sr == 7
    assert final_scores(sum_games(Operator.CONJUNCTIVE, [g, h])) == fs


def test_conjunctive_literal_reading_differs():
    g, h = paired_towers()
    strict = eval_sum(Operator.CONJUNCTIVE, [g, h], conjunctive_literal=True)
    assert (strict.sl, strict.sr) != (5, 7)
    tree = sum_games(Operator.CONJUNCTIVE, [g, h], conjunctive_literal=True)
    assert final_scores(tree) == strict


def test_selective_chain_pair():
    g = parse_game("{{2|-3|.}|1|.}")
    h = parse_game("{.|0|{.|-5|{.|4|-6}}}")
    fs = eval_sum(Operator.SELECTIVE, [g, h])
    assert fs.sl == 2 + 4 and fs.sr == 2 + (-6)
    assert final_scores(sum_games(Operator.SELECTIVE, [g, h])) == fs


def test_sequential_of_leaves_is_shift():
    assert sum_games(Operator.SEQUENTIAL, [number(1), number(1)]) == number(2)


def test_sequential_head_then_tail():
    g = parse_game("{{2|-3|.}|1|.}")
    h = parse_game("{6|0|-7}")
    fs = eval_sum(Operator.SEQUENTIAL, [g, h])
    assert fs.sl == -3 + 0 and fs.sr == 1 + 0


def test_sequential_one_sided_head_locks_tail():
    # Right has no move in the head, so Right is stuck immediately even
    # though the tail would let them play
    g = parse_game("{0|1|.}")
    h = parse_game("{5|0|-5}")
    fs = eval_sum(Operator.SEQUENTIAL, [g, h])
    assert fs.sr == 1 + 0


def test_root_score_is_additive():
    comps = [parse_game("{1|2|3}"), number(Fraction(1, 2)), parse_game("{0|-1|0}")]
    for op in OPS:
        assert score(sum_games(op, comps)) == Fraction(3, 2)


@given(st.sampled_from(OPS),
       st.lists(small_games_st, min_size=1, max_size=3))
@settings(max_examples=150, deadline=None)
def test_eval_sum_matches_materialized_tree(op, comps):
    assert eval_sum(op, comps) == final_scores(sum_games(op, comps))


@given(st.sampled_from(OPS),
       st.lists(small_games_st, min_size=1, max_size=2))
@settings(max_examples=60, deadline=None)
def test_matches_brute_force_oracle(op, comps):
    expected = naive_sum_scores(op, [as_tuple(g) for g in comps])
    fs = eval_sum(op, comps)
    assert (fs.sl, fs.sr) == expected


@given(st.sampled_from(COMMUTATIVE),
       st.lists(small_games_st, min_size=2, max_size=3))
@settings(max_examples=60, deadline=None)
def test_commutative_ops_ignore_order(op, comps):
    baseline = sum_games(op, comps)
    for perm in permutations(comps):
        assert sum_games(op, list(perm)) == baseline


@given(st.sampled_from(COMMUTATIVE), small_games_st, small_games_st,
       small_games_st)
@settings(max_examples=60, deadline=None)
def test_pairwise_fold_consistent_with_multiset(op, g, h, k):
    folded = sum_games(op, [sum_games(op, [g, h]), k])
    assert final_scores(folded) == eval_sum(op, [g, h, k])


@given(small_games_st)
@settings(max_examples=100, deadline=None)
def test_sequential_identity_game(g):
    i = identity_game()
    fs = final_scores(g)
    assert eval_sum(Operator.SEQUENTIAL, [g, i]) == fs
    assert eval_sum(Operator.SEQUENTIAL, [i, g]) == fs


def test_sequential_is_ordered_not_commutative():
    g = parse_game("{0|1|.}")
    h = parse_game("{.|-2|0}")
    one = eval_sum(Operator.SEQUENTIAL, [g, h])
    two = eval_sum(Operator.SEQUENTIAL, [h, g])
    assert one == (0, -1)
    assert two == (-1, 0)
