"""Shared test helpers: a from-scratch oracle evaluator and hypothesis strategies.

The oracle works on plain nested tuples, never touching the interned
store or any memo table, so it catches bugs in interning and caching
rather than inheriting them.  Keep oracle inputs small; it is
deliberately exponential.
"""

from fractions import Fraction
from itertools import combinations, product

import hypothesis.strategies as st

from scoreplay import (GameId, Operator, left_options, make_game, number,
                       right_options, score)

# -- plain-tuple mirror of the interned trees -------------------------------

def as_tuple(g: GameId):
    """(left options, score, right options) with options as tuples too."""
    return (tuple(as_tuple(x) for x in left_options(g)),
            score(g),
            tuple(as_tuple(x) for x in right_options(g)))


def naive_scores(t):
    """(SL, SR) of a tuple game, straight off the definition."""
    left, s, right = t
    sl = max(naive_scores(x)[1] for x in left) if left else s
    sr = min(naive_scores(x)[0] for x in right) if right else s
    return (sl, sr)


def _moves(op: Operator, comps, idx: int):
    """Successor component tuples for the side owning option slot `idx`."""
    if op is Operator.DISJUNCTIVE:
        for i, c in enumerate(comps):
            for o in c[idx]:
                yield comps[:i] + (o,) + comps[i + 1:]
    elif op is Operator.CONJUNCTIVE:
        avail = [i for i, c in enumerate(comps) if c[idx]]
        if not avail:
            return
        for choice in product(*(comps[i][idx] for i in avail)):
            out = list(comps)
            for i, o in zip(avail, choice):
                out[i] = o
            yield tuple(out)
    elif op is Operator.SELECTIVE:
        avail = [i for i, c in enumerate(comps) if c[idx]]
        for r in range(1, len(avail) + 1):
            for picked in combinations(avail, r):
                for choice in product(*(comps[i][idx] for i in picked)):
                    out = list(comps)
                    for i, o in zip(picked, choice):
                        out[i] = o
                    yield tuple(out)
    else:
        i = 0
        while i < len(comps) and not comps[i][0] and not comps[i][2]:
            i += 1
        if i < len(comps):
            for o in comps[i][idx]:
                yield comps[:i] + (o,) + comps[i + 1:]


def _naive_best(op: Operator, comps, idx: int):
    succs = list(_moves(op, comps, idx))
    if not succs:
        return sum(c[1] for c in comps)
    nxt = 2 if idx == 0 else 0
    vals = [_naive_best(op, s, nxt) for s in succs]
    return max(vals) if idx == 0 else min(vals)


def naive_sum_scores(op: Operator, comps):
    """(SL, SR) of a sum of tuple games, by brute-force game search."""
    comps = tuple(comps)
    return (_naive_best(op, comps, 0), _naive_best(op, comps, 2))


# -- hypothesis strategies ---------------------------------------------------

scores_st = st.fractions(min_value=Fraction(-9), max_value=Fraction(9),
                         max_denominator=3)


def games_st(max_leaves: int = 10, max_options: int = 3):
    """Interned game ids with bounded size."""
    return st.recursive(
        st.builds(number, scores_st),
        lambda kids: st.builds(
            lambda left, s, right: make_game(left, s, right),
            st.lists(kids, max_size=max_options),
            scores_st,
            st.lists(kids, max_size=max_options)),
        max_leaves=max_leaves)


small_games_st = games_st(max_leaves=6, max_options=2)
