"""Immutable, interned scoring-play game trees.

A game is a node carrying a set of Left options, an exact rational score,
and a set of Right options; options are games themselves.  Nodes are
hash-consed in a process-global append-only store, so structurally equal
trees always receive the same integer id.  Id equality *is* structural
equality, which lets every other module memoize on plain ints.

Option tuples are kept sorted under a structural total order (score first,
then Left options lexicographically, then Right options), so the canonical
form of a tree does not depend on construction order and printed output is
stable across runs.

Scores are `fractions.Fraction` throughout.  Floats are rejected: this
library is exact or it is nothing.

Thread safety: insertions take a lock; everything else is pure reads of
append-only structures, so races at worst recompute a memo entry.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Union

GameId = int
Score = Fraction
ScoreLike = Union[int, str, Fraction]

_Node = tuple[tuple[GameId, ...], Fraction, tuple[GameId, ...]]

_lock = threading.Lock()
_nodes: list[_Node] = []
_index: dict[_Node, GameId] = {}
_cmp_memo: dict[tuple[GameId, GameId], int] = {}


def as_score(value: ScoreLike) -> Fraction:
    """Coerce an int, Fraction, or string like '-3/4' to an exact score."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError(f"not a score: {value!r}")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"scores must be exact rationals, got {type(value).__name__}")


def _node(g: GameId) -> _Node:
    if not isinstance(g, int) or isinstance(g, bool) or not 0 <= g < len(_nodes):
        raise ValueError(f"unknown game id: {g!r}")
    return _nodes[g]


def _compare(a: GameId, b: GameId) -> int:
    """Structural total order on interned games.

    Only canonical (interned) nodes are ever compared, so two distinct ids
    always differ somewhere and the result is never 0 for a != b.
    """
    if a == b:
        return 0
    key = (a, b)
    got = _cmp_memo.get(key)
    if got is not None:
        return got
    la, sa, ra = _nodes[a]
    lb, sb, rb = _nodes[b]
    result = 0
    if sa != sb:
        result = -1 if sa < sb else 1
    else:
        for xs, ys in ((la, lb), (ra, rb)):
            for x, y in zip(xs, ys):
                c = _compare(x, y)
                if c:
                    result = c
                    break
            if not result and len(xs) != len(ys):
                result = -1 if len(xs) < len(ys) else 1
            if result:
                break
    _cmp_memo[key] = result
    _cmp_memo[(b, a)] = -result
    return result


structural_sort_key = cmp_to_key(_compare)


def _canonical_options(ids: Iterable[GameId]) -> tuple[GameId, ...]:
    unique = set()
    for g in ids:
        _node(g)
        unique.add(g)
    return tuple(sorted(unique, key=structural_sort_key))


def make_game(left: Iterable[GameId], score: ScoreLike, right: Iterable[GameId]) -> GameId:
    """Intern the game with the given options and score, returning its id.

    Options are deduplicated and sorted; the same tree always comes back
    with the same id no matter how it was assembled.
    """
    s = as_score(score)
    key = (_canonical_options(left), s, _canonical_options(right))
    got = _index.get(key)
    if got is not None:
        return got
    with _lock:
        got = _index.get(key)
        if got is None:
            got = len(_nodes)
            _nodes.append(key)
            _index[key] = got
        return got


def number(score: ScoreLike) -> GameId:
    """The option-less game that just sits on `score`."""
    return make_game((), score, ())


def left_options(g: GameId) -> tuple[GameId, ...]:
    return _node(g)[0]


def right_options(g: GameId) -> tuple[GameId, ...]:
    return _node(g)[2]


def score(g: GameId) -> Fraction:
    return _node(g)[1]


def is_leaf(g: GameId) -> bool:
    left, _, right = _node(g)
    return not left and not right


def store_size() -> int:
    """Number of interned nodes (diagnostic)."""
    return len(_nodes)


_negate_memo: dict[GameId, GameId] = {}
_reverse_memo: dict[GameId, GameId] = {}
_shift_memo: dict[tuple[GameId, Fraction], GameId] = {}
_magnitude_memo: dict[GameId, Fraction] = {}


def negate(g: GameId) -> GameId:
    """Swap the players and negate every score.  An involution."""
    got = _negate_memo.get(g)
    if got is None:
        left, s, right = _node(g)
        got = make_game([negate(x) for x in right], -s, [negate(x) for x in left])
        _negate_memo[g] = got
    return got


def reverse(g: GameId) -> GameId:
    """Negate every score but leave each player's options in place.

    Unlike `negate` this does not swap sides: reverse({4|3|2}) = {-4|-3|-2}
    while negate({4|3|2}) = {-2|-3|-4}.  Also an involution.
    """
    got = _reverse_memo.get(g)
    if got is None:
        left, s, right = _node(g)
        got = make_game([reverse(x) for x in left], -s, [reverse(x) for x in right])
        _reverse_memo[g] = got
    return got


def shift(g: GameId, amount: ScoreLike) -> GameId:
    """Add `amount` to the score of every node in the tree."""
    c = as_score(amount)
    if not c:
        _node(g)
        return g
    key = (g, c)
    got = _shift_memo.get(key)
    if got is None:
        left, s, right = _node(g)
        got = make_game([shift(x, c) for x in left], s + c, [shift(x, c) for x in right])
        _shift_memo[key] = got
    return got


def max_score_magnitude(g: GameId) -> Fraction:
    """Largest |score| over all nodes of the tree."""
    got = _magnitude_memo.get(g)
    if got is None:
        left, s, right = _node(g)
        got = abs(s)
        for x in left + right:
            m = max_score_magnitude(x)
            if m > got:
                got = m
        _magnitude_memo[g] = got
    return got
