"""Sum operators over scoring games.

Four ways to play several games at once, differing in how many components
the player to move must touch:

* DISJUNCTIVE  - move in exactly one component.
* CONJUNCTIVE  - move in every component where you have an option;
  components that offer you nothing sit out of the turn.
* SELECTIVE    - move in any nonempty subset of the components that offer
  you an option.
* SEQUENTIAL   - components are ordered; only the head component may be
  played.  Once the head has no options at all, its score folds into the
  rest as a constant and play continues on the next component.  If the
  head has options for one player only, the other player is stuck (and
  the game ends on their turn) even if later components could help them.

Composite scores are the sum of component scores at every node, so play
ending at any point pays out the sum of wherever each component stopped.

`sum_games` materializes the composite as an ordinary interned tree;
`eval_sum` computes its final scores directly on multisets of component
ids without building the tree.  The two must agree exactly, and the test
suite holds them to that.

The `conjunctive_literal` flag switches the conjunctive operator to the
stricter reading in which a player with no option in *some* component
cannot move at all.  It exists so tests can demonstrate that the two
readings genuinely diverge; nothing else should use it.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement, product
from typing import Iterable, Sequence

from .evaluate import FinalScores
from .game import GameId, _node, is_leaf, left_options, make_game, number, right_options, score, shift


class Operator(Enum):
    DISJUNCTIVE = "disjunctive"
    CONJUNCTIVE = "conjunctive"
    SELECTIVE = "selective"
    SEQUENTIAL = "sequential"

    @classmethod
    def parse(cls, text: str) -> "Operator":
        """Accept a full name or any unambiguous prefix of length >= 3."""
        key = text.strip().lower()
        if len(key) >= 3:
            hits = [op for op in cls if op.value.startswith(key)]
            if len(hits) == 1:
                return hits[0]
        raise ValueError(f"unknown operator: {text!r}")


_COMMUTATIVE = (Operator.DISJUNCTIVE, Operator.CONJUNCTIVE, Operator.SELECTIVE)


def _validated(games: Iterable[GameId]) -> tuple[GameId, ...]:
    comps = tuple(games)
    if not comps:
        raise ValueError("a sum needs at least one component")
    for g in comps:
        _node(g)
    return comps


def _group_choices(options: Sequence[GameId], count: int, smallest: int):
    """Ways to replace j of `count` identical components by options, j >= smallest.

    Yields (j, replacement-tuple) with replacements drawn with repetition,
    deduplicated by the multiset chosen.
    """
    for j in range(smallest, count + 1):
        if j == 0:
            yield 0, ()
        else:
            for chosen in combinations_with_replacement(options, j):
                yield j, chosen


def _successor_multisets(op: Operator, comps: Sequence[GameId], side: str,
                         literal: bool) -> set[tuple[GameId, ...]]:
    """Distinct component multisets reachable in one move by `side`."""
    opts = {g: (left_options(g) if side == "L" else right_options(g)) for g in set(comps)}
    out: set[tuple[GameId, ...]] = set()
    if op is Operator.DISJUNCTIVE:
        comps = tuple(comps)
        for i, g in enumerate(comps):
            rest = comps[:i] + comps[i + 1:]
            for o in opts[g]:
                out.add(tuple(sorted(rest + (o,))))
        return out

    groups = sorted({g: comps.count(g) for g in set(comps)}.items())
    if op is Operator.CONJUNCTIVE and literal:
        if any(not opts[g] for g, _ in groups):
            return out
        movable = groups
        idle: list[tuple[GameId, int]] = []
    else:
        movable = [(g, c) for g, c in groups if opts[g]]
        idle = [(g, c) for g, c in groups if not opts[g]]
        if not movable:
            return out

    idle_part: tuple[GameId, ...] = ()
    for g, c in idle:
        idle_part += (g,) * c

    if op is Operator.CONJUNCTIVE:
        per_group = [[chosen for _, chosen in _group_choices(opts[g], c, c)] for g, c in movable]
        combos = product(*per_group)
        for combo in combos:
            parts = idle_part
            for (g, c), chosen in zip(movable, combo):
                parts += chosen
            out.add(tuple(sorted(parts)))
        return out

    # selective: any assignment, excluding the one that moves nothing
    per_group = [list(_group_choices(opts[g], c, 0)) for g, c in movable]
    for combo in product(*per_group):
        if not any(j for j, _ in combo):
            continue
        parts = idle_part
        for (g, c), (j, chosen) in zip(movable, combo):
            parts += chosen + (g,) * (c - j)
        out.add(tuple(sorted(parts)))
    return out


_build_memo: dict[tuple[Operator, bool, tuple[GameId, ...]], GameId] = {}


def _composite(op: Operator, comps: Sequence[GameId], literal: bool) -> GameId:
    """Composite tree for a multiset of components, folding leaves into a shift."""
    folded = Fraction(0)
    core = []
    for g in comps:
        if is_leaf(g):
            folded += score(g)
        else:
            core.append(g)
    if not core:
        return number(folded)
    core_t = tuple(sorted(core))
    key = (op, literal, core_t)
    built = _build_memo.get(key)
    if built is None:
        total = sum((score(g) for g in core_t), Fraction(0))
        lefts = [_composite(op, ms, literal)
                 for ms in _successor_multisets(op, core_t, "L", literal)]
        rights = [_composite(op, ms, literal)
                  for ms in _successor_multisets(op, core_t, "R", literal)]
        built = make_game(lefts, total, rights)
        _build_memo[key] = built
    return shift(built, folded) if folded else built


_seq_join_memo: dict[tuple[GameId, GameId], GameId] = {}


def _seq_join(g: GameId, h: GameId) -> GameId:
    """Binary sequential join: play g out, then h, scores accumulating."""
    if is_leaf(g):
        return shift(h, score(g))
    key = (g, h)
    got = _seq_join_memo.get(key)
    if got is None:
        left, s, right = _node(g)
        got = make_game([_seq_join(x, h) for x in left],
                        s + score(h),
                        [_seq_join(x, h) for x in right])
        _seq_join_memo[key] = got
    return got


def sum_games(op: Operator, games: Iterable[GameId], *,
              conjunctive_literal: bool = False) -> GameId:
    """Combine games under `op` into a single interned tree."""
    comps = _validated(games)
    if op is Operator.SEQUENTIAL:
        # right-associated: [a, b, c] becomes a |> (b |> c)
        return reduce(lambda acc, g: _seq_join(g, acc), reversed(comps[:-1]), comps[-1])
    return _composite(op, comps, conjunctive_literal)


_ms_value_memo: dict[tuple[Operator, bool, str, tuple[GameId, ...]], Fraction] = {}
_seq_value_memo: dict[tuple[str, tuple[GameId, ...]], Fraction] = {}


def _ms_value(op: Operator, comps: Sequence[GameId], side: str, literal: bool) -> Fraction:
    folded = Fraction(0)
    core = []
    for g in comps:
        if is_leaf(g):
            folded += score(g)
        else:
            core.append(g)
    if not core:
        return folded
    core_t = tuple(sorted(core))
    key = (op, literal, side, core_t)
    val = _ms_value_memo.get(key)
    if val is None:
        succs = _successor_multisets(op, core_t, side, literal)
        if not succs:
            val = sum((score(g) for g in core_t), Fraction(0))
        else:
            flipped = "R" if side == "L" else "L"
            values = (_ms_value(op, ms, flipped, literal) for ms in succs)
            val = max(values) if side == "L" else min(values)
        _ms_value_memo[key] = val
    return folded + val


def _seq_value(comps: Sequence[GameId], side: str) -> Fraction:
    folded = Fraction(0)
    rest = list(comps)
    while rest and is_leaf(rest[0]):
        folded += score(rest.pop(0))
    if not rest:
        return folded
    seq = tuple(rest)
    key = (side, seq)
    val = _seq_value_memo.get(key)
    if val is None:
        head = seq[0]
        options = left_options(head) if side == "L" else right_options(head)
        if not options:
            val = sum((score(g) for g in seq), Fraction(0))
        else:
            flipped = "R" if side == "L" else "L"
            values = (_seq_value((o,) + seq[1:], flipped) for o in options)
            val = max(values) if side == "L" else min(values)
        _seq_value_memo[key] = val
    return folded + val


def eval_sum(op: Operator, games: Iterable[GameId], *,
             conjunctive_literal: bool = False) -> FinalScores:
    """Final scores of the composite, computed without materializing it.

    Agrees exactly with final_scores(sum_games(op, games)).
    """
    comps = _validated(games)
    if op is Operator.SEQUENTIAL:
        return FinalScores(_seq_value(comps, "L"), _seq_value(comps, "R"))
    return FinalScores(_ms_value(op, comps, "L", conjunctive_literal),
                       _ms_value(op, comps, "R", conjunctive_literal))
