"""Structural probes: impartial games, inverses, witnesses, and searches.

An impartial game here is one where, at every node, the two players'
options mirror each other relative to the node score: for each Left
option there is a Right option that is its exact negation after shifting
the node score away, and vice versa.  Impartial games with zero scores
everywhere relative to the root are their own negatives, which is what
makes `reverse` (flip scores, keep sides) act as an inverse for the
conjunctive operator while plain `negate` does not.

The searches in this module are deliberately bounded and deterministic:
they enumerate candidates in a fixed canonical order under explicit depth
and budget caps, so a None answer means "nothing within these bounds",
never "gave up at random".
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .evaluate import Outcome, outcome, outcome_of_scores
from .game import (GameId, _node, as_score, is_leaf, left_options, make_game,
                   max_score_magnitude, negate, number, reverse, right_options,
                   score, shift)
from .notation import format_game
from .operators import Operator, eval_sum, sum_games

_impartial_memo: dict[GameId, bool] = {}


def is_impartial(g: GameId) -> bool:
    """Whether both players have mirrored options at every node."""
    got = _impartial_memo.get(g)
    if got is None:
        left, s, right = _node(g)
        got = bool(left) == bool(right)
        if got and left:
            lefts = {shift(x, -s) for x in left}
            rights = {negate(shift(x, -s)) for x in right}
            got = lefts == rights
        if got:
            got = all(is_impartial(x) for x in left + right)
        _impartial_memo[g] = got
    return got


@dataclass(frozen=True)
class ImpartialParams:
    """Shape controls for the random generators; same seed, same games."""
    max_depth: int = 3
    max_branch: int = 2
    palette: tuple = (Fraction(-2), Fraction(-1), Fraction(0), Fraction(1), Fraction(2))
    leaf_probability: float = 0.25
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "palette", tuple(as_score(p) for p in self.palette))
        if self.max_depth < 0:
            raise ValueError("max_depth must be nonnegative")
        if self.max_branch < 1:
            raise ValueError("max_branch must be at least 1")
        if not self.palette:
            raise ValueError("palette must not be empty")
        if not 0 <= self.leaf_probability <= 1:
            raise ValueError("leaf_probability must be within [0, 1]")


def random_impartial(params: ImpartialParams, rng: Optional[random.Random] = None) -> GameId:
    """A random impartial game: scores from the palette shape the drift.

    Each Left option is built recursively at score s + p for a palette
    increment p, and its mirror image becomes the matching Right option.
    Pass an rng to draw a stream; otherwise params.seed fixes the game.
    """
    rng = rng or random.Random(params.seed)

    def build(depth: int, s: Fraction) -> GameId:
        if depth <= 0 or rng.random() < params.leaf_probability:
            return number(s)
        lefts, rights = [], []
        for _ in range(rng.randint(1, params.max_branch)):
            p = rng.choice(params.palette)
            gl = build(depth - 1, s + p)
            lefts.append(gl)
            rights.append(_mirror_option(gl, s))
        return make_game(lefts, s, rights)

    return build(params.max_depth, rng.choice(params.palette))


def random_game(params: ImpartialParams, rng: Optional[random.Random] = None) -> GameId:
    """A random unconstrained game; node scores drawn from the palette."""
    rng = rng or random.Random(params.seed)

    def build(depth: int) -> GameId:
        s = rng.choice(params.palette)
        if depth <= 0 or rng.random() < params.leaf_probability:
            return number(s)
        lefts = [build(depth - 1) for _ in range(rng.randint(0, params.max_branch))]
        rights = [build(depth - 1) for _ in range(rng.randint(0, params.max_branch))]
        return make_game(lefts, s, rights)

    return build(params.max_depth)


def identity_game() -> GameId:
    """Two tempo moves for each player, all scores zero: {{0|0|0}|0|{0|0|0}}."""
    z = number(0)
    half = make_game([z], 0, [z])
    return make_game([half], 0, [half])


def _single_line(g: GameId) -> bool:
    """At most one option per side everywhere: play is one forced line."""
    left, _, right = _node(g)
    if len(left) > 1 or len(right) > 1:
        return False
    return all(_single_line(x) for x in left + right)


def conjunctive_inverse(g: GameId) -> GameId:
    """The score-reversed copy that cancels `g` under the conjunctive sum.

    Defined for impartial games whose play is a single forced line (at
    most one option per side at every node).  There the result is
    impartial, its final scores are the negatives of g's, and g combined
    with it conjunctively is a tie.  With branching options score
    reversal stops being an inverse: reversing turns the mover's pick of
    the best option into a pick of the worst, and concrete impartial
    games exist where the reversed pair is not a tie.  Note negate(g) is
    never an inverse either: it mirrors the wrong way.
    """
    if not is_impartial(g):
        raise ValueError("conjunctive inverses are defined for impartial games")
    if not _single_line(g):
        raise ValueError("score reversal only inverts single-line impartial "
                         "games (one option per side at every node)")
    return reverse(g)


@dataclass(frozen=True)
class IdentityTestReport:
    candidate: GameId
    operator: Operator
    samples: int
    passes: int
    first_counterexample: Optional[GameId]

    @property
    def all_passed(self) -> bool:
        return self.passes == self.samples

    def to_dict(self) -> dict:
        return {
            "candidate": format_game(self.candidate),
            "operator": self.operator.value,
            "samples": self.samples,
            "passes": self.passes,
            "all_passed": self.all_passed,
            "first_counterexample": (None if self.first_counterexample is None
                                     else format_game(self.first_counterexample)),
        }


def identity_test(candidate: GameId, op: Operator, samples: int = 200,
                  params: Optional[ImpartialParams] = None) -> IdentityTestReport:
    """Does composing with `candidate` ever change an outcome?

    Draws sample games (impartial ones, except under the sequential
    operator where the identity claim ranges over all games) and compares
    outcome(candidate (+) sample) against outcome(sample).
    """
    params = params or ImpartialParams()
    rng = random.Random(params.seed)
    draw = random_game if op is Operator.SEQUENTIAL else random_impartial
    passes = 0
    first = None
    for _ in range(samples):
        probe = draw(params, rng)
        if outcome_of_scores(eval_sum(op, [candidate, probe])) == outcome(probe):
            passes += 1
        elif first is None:
            first = probe
    return IdentityTestReport(candidate, op, samples, passes, first)


@dataclass(frozen=True)
class ContextWitness:
    """A context X whose composition changed an outcome, with the receipts."""
    context: GameId
    operator: Operator
    outcome_composed: Outcome
    outcome_baseline: Outcome

    def __post_init__(self):
        if self.outcome_composed == self.outcome_baseline:
            raise ValueError("a witness must record two different outcomes")

    def to_dict(self) -> dict:
        return {
            "context": format_game(self.context),
            "operator": self.operator.value,
            "outcome_composed": self.outcome_composed.value,
            "outcome_baseline": self.outcome_baseline.value,
        }


def nonzero_witness(g: GameId, op: Operator) -> ContextWitness:
    """A context separating `g` from the zero game under op.

    Any game that is not literally the zero game admits one: a bare
    nonzero score is separated by the zero context, and a game with moves
    is separated by a one-sided trap whose payoff outweighs every score
    in `g` as well as the trap's own bonus point.  Works for the
    conjunctive and selective operators.
    """
    if op not in (Operator.CONJUNCTIVE, Operator.SELECTIVE):
        raise ValueError(f"no witness construction for {op.value} sums")
    if g == number(0):
        raise ValueError("the zero game has no separating context")
    if is_leaf(g):
        x = number(0)
    elif left_options(g):
        bad = -(1 + max(Fraction(1), max_score_magnitude(g)))
        x = make_game([], 1, [number(bad)])
    else:
        good = 1 + max(Fraction(1), max_score_magnitude(g))
        x = make_game([number(good)], -1, [])
    composed = outcome_of_scores(eval_sum(op, [g, x]))
    baseline = outcome(x)
    if composed == baseline:
        raise RuntimeError(
            f"separating context failed for {format_game(g)} under {op.value}; "
            "this is a bug in the operator semantics")
    return ContextWitness(x, op, composed, baseline)


def _mirror_option(x: GameId, s: Fraction) -> GameId:
    """The Right option paired with Left option `x` under a node score `s`."""
    return shift(negate(shift(x, -s)), s)


def _context_stream(g: GameId, h: GameId, depth: int, branching: int,
                    palette: Sequence[Fraction]) -> Iterator[GameId]:
    """Deterministic context enumeration: leaves, then impartial trees,
    then one-sided trap gadgets.

    Small scores come first (0 before 1 before -1 ...), so the returned
    witness is the least context that separates the games.  The tree
    sweep stays impartial; the partizan traps come last so they are only
    consulted once the symmetric candidates are spent.
    """
    pool = [number(s) for s in palette]
    yield from pool
    for _ in range(1, depth + 1):
        grown = []
        for s in palette:
            for k in range(1, branching + 1):
                for lefts in combinations(pool, k):
                    rights = [_mirror_option(x, s) for x in lefts]
                    built = make_game(lefts, s, rights)
                    grown.append(built)
                    yield built
        pool = pool + grown
    magnitude = max(Fraction(1), max_score_magnitude(g), max_score_magnitude(h))
    yield make_game([], 1, [number(-(1 + magnitude))])
    yield make_game([number(1 + magnitude)], -1, [])


def distinguishing_context(g: GameId, h: GameId, op: Operator, depth: int = 3,
                           budget: int = 10000, branching: int = 2,
                           palette: Sequence = (-2, -1, 0, 1, 2)) -> Optional[ContextWitness]:
    """Search for a context under which g and h have different outcomes.

    Enumerates contexts in a fixed order: score leaves, impartial trees
    over the palette up to `depth` with at most `branching` options per
    side, and finally the one-sided trap gadgets sized to the games at
    hand.  At most `budget` contexts are tested, so None means
    indistinguishable within those bounds, nothing more.
    """
    if g == h:
        return None
    pal = sorted({as_score(s) for s in palette}, key=lambda s: (abs(s), s))
    seen: set[GameId] = set()
    tried = 0
    for x in _context_stream(g, h, depth, branching, pal):
        if x in seen:
            continue
        seen.add(x)
        tried += 1
        if tried > budget:
            break
        composed = outcome_of_scores(eval_sum(op, [g, x]))
        baseline = outcome_of_scores(eval_sum(op, [h, x]))
        if composed != baseline:
            return ContextWitness(x, op, composed, baseline)
    return None


def _impartial_stream(g: GameId, depth: int, branching: int) -> Iterator[GameId]:
    """Impartial candidates in canonical order, sized to `g`'s scores."""
    magnitude = math.ceil(max_score_magnitude(g)) + 1
    scores = sorted((Fraction(s) for s in range(-magnitude, magnitude + 1)),
                    key=lambda s: (abs(s), s))
    increments = (Fraction(-2), Fraction(-1), Fraction(1), Fraction(2))
    pool: list[GameId] = []
    for s in scores:
        leaf = number(s)
        pool.append(leaf)
        yield leaf
    for _ in range(1, depth + 1):
        grown = []
        for s in scores:
            options: list[GameId] = []
            seen: set[GameId] = set()
            for base in pool:
                for p in increments:
                    opt = shift(base, s + p - score(base))
                    if opt not in seen:
                        seen.add(opt)
                        options.append(opt)
            for k in range(1, branching + 1):
                for lefts in combinations(options, k):
                    rights = [_mirror_option(x, s) for x in lefts]
                    built = make_game(lefts, s, rights)
                    grown.append(built)
                    yield built
        pool = pool + grown


_probes: Optional[tuple[GameId, ...]] = None


def _probe_set() -> tuple[GameId, ...]:
    global _probes
    if _probes is None:
        z = number(0)
        half = make_game([z], 0, [z])
        fixed = [z, number(1), number(-1),
                 make_game([number(1)], 0, [number(-1)]),
                 make_game([number(2)], 1, [number(0)]),
                 identity_game(),
                 make_game([number(1), half], 0, [half, number(-1)])]
        params = ImpartialParams(max_depth=3, max_branch=2,
                                 palette=(Fraction(-2), Fraction(-1), Fraction(1), Fraction(2)),
                                 leaf_probability=0.25, seed=1729)
        rng = random.Random(params.seed)
        for _ in range(12):
            fixed.append(random_impartial(params, rng))
        _probes = tuple(dict.fromkeys(fixed))
    return _probes


def inverse_search(g: GameId, op: Operator, depth: int = 2,
                   budget: int = 5000) -> Optional[GameId]:
    """Look for an impartial Y that cancels `g` under op.

    A candidate is accepted when composing g with Y and then with each of
    a fixed probe set never changes the probe's outcome.  The search is a
    bounded heuristic: None means no inverse within bounds and probes.
    """
    probes = _probe_set()
    tried = 0
    for y in _impartial_stream(g, depth, branching=2):
        tried += 1
        if tried > budget:
            break
        combined = sum_games(op, [g, y])
        if all(outcome_of_scores(eval_sum(op, [combined, p])) == outcome(p)
               for p in probes):
            return y
    return None
