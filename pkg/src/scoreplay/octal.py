"""Heap games described by octal rulesets, and their scored values.

An octal ruleset is a digit string d1 d2 ... dk with a rational point
award p_i for removing exactly i beans.  Digit bits say what may remain
of the heap after removing i beans: bit 0 permits taking a whole heap
(nothing remains), bit 1 permits leaving one nonempty heap, bit 2 permits
splitting the rest into two nonempty heaps.  Zero-size heaps are never
stored; a heap no rule applies to is dead weight and is dropped from
positions, since nobody can ever touch it.

`grundy_value(op, position)` is the mover-relative value of a position
under one of the four sum operators: the best, over the legal combined
moves of whoever is to move, of (points collected) - (value left to the
opponent).  The empty position, and any position with no legal combined
move, is worth 0.  Under the sequential operator positions are ordered
and only the first live heap may be played; splitting rulesets are
rejected there because a split has no sequential reading.

Values are computed in integer arithmetic scaled by the common
denominator of the point awards, which keeps the inner recursion cheap;
results are exact Fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement, product
from typing import Iterable, Optional, Sequence

from .game import GameId, as_score, number, make_game, shift
from .operators import Operator, sum_games


def default_points(digits: Sequence[int]) -> tuple[Fraction, ...]:
    """Point scheme used when a ruleset omits its points.

    Removing i beans scores i points wherever the digit value is 1, 2 or
    3; every other digit scores nothing.
    """
    return tuple(Fraction(i) if d in (1, 2, 3) else Fraction(0)
                 for i, d in enumerate(digits, start=1))


@dataclass(frozen=True)
class OctalRuleset:
    digits: tuple[int, ...]
    points: Optional[tuple[Fraction, ...]] = None

    def __post_init__(self):
        digits = tuple(int(d) for d in self.digits)
        if not digits:
            raise ValueError("a ruleset needs at least one digit")
        if any(d < 0 or d > 7 for d in digits):
            raise ValueError(f"octal digits must be 0..7: {digits}")
        if not any(digits):
            raise ValueError("a ruleset needs at least one nonzero digit")
        points = self.points
        if points is None:
            points = default_points(digits)
        else:
            points = tuple(as_score(p) for p in points)
            if len(points) != len(digits):
                raise ValueError(
                    f"{len(digits)} digits but {len(points)} point values")
        object.__setattr__(self, "digits", digits)
        object.__setattr__(self, "points", points)

    @property
    def can_split(self) -> bool:
        return any(d & 4 for d in self.digits)

    def notation(self) -> str:
        text = "0." + "".join(str(d) for d in self.digits)
        return text + ":" + ",".join(str(p) for p in self.points)

    def __str__(self) -> str:
        return self.notation()


Heap = tuple[OctalRuleset, int]
Position = Iterable[Heap]

# ruleset interning so positions hash as small int pairs
_rids: dict[OctalRuleset, int] = {}
_rulesets: list[OctalRuleset] = []


def _rid(rules: OctalRuleset) -> int:
    got = _rids.get(rules)
    if got is None:
        got = len(_rulesets)
        _rulesets.append(rules)
        _rids[rules] = got
    return got


_moves_cache: dict[tuple[int, int], tuple] = {}


def _raw_moves(rid: int, n: int) -> tuple[tuple[Fraction, tuple[int, ...]], ...]:
    # int-keyed: hashing rulesets here would dominate the heap recursions
    key = (rid, n)
    got = _moves_cache.get(key)
    if got is None:
        rules = _rulesets[rid]
        out = []
        for k in range(1, min(n, len(rules.digits)) + 1):
            d = rules.digits[k - 1]
            if not d:
                continue
            p = rules.points[k - 1]
            rest = n - k
            if d & 1 and rest == 0:
                out.append((p, ()))
            if d & 2 and rest >= 1:
                out.append((p, (rest,)))
            if d & 4 and rest >= 2:
                for a in range(1, rest // 2 + 1):
                    out.append((p, (a, rest - a)))
        got = tuple(out)
        _moves_cache[key] = got
    return got


def heap_moves(rules: OctalRuleset, n: int) -> tuple[tuple[Fraction, tuple[int, ...]], ...]:
    """Legal single-heap moves on a heap of n: (points, remaining heap sizes).

    Remainders are unordered (sorted ascending); empty tuple means the
    heap is gone.  Deterministic order: beans removed ascending, then the
    permitted shapes in bit order.
    """
    if n < 0:
        raise ValueError(f"heap size must be nonnegative: {n}")
    return _raw_moves(_rid(rules), n)


_scaled_moves_cache: dict[tuple[int, int, int], tuple] = {}


_alive_memo: dict[tuple[int, int], bool] = {}


def _alive(heap: tuple[int, int]) -> bool:
    got = _alive_memo.get(heap)
    if got is None:
        got = bool(_raw_moves(*heap))
        _alive_memo[heap] = got
    return got


_scaled_moves_cache: dict[tuple[int, int, int], tuple] = {}


def _scaled_moves(rid: int, n: int, scale: int):
    """heap_moves with points as ints (times `scale`) and (rid, size) parts.

    Dead remainders are dropped here once, so every state assembled from
    these parts is live by construction and needs no further filtering.
    """
    key = (rid, n, scale)
    got = _scaled_moves_cache.get(key)
    if got is None:
        got = tuple(
            (int(p * scale),
             tuple((rid, m) for m in rem if _alive((rid, m))))
            for p, rem in _raw_moves(rid, n))
        _scaled_moves_cache[key] = got
    return got


def _canonical(op: Operator, heaps: Sequence[tuple[int, int]]) -> tuple:
    live = [h for h in heaps if _alive(h)]
    if op is not Operator.SEQUENTIAL:
        live.sort()
    return tuple(live)


_group_cache: dict[tuple, tuple] = {}


def _group_moves(heap: tuple[int, int], count: int, scale: int, everyone: bool):
    """Move assignments for `count` copies of one heap, deduped by result.

    Returns (points, moved_any, parts) triples; `everyone` forces all
    copies to move (conjunctive), otherwise any number may sit still
    (selective).
    """
    key = (heap, count, scale, everyone)
    got = _group_cache.get(key)
    if got is None:
        rid, n = heap
        moves = _scaled_moves(rid, n, scale)
        best: dict[tuple, int] = {}
        low = count if everyone else 0
        for j in range(low, count + 1):
            stay = (heap,) * (count - j)
            for picked in combinations_with_replacement(moves, j):
                pts = 0
                parts = list(stay)
                for q, rem in picked:
                    pts += q
                    parts.extend(rem)
                k2 = (j > 0, tuple(sorted(parts)))
                prev = best.get(k2)
                if prev is None or pts > prev:
                    best[k2] = pts
        got = tuple((pts, moved, parts) for (moved, parts), pts in best.items())
        _group_cache[key] = got
    return got


_gs_memo: dict[tuple, int] = {}


def _successors(op: Operator, state: tuple, scale: int) -> dict[tuple, int]:
    """Combined moves as {successor state: best points}, all heaps live."""
    succs: dict[tuple, int] = {}
    if op is Operator.SEQUENTIAL:
        head = state[0]
        rid, n = head
        for pts, rem in _scaled_moves(rid, n, scale):
            succ = rem + state[1:]
            prev = succs.get(succ)
            if prev is None or pts > prev:
                succs[succ] = pts
        return succs

    if op is Operator.DISJUNCTIVE:
        seen = set()
        for i, heap in enumerate(state):
            if heap in seen:
                continue
            seen.add(heap)
            rest = state[:i] + state[i + 1:]
            rid, n = heap
            for pts, rem in _scaled_moves(rid, n, scale):
                succ = tuple(sorted(rest + rem))
                prev = succs.get(succ)
                if prev is None or pts > prev:
                    succs[succ] = pts
        return succs

    groups = sorted({h: state.count(h) for h in set(state)}.items())
    everyone = op is Operator.CONJUNCTIVE
    per_group = [_group_moves(h, c, scale, everyone) for h, c in groups]
    for combo in product(*per_group):
        if not everyone and not any(moved for _, moved, _ in combo):
            continue
        pts = 0
        parts: tuple = ()
        for q, _, chunk in combo:
            pts += q
            parts += chunk
        succ = tuple(sorted(parts))
        prev = succs.get(succ)
        if prev is None or pts > prev:
            succs[succ] = pts
    return succs


def _gs(op: Operator, state: tuple, scale: int) -> int:
    if not state:
        return 0
    key = (op, scale, state)
    val = _gs_memo.get(key)
    if val is None:
        succs = _successors(op, state, scale)
        val = max(pts - _gs(op, succ, scale) for succ, pts in succs.items())
        _gs_memo[key] = val
    return val


def _prepare(op: Operator, position: Position) -> tuple[tuple, int]:
    heaps = []
    rulesets = set()
    for rules, n in position:
        if not isinstance(rules, OctalRuleset):
            raise TypeError(f"expected an OctalRuleset, got {type(rules).__name__}")
        n = int(n)
        if n < 1:
            raise ValueError(f"heap sizes are positive: {n}")
        rulesets.add(rules)
        heaps.append((_rid(rules), n))
    if op is Operator.SEQUENTIAL:
        for rules in rulesets:
            if rules.can_split:
                raise ValueError(
                    f"splitting ruleset {rules.notation()} has no sequential reading")
    scale = reduce(math.lcm, (p.denominator for r in rulesets for p in r.points), 1)
    return _canonical(op, heaps), scale


def grundy_value(op: Operator, position: Position) -> Fraction:
    """Mover-relative value of a heap position under `op`."""
    state, scale = _prepare(op, position)
    return Fraction(_gs(op, state, scale), scale)


def heap_value(rules: OctalRuleset, n: int, op: Operator = Operator.DISJUNCTIVE) -> Fraction:
    """Value of the single heap {n}; n = 0 is the empty position."""
    if n == 0:
        return Fraction(0)
    return grundy_value(op, [(rules, n)])


_tree_memo: dict[tuple[Operator, int, int], GameId] = {}


def heap_game(rules: OctalRuleset, n: int, op: Operator = Operator.DISJUNCTIVE,
              cap: int = 12) -> GameId:
    """The heap of n as an explicit game tree.

    Both players have the same moves; a move that removes i beans swings
    the running score p_i toward the mover.  When a move splits the heap,
    the two parts continue as a sum under `op`, so the tree composed with
    other heaps by `op` plays exactly like the flat heap position.  The
    tree on its own satisfies SL(heap_game(rules, n)) = heap_value(rules, n)
    for the disjunctive operator.

    Tree size grows fast with n; `cap` is a guard, not a suggestion.
    """
    if n > cap:
        raise ValueError(f"heap {n} exceeds cap {cap}; raise cap knowingly")
    if n < 0:
        raise ValueError(f"heap size must be nonnegative: {n}")
    if op is Operator.SEQUENTIAL and rules.can_split:
        raise ValueError(
            f"splitting ruleset {rules.notation()} has no sequential reading")
    return _heap_tree(op, _rid(rules), n)


def _heap_tree(op: Operator, rid: int, n: int) -> GameId:
    key = (op, rid, n)
    got = _tree_memo.get(key)
    if got is None:
        rules = _rulesets[rid]
        lefts = []
        rights = []
        for p, rem in heap_moves(rules, n):
            sub = _rem_tree(op, rid, rem)
            lefts.append(shift(sub, p))
            rights.append(shift(sub, -p))
        got = make_game(lefts, 0, rights)
        _tree_memo[key] = got
    return got


def _rem_tree(op: Operator, rid: int, rem: tuple[int, ...]) -> GameId:
    if not rem:
        return number(0)
    if len(rem) == 1:
        return _heap_tree(op, rid, rem[0])
    return sum_games(op, [_heap_tree(op, rid, m) for m in rem])


def value_table(op: Operator, rules: OctalRuleset, n_max: int,
                tail: Position = ()) -> list[Fraction]:
    """Values of {n} + tail for n = 0..n_max (n = 0 means the tail alone).

    Under the sequential operator the varying heap is played first, then
    the tail in its given order.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    tail = tuple(tail)
    out = []
    for n in range(n_max + 1):
        heaps = ((rules, n),) + tail if n else tail
        out.append(grundy_value(op, heaps) if heaps else Fraction(0))
    return out


@dataclass(frozen=True)
class PeriodReport:
    preperiod: int       # first index from which the repetition holds
    period: int          # repetition length, >= 1
    confirmations: int   # indices actually checked

    def to_dict(self) -> dict:
        return {"preperiod": self.preperiod, "period": self.period,
                "confirmations": self.confirmations}


def find_period(values: Sequence, min_confirm: int = 10) -> Optional[PeriodReport]:
    """Smallest eventual repetition in `values`, if the data supports one.

    Returns the (period, preperiod) pair minimal in that order such that
    values[i + period] == values[i] for every i from the preperiod up to
    the end of the table, with at least `min_confirm` indices checked.
    None when no repetition is confirmed, e.g. on strictly growing data.
    """
    if min_confirm < 1:
        raise ValueError("min_confirm must be at least 1")
    vals = list(values)
    total = len(vals)
    for p in range(1, total):
        last_bad = -1
        for i in range(total - p):
            if vals[i + p] != vals[i]:
                last_bad = i
        start = last_bad + 1
        confirmations = total - p - start
        if confirmations >= min_confirm:
            return PeriodReport(start, p, confirmations)
    return None


@dataclass(frozen=True)
class OperatorPeriods:
    operator: Operator
    table: Optional[list]               # None when skipped
    period: Optional[PeriodReport]
    skipped: Optional[str] = None       # reason, when the operator was not run


@dataclass(frozen=True)
class PeriodComparison:
    ruleset: OctalRuleset
    tail: tuple
    n_max: int
    min_confirm: int
    reference_period: Optional[int]
    results: tuple[OperatorPeriods, ...]
    all_periods_equal: bool = field(default=False)

    def to_dict(self) -> dict:
        per_op = {}
        for r in self.results:
            entry: dict = {}
            if r.skipped is not None:
                entry["skipped"] = r.skipped
            else:
                entry["table"] = [_frac_json(v) for v in r.table]
                entry["period"] = r.period.to_dict() if r.period else None
            per_op[r.operator.value] = entry
        return {
            "ruleset": self.ruleset.notation(),
            "tail": [[rules.notation(), n] for rules, n in self.tail],
            "n_max": self.n_max,
            "min_confirm": self.min_confirm,
            "reference_period": self.reference_period,
            "operators": per_op,
            "all_periods_equal": self.all_periods_equal,
        }


def _frac_json(v: Fraction):
    return int(v) if v.denominator == 1 else str(v)


def reference_period(rules: OctalRuleset) -> Optional[int]:
    """Twice the position of the last digit that is not 0 or 1.

    The guessed repetition length for tables of this ruleset; undefined
    (None) when every digit is 0 or 1.
    """
    k = None
    for i, d in enumerate(rules.digits, start=1):
        if d not in (0, 1):
            k = i
    return 2 * k if k else None


def compare_periods(rules: OctalRuleset, tail: Position = (), n_max: int = 200,
                    min_confirm: int = 10) -> PeriodComparison:
    """Value tables and detected periods for one ruleset under all operators.

    The sequential operator is skipped (with a reason, not an error) when
    the ruleset can split, since no sequential reading exists there.
    """
    tail = tuple(tail)
    results = []
    found: list[Optional[PeriodReport]] = []
    for op in Operator:
        splitty = rules.can_split or any(r.can_split for r, _ in tail)
        if op is Operator.SEQUENTIAL and splitty:
            results.append(OperatorPeriods(op, None, None,
                                           "splitting ruleset has no sequential reading"))
            continue
        table = value_table(op, rules, n_max, tail)
        report = find_period(table, min_confirm)
        results.append(OperatorPeriods(op, table, report))
        found.append(report)
    equal = bool(found) and all(r is not None for r in found) and \
        len({r.period for r in found}) == 1
    return PeriodComparison(rules, tail, n_max, min_confirm,
                            reference_period(rules), tuple(results), equal)
