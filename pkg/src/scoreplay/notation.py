"""Text form of games and octal rulesets.

Game grammar (whitespace never matters):

    game     := rational | '{' options '|' rational '|' options '}'
    options  := '.' | game (',' game)*
    rational := ['+'|'-'] digits ['/' digits]

A bare rational is the game with that score and no moves, and is also how
such games print: parse("{.|5|.}") formats back as "5".  The dot is the
only way to write an empty option set; "{1|2}" is not a game.  Scores are
exact ("1/3", never "0.333").

Files hold one game per line; '#' starts a comment.

Octal rulesets are written "0.337:1,2,0" - digits after the "0." (which
may be omitted), then optional ':' and one point value per digit.  When
points are omitted, removing i beans scores i points if digit i is 1, 2
or 3, and nothing otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .game import GameId, is_leaf, left_options, make_game, right_options, score
from .octal import OctalRuleset


class NotationError(ValueError):
    """Bad game or ruleset text; `position` is the offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise NotationError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, char: str):
        if self.peek() != char:
            self.error(f"expected {char!r}")
        self.pos += 1

    def rational(self) -> Fraction:
        start = self.pos
        if self.peek() in "+-":
            self.pos += 1
        digits = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == digits:
            self.error("expected a number")
        num = int(self.text[start:self.pos])
        if self.peek() == "/":
            self.pos += 1
            dstart = self.pos
            while self.peek().isdigit():
                self.pos += 1
            if self.pos == dstart:
                self.error("expected a denominator")
            den = int(self.text[dstart:self.pos])
            if den == 0:
                self.pos = dstart
                self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def game(self) -> GameId:
        self.skip_ws()
        c = self.peek()
        if c == "{":
            self.pos += 1
            lefts = self.options()
            self.skip_ws()
            self.take("|")
            self.skip_ws()
            s = self.rational()
            self.skip_ws()
            if self.peek() != "|":
                self.error("expected '|' after the score (games are {options|score|options})")
            self.pos += 1
            rights = self.options()
            self.skip_ws()
            self.take("}")
            return make_game(lefts, s, rights)
        if c.isdigit() or c in "+-":
            return make_game((), self.rational(), ())
        self.error("expected a game")

    def options(self) -> list[GameId]:
        self.skip_ws()
        if self.peek() == ".":
            self.pos += 1
            return []
        out = [self.game()]
        self.skip_ws()
        while self.peek() == ",":
            self.pos += 1
            out.append(self.game())
            self.skip_ws()
        return out


def parse_game(text: str) -> GameId:
    """Parse one game; raises NotationError with a position on bad input."""
    p = _Parser(text)
    g = p.game()
    p.skip_ws()
    if p.pos != len(text):
        p.error("trailing input after the game")
    return g


def format_score(value: Fraction) -> str:
    return str(value)


_format_memo: dict[GameId, str] = {}


def format_game(g: GameId) -> str:
    """Canonical text for a game; round-trips through parse_game."""
    got = _format_memo.get(g)
    if got is None:
        if is_leaf(g):
            got = format_score(score(g))
        else:
            lefts = ",".join(format_game(x) for x in left_options(g)) or "."
            rights = ",".join(format_game(x) for x in right_options(g)) or "."
            got = "{%s|%s|%s}" % (lefts, format_score(score(g)), rights)
        _format_memo[g] = got
    return got


def parse_game_lines(text: str | Iterable[str]) -> list[GameId]:
    """Games from file-style text: one per line, '#' comments, blanks skipped."""
    lines = text.splitlines() if isinstance(text, str) else text
    out = []
    for line in lines:
        body = line.split("#", 1)[0].strip()
        if body:
            out.append(parse_game(body))
    return out


def parse_octal(text: str) -> OctalRuleset:
    """Parse a ruleset like '0.33:1,2', '337' or '0.007:0,0,1/2'."""
    body = text.strip()
    head, sep, tail = body.partition(":")
    head = head.strip()
    if head.startswith("0."):
        head = head[2:]
    if not head:
        raise NotationError("expected ruleset digits", 0)
    digits = []
    for i, c in enumerate(head):
        if not c.isdigit() or c > "7":
            raise NotationError(f"octal digit expected, got {c!r}", i)
        digits.append(int(c))
    points = None
    if sep:
        points = []
        for chunk in tail.split(","):
            chunk = chunk.strip()
            try:
                points.append(Fraction(chunk))
            except (ValueError, ZeroDivisionError):
                raise NotationError(f"bad point value {chunk!r}",
                                    body.index(chunk) if chunk else len(body)) from None
    try:
        return OctalRuleset(tuple(digits), tuple(points) if points is not None else None)
    except ValueError as e:
        raise NotationError(str(e), 0) from None
