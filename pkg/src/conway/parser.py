"""Text format for games.

Grammar::

    expr := term (('+' | '-') term)*
    term := '-' term | atom
    atom := INT | INT '/' INT | '*' INT? | 'up' | 'down' | NAME
          | '{' list '|' list '}' | '(' expr ')'
    list := (expr (',' expr)*)?

Denominators must be powers of two.  ``*3`` is the nimber 3 (no space
between the star and its index).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from .canonical import canonical_form
from .dyadic import Dyadic
from .errors import ParseError
from .games import Arena, GameRef
from .impartial import grundy, is_impartial, nimber_to_game
from .numbers import canonical_value, dyadic_to_game


@dataclass(frozen=True)
class Literal:
    value: Dyadic
    pos: int = 0


@dataclass(frozen=True)
class Star:
    n: int
    pos: int = 0


@dataclass(frozen=True)
class Word:
    """``up`` or ``down``."""
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Name:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Braces:
    left: tuple["Expression", ...]
    right: tuple["Expression", ...]
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "Expression"
    pos: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str
    lhs: "Expression"
    rhs: "Expression"
    pos: int = 0


Expression = Union[Literal, Star, Word, Name, Braces, Neg, BinOp]

KEYWORDS = {"up", "down"}

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<star>\*\d*)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<sym>[-+{}|,/()])
""", re.VERBOSE)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def next(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def accept(self, value: str):
        if self.tok[0] == "sym" and self.tok[1] == value:
            return self.next()
        return None

    def expect(self, value: str, what: str):
        t = self.accept(value)
        if t is None:
            kind, text, pos = self.tok
            found = repr(text) if kind != "end" else "end of input"
            raise ParseError(f"expected {what}, found {found}", pos)
        return t

    def expr(self) -> Expression:
        node = self.term()
        while True:
            t = self.accept("+") or self.accept("-")
            if t is None:
                return node
            node = BinOp(t[1], node, self.term(), t[2])

    def term(self) -> Expression:
        t = self.accept("-")
        if t is not None:
            return Neg(self.term(), t[2])
        return self.atom()

    def atom(self) -> Expression:
        kind, text, pos = self.tok
        if kind == "int":
            self.next()
            if not self.accept("/"):
                return Literal(Dyadic(int(text)), pos)
            kind2, den, dpos = self.next()
            if kind2 != "int":
                raise ParseError("expected denominator after '/'", dpos)
            d = int(den)
            if d <= 0 or d & (d - 1):
                raise ParseError(f"denominator {d} is not a power of two", dpos)
            return Literal(Dyadic(int(text), d.bit_length() - 1), pos)
        if kind == "star":
            self.next()
            return Star(int(text[1:]) if len(text) > 1 else 1, pos)
        if kind == "name":
            self.next()
            if text in KEYWORDS:
                return Word(text, pos)
            return Name(text, pos)
        if self.accept("{"):
            left = self.option_list()
            self.expect("|", "'|' inside braces")
            right = self.option_list()
            self.expect("}", "'}' closing braces")
            return Braces(tuple(left), tuple(right), pos)
        if self.accept("("):
            node = self.expr()
            self.expect(")", "')'")
            return node
        found = repr(text) if kind != "end" else "end of input"
        raise ParseError(f"expected a game, found {found}", pos)

    def option_list(self) -> list[Expression]:
        if self.tok[0] == "sym" and self.tok[1] in "|}":
            return []
        items = [self.expr()]
        while self.accept(","):
            items.append(self.expr())
        return items


def parse(text: str) -> Expression:
    """Parse a complete game expression."""
    p = _Parser(text)
    node = p.expr()
    kind, tok, pos = p.tok
    if kind != "end":
        raise ParseError(f"unexpected {tok!r} after expression", pos)
    return node


def evaluate(arena: Arena, expr: Expression,
             bindings: Mapping[str, GameRef] | None = None) -> GameRef:
    """Build the game an expression denotes (no simplification)."""
    bindings = bindings or {}

    def ev(e: Expression) -> GameRef:
        if isinstance(e, Literal):
            return dyadic_to_game(arena, e.value)
        if isinstance(e, Star):
            return nimber_to_game(arena, e.n)
        if isinstance(e, Word):
            return arena.up if e.name == "up" else arena.down
        if isinstance(e, Name):
            if e.name not in bindings:
                raise ParseError(f"unknown name {e.name!r}", e.pos)
            return bindings[e.name]
        if isinstance(e, Braces):
            return arena.make_game([ev(x) for x in e.left], [ev(x) for x in e.right])
        if isinstance(e, Neg):
            return arena.negate(ev(e.operand))
        if isinstance(e, BinOp):
            lhs, rhs = ev(e.lhs), ev(e.rhs)
            return arena.add(lhs, rhs) if e.op == "+" else arena.subtract(lhs, rhs)
        raise TypeError(f"not an expression: {e!r}")

    return ev(expr)


def parse_game(arena: Arena, text: str,
               bindings: Mapping[str, GameRef] | None = None) -> GameRef:
    return evaluate(arena, parse(text), bindings)


def _render(arena: Arena, c: GameRef, memo: dict[GameRef, str]) -> str:
    text = memo.get(c)
    if text is not None:
        return text
    value = canonical_value(arena, c)
    if value is not None:
        text = str(value)
    elif is_impartial(arena, c):
        n = grundy(arena, c)
        text = "*" if n == 1 else f"*{n}"
    elif c == arena.up:
        text = "up"
    elif c == arena.down:
        text = "down"
    else:
        text = _braces(arena, c, memo)
    memo[c] = text
    return text


def _braces(arena: Arena, c: GameRef, memo: dict[GameRef, str]) -> str:
    def side(opts):
        parts = [(arena.birthday(x), _render(arena, x, memo)) for x in opts]
        return ",".join(t for _, t in sorted(parts))

    left, right = arena.node(c)
    return "{" + side(left) + "|" + side(right) + "}"


def render(arena: Arena, g: GameRef) -> str:
    """Text for the value of ``g``: numbers, ``*n``, ``up``/``down``, else braces."""
    memo = arena.cache["render"]
    return _render(arena, canonical_form(arena, g), memo)


def render_canonical(arena: Arena, g: GameRef) -> str:
    """Brace form of the canonical form, one level deep; options rendered as values."""
    memo = arena.cache["render"]
    return _braces(arena, canonical_form(arena, g), memo)
