"""Hash-consed arena of short games.

A game is an ``int`` handle into an :class:`Arena`.  Nodes store their left
and right options as sorted tuples of handles, so two handles are equal
exactly when the games are identical.  Options are always interned before
the game that uses them, which keeps the graph acyclic.
"""

from __future__ import annotations

import enum
import sys
import threading
from collections import defaultdict
from typing import Iterable

from .errors import HandleError

GameRef = int
Node = tuple[tuple[GameRef, ...], tuple[GameRef, ...]]

# sums of a few dozen positions already nest a couple of hundred frames deep
if sys.getrecursionlimit() < 10_000:
    sys.setrecursionlimit(10_000)


class Comparison(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    FUZZY = "fuzzy"

    def __str__(self) -> str:
        return self.value


class OutcomeClass(enum.Enum):
    ZERO = "zero"
    POSITIVE = "positive"
    NEGATIVE = "negative"
    FUZZY = "fuzzy"

    @property
    def winner(self) -> str:
        return _WINNERS[self]

    def __str__(self) -> str:
        return f"{self.value} ({self.winner} wins)"


_WINNERS = {
    OutcomeClass.ZERO: "second player",
    OutcomeClass.POSITIVE: "Left",
    OutcomeClass.NEGATIVE: "Right",
    OutcomeClass.FUZZY: "first player",
}

_OUTCOME_OF = {
    Comparison.EQUAL: OutcomeClass.ZERO,
    Comparison.GREATER: OutcomeClass.POSITIVE,
    Comparison.LESS: OutcomeClass.NEGATIVE,
    Comparison.FUZZY: OutcomeClass.FUZZY,
}


class Arena:
    """Interning table plus memo caches for the core game operations.

    Interning is serialized by a lock; queries only read nodes that already
    exist, so they may run from several threads.  Other modules keep their
    memo tables in :attr:`cache`, keyed by a module-chosen name.
    """

    def __init__(self):
        self._nodes: list[Node] = []
        self._index: dict[Node, GameRef] = {}
        self._lock = threading.Lock()
        self._leq: dict[tuple[GameRef, GameRef], bool] = {}
        self._add: dict[tuple[GameRef, GameRef], GameRef] = {}
        self._neg: dict[GameRef, GameRef] = {}
        self._birthday: dict[GameRef, int] = {}
        self.cache: defaultdict[str, dict] = defaultdict(dict)

        self.zero = self.make_game((), ())
        self.one = self.make_game((self.zero,), ())
        self.neg_one = self.make_game((), (self.zero,))
        self.star = self.make_game((self.zero,), (self.zero,))
        self.up = self.make_game((self.zero,), (self.star,))
        self.down = self.make_game((self.star,), (self.zero,))

    def __len__(self) -> int:
        return len(self._nodes)

    def __contains__(self, g: object) -> bool:
        return isinstance(g, int) and 0 <= g < len(self._nodes)

    def _check(self, g: GameRef) -> None:
        if g not in self:
            raise HandleError(f"invalid game handle {g!r}")

    # construction

    def make_game(self, left: Iterable[GameRef] = (),
                  right: Iterable[GameRef] = ()) -> GameRef:
        """Intern the game with the given option sets (duplicates dropped)."""
        left = tuple(sorted(set(left)))
        right = tuple(sorted(set(right)))
        for g in left + right:
            self._check(g)
        node = (left, right)
        handle = self._index.get(node)
        if handle is not None:
            return handle
        with self._lock:
            handle = self._index.get(node)
            if handle is None:
                handle = len(self._nodes)
                self._nodes.append(node)
                self._index[node] = handle
        return handle

    def node(self, g: GameRef) -> Node:
        self._check(g)
        return self._nodes[g]

    def left(self, g: GameRef) -> tuple[GameRef, ...]:
        return self.node(g)[0]

    def right(self, g: GameRef) -> tuple[GameRef, ...]:
        return self.node(g)[1]

    def options(self, g: GameRef) -> tuple[GameRef, ...]:
        left, right = self.node(g)
        return left + right

    # arithmetic

    def negate(self, g: GameRef) -> GameRef:
        result = self._neg.get(g)
        if result is None:
            left, right = self.node(g)
            result = self.make_game([self.negate(r) for r in right],
                                    [self.negate(x) for x in left])
            self._neg[g] = result
        return result

    def add(self, g: GameRef, h: GameRef) -> GameRef:
        """Disjunctive sum.  Cached on the unordered pair (sums commute up to identity)."""
        key = (g, h) if g <= h else (h, g)
        result = self._add.get(key)
        if result is None:
            gl, gr = self.node(g)
            hl, hr = self.node(h)
            left = [self.add(x, h) for x in gl] + [self.add(g, x) for x in hl]
            right = [self.add(x, h) for x in gr] + [self.add(g, x) for x in hr]
            result = self.make_game(left, right)
            self._add[key] = result
        return result

    def subtract(self, g: GameRef, h: GameRef) -> GameRef:
        return self.add(g, self.negate(h))

    def sum(self, games: Iterable[GameRef]) -> GameRef:
        total = self.zero
        for g in games:
            total = self.add(total, g)
        return total

    def multiple(self, k: int, g: GameRef) -> GameRef:
        """``k`` copies of ``g`` added together (negative ``k`` uses ``-g``)."""
        if k < 0:
            k, g = -k, self.negate(g)
        return self.sum([g] * k)

    # order

    def leq(self, g: GameRef, h: GameRef) -> bool:
        """``g <= h``: no ``g^L >= h`` and no ``h^R <= g``."""
        key = (g, h)
        result = self._leq.get(key)
        if result is None:
            gl, _ = self.node(g)
            _, hr = self.node(h)
            result = (not any(self.leq(h, x) for x in gl)
                      and not any(self.leq(x, g) for x in hr))
            self._leq[key] = result
        return result

    def compare(self, g: GameRef, h: GameRef) -> Comparison:
        below = self.leq(g, h)
        above = self.leq(h, g)
        if below and above:
            return Comparison.EQUAL
        if below:
            return Comparison.LESS
        if above:
            return Comparison.GREATER
        return Comparison.FUZZY

    def equal(self, g: GameRef, h: GameRef) -> bool:
        return self.leq(g, h) and self.leq(h, g)

    def outcome(self, g: GameRef) -> OutcomeClass:
        return _OUTCOME_OF[self.compare(g, self.zero)]

    # structure

    def birthday(self, g: GameRef) -> int:
        result = self._birthday.get(g)
        if result is None:
            opts = self.options(g)
            result = 1 + max(map(self.birthday, opts)) if opts else 0
            self._birthday[g] = result
        return result

    def positions(self, g: GameRef) -> set[GameRef]:
        """``g`` and every game reachable from it by moves of either player."""
        seen = {g}
        stack = [g]
        while stack:
            for x in self.options(stack.pop()):
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        return seen
