"""Seeded random short games for property checks.

Each new game draws its options from previously generated games, so birthdays
stay bounded (default 4) and option sets stay small (default at most 3).
"""

from __future__ import annotations

import random

from .dyadic import Dyadic
from .games import Arena, GameRef


class GameGenerator:
    def __init__(self, arena: Arena, seed: int | None = 0,
                 max_birthday: int = 4, max_branching: int = 3):
        self.arena = arena
        self.rng = random.Random(seed)
        self.max_birthday = max_birthday
        self.max_branching = max_branching
        zero = arena.zero
        self._pools: dict[str, list[GameRef]] = {
            "any": [zero, arena.one, arena.neg_one, arena.star],
            "small": [zero, arena.star],
            "impartial": [zero, arena.star],
        }

    def _pick(self, pool: list[GameRef], k: int) -> list[GameRef]:
        eligible = [g for g in pool if self.arena.birthday(g) < self.max_birthday]
        return [self.rng.choice(eligible) for _ in range(k)]

    def _grow(self, name: str, g: GameRef) -> GameRef:
        pool = self._pools[name]
        if g not in pool:
            pool.append(g)
        return g

    def _count(self, low: int = 0) -> int:
        return self.rng.randint(low, self.max_branching)

    def game(self) -> GameRef:
        """Any short game."""
        pool = self._pools["any"]
        g = self.arena.make_game(self._pick(pool, self._count()),
                                 self._pick(pool, self._count()))
        return self._grow("any", g)

    def all_small(self) -> GameRef:
        """A game in which left options exist exactly where right options do."""
        pool = self._pools["small"]
        k = self._count()
        if k == 0:
            g = self.arena.zero
        else:
            g = self.arena.make_game(self._pick(pool, k), self._pick(pool, self._count(1)))
        return self._grow("small", g)

    def impartial(self) -> GameRef:
        pool = self._pools["impartial"]
        opts = self._pick(pool, self._count())
        return self._grow("impartial", self.arena.make_game(opts, opts))

    def games(self, n: int) -> list[GameRef]:
        return [self.game() for _ in range(n)]

    def dyadic(self, max_abs_numerator: int = 64, max_exponent: int = 6) -> Dyadic:
        return Dyadic(self.rng.randint(-max_abs_numerator, max_abs_numerator),
                      self.rng.randint(0, max_exponent))

    def positive_dyadic(self, max_numerator: int = 64, max_exponent: int = 6) -> Dyadic:
        return Dyadic(self.rng.randint(1, max_numerator), self.rng.randint(0, max_exponent))
