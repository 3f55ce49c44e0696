"""Impartial games: nimbers, mex, Grundy values and the Nim strategy."""

from __future__ import annotations

from functools import reduce
from operator import xor
from typing import Iterable

from .errors import DomainError
from .games import Arena, GameRef


def is_impartial(arena: Arena, g: GameRef) -> bool:
    """True iff every position offers both players identical options."""
    cache = arena.cache["impartial"]
    if g not in cache:
        left, right = arena.node(g)
        cache[g] = left == right and all(is_impartial(arena, x) for x in left)
    return cache[g]


def mex(values: Iterable[int]) -> int:
    """Least natural number not in ``values``."""
    seen = set(values)
    n = 0
    while n in seen:
        n += 1
    return n


def nimber_to_game(arena: Arena, n: int) -> GameRef:
    """``*n = {*0, ..., *(n-1) | *0, ..., *(n-1)}``."""
    if n < 0:
        raise DomainError("nimbers are indexed by natural numbers")
    heaps = arena.cache["nimber"]
    heaps.setdefault(0, arena.zero)
    while n not in heaps:
        k = len(heaps)
        smaller = [heaps[j] for j in range(k)]
        heaps[k] = arena.make_game(smaller, smaller)
    return heaps[n]


def grundy(arena: Arena, g: GameRef) -> int:
    """The ``n`` with ``g == *n``: mex of the options' Grundy values."""
    if not is_impartial(arena, g):
        raise DomainError("Grundy values are only defined for impartial games")
    return _grundy(arena, g)


def _grundy(arena: Arena, g: GameRef) -> int:
    cache = arena.cache["grundy"]
    if g not in cache:
        cache[g] = mex(_grundy(arena, x) for x in arena.left(g))
    return cache[g]


def nim_game(arena: Arena, heaps: Iterable[int]) -> GameRef:
    return arena.sum(nimber_to_game(arena, h) for h in heaps)


def nim_sum(heaps: Iterable[int]) -> int:
    return reduce(xor, heaps, 0)


def nim_winning_move(heaps: list[int]) -> tuple[int, int] | None:
    """``(index, new_size)`` leaving nim-sum 0, or ``None`` if the position is lost.

    Ties go to the lowest heap index.
    """
    total = nim_sum(heaps)
    if total == 0:
        return None
    for i, h in enumerate(heaps):
        if h ^ total < h:
            return i, h ^ total
    raise AssertionError("nonzero nim-sum without a reducible heap")
