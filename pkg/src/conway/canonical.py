"""Canonical forms: delete dominated options, bypass reversible ones."""

from __future__ import annotations

from typing import Iterable

from .errors import DomainError
from .games import Arena, Comparison, GameRef


def _undominated(arena: Arena, options: tuple[GameRef, ...], left: bool) -> list[GameRef]:
    # keep x unless some other option beats it; among equal options the smallest handle survives
    better = arena.leq if left else (lambda a, b: arena.leq(b, a))
    kept = []
    for x in options:
        dominated = False
        for y in options:
            if y == x or not better(x, y):
                continue
            if not better(y, x) or y < x:
                dominated = True
                break
        if not dominated:
            kept.append(x)
    return kept


def remove_dominated(arena: Arena, g: GameRef) -> GameRef:
    """Drop every left option <= another left option (mirrored on the right)."""
    left, right = arena.node(g)
    return arena.make_game(_undominated(arena, left, True),
                           _undominated(arena, right, False))


def _bypass_once(arena: Arena, g: GameRef) -> GameRef:
    left, right = arena.node(g)
    new_left: list[GameRef] = []
    for h in left:
        k = next((k for k in arena.right(h) if arena.leq(k, g)), None)
        new_left.extend(arena.left(k) if k is not None else (h,))
    new_right: list[GameRef] = []
    for h in right:
        k = next((k for k in arena.left(h) if arena.leq(g, k)), None)
        new_right.extend(arena.right(k) if k is not None else (h,))
    return arena.make_game(new_left, new_right)


def bypass_reversible(arena: Arena, g: GameRef) -> GameRef:
    """Replace reversible options by the reversing option's options until none remain.

    A left option ``H`` reverses through ``K = H^R`` when ``K <= g``; it is then
    replaced by all left options of ``K``.  Right options are mirrored.
    """
    while True:
        h = _bypass_once(arena, g)
        if h == g:
            return g
        g = h


def canonical_form(arena: Arena, g: GameRef) -> GameRef:
    """The unique simplest game equal to ``g``."""
    cache = arena.cache["canonical"]
    result = cache.get(g)
    if result is not None:
        return result
    left, right = arena.node(g)
    h = arena.make_game([canonical_form(arena, x) for x in left],
                        [canonical_form(arena, x) for x in right])
    while True:
        step = remove_dominated(arena, bypass_reversible(arena, h))
        if step == h:
            break
        h = step
    cache[g] = h
    return h


def is_canonical(arena: Arena, g: GameRef) -> bool:
    """True iff no position of ``g`` has a dominated or reversible option."""
    for p in arena.positions(g):
        if remove_dominated(arena, p) != p or _bypass_once(arena, p) != p:
            return False
    return True


def add_gift_horses(arena: Arena, g: GameRef, left_horses: Iterable[GameRef] = (),
                    right_horses: Iterable[GameRef] = ()) -> GameRef:
    """Offer extra options that neither player wants; the value does not change.

    Left horses must be less than or fuzzy to ``g``, right horses greater than
    or fuzzy to it.
    """
    left_horses = list(left_horses)
    right_horses = list(right_horses)
    for h in left_horses:
        if arena.compare(h, g) not in (Comparison.LESS, Comparison.FUZZY):
            raise DomainError("not a gift horse: left horse is not below or fuzzy to the game")
    for h in right_horses:
        if arena.compare(h, g) not in (Comparison.GREATER, Comparison.FUZZY):
            raise DomainError("not a gift horse: right horse is not above or fuzzy to the game")
    left, right = arena.node(g)
    return arena.make_game(left + tuple(left_horses), right + tuple(right_horses))
