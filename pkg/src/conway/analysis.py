"""Stops, confusion intervals, number avoidance and infinitesimals."""

from __future__ import annotations

from typing import NamedTuple

from .canonical import canonical_form
from .dyadic import Dyadic, Rational
from .errors import DomainError
from .games import Arena, Comparison, GameRef
from .numbers import dyadic_to_game, game_to_number


class Stops(NamedTuple):
    left: Dyadic
    right: Dyadic


def stops(arena: Arena, g: GameRef) -> Stops:
    """Left and right stops of a short game.

    A number stops at its own value; otherwise the left stop is the best
    right stop among left options and the right stop the worst left stop
    among right options.
    """
    cache = arena.cache["stops"]
    result = cache.get(g)
    if result is not None:
        return result
    value = game_to_number(arena, g)
    if value is not None:
        result = Stops(value, value)
    else:
        left, right = arena.node(g)
        # a game missing one side of options is equal to a number
        assert left and right, "non-number without options on both sides"
        result = Stops(max(stops(arena, x).right for x in left),
                       min(stops(arena, x).left for x in right))
    cache[g] = result
    return result


def confusion_interval(arena: Arena, g: GameRef) -> tuple[Dyadic, Dyadic]:
    """``(right stop, left stop)``.  Which endpoints belong to it is not decided here."""
    s = stops(arena, g)
    return s.right, s.left


def is_all_small(arena: Arena, g: GameRef) -> bool:
    for p in arena.positions(g):
        left, right = arena.node(p)
        if bool(left) != bool(right):
            return False
    return True


def is_infinitesimal(arena: Arena, g: GameRef) -> bool:
    """Whether ``-2^-n < g < 2^-n`` for every ``n``.

    For short games this holds exactly when both stops are 0 (and, for a
    number, when it is 0 itself).
    """
    value = game_to_number(arena, g)
    if value is not None:
        return value == 0
    return stops(arena, g) == (0, 0)


# below_all_positive(g):   g <= 2^-n for every n
# not_above_all_small(g):  g is less than or fuzzy to 2^-n for every n
# Unfolding g <= 2^-n with 2^-n = {0 | 2^-(n-1)} gives the mutual recursion
# below, finite because g has finitely many options.

def _below_all_positive(arena: Arena, g: GameRef) -> bool:
    cache = arena.cache["below_positive"]
    if g not in cache:
        cache[g] = (_not_above_all_small(arena, g)
                    and all(_not_above_all_small(arena, x) for x in arena.left(g)))
    return cache[g]


def _not_above_all_small(arena: Arena, g: GameRef) -> bool:
    cache = arena.cache["not_above_small"]
    if g not in cache:
        cache[g] = (arena.leq(g, arena.zero)
                    or any(_below_all_positive(arena, x) for x in arena.right(g)))
    return cache[g]


def _up_bound_fuzzy(arena: Arena, g: GameRef) -> int:
    # g is less than or fuzzy to every positive number; find m with g <| m.up
    if game_to_number(arena, g) is not None:
        return 1
    rr = next(x for x in arena.right(g) if _below_all_positive(arena, x))
    return _up_bound_leq(arena, rr)


def _up_bound_leq(arena: Arena, g: GameRef) -> int:
    # g <= every positive number; find m with g <= m.up
    if game_to_number(arena, g) is not None:
        return 1
    m0 = _up_bound_fuzzy(arena, g)
    m1 = max(_up_bound_fuzzy(arena, x) for x in arena.left(g))
    return max(m1, m0 + 3)


def up_multiple(arena: Arena, m: int) -> GameRef:
    cache = arena.cache["up_multiple"]
    if m not in cache:
        cache[m] = canonical_form(arena, arena.multiple(m, arena.up))
    return cache[m]


def up_multiple_bound(arena: Arena, g: GameRef, minimize: bool = True) -> int:
    """A positive ``m`` with ``g <= m.up`` for an infinitesimal short game ``g``.

    The bound comes from the inductive proof that such an ``m`` exists
    (``m = max(m1, m0 + 3)`` at each level).  With ``minimize`` the bound is
    then lowered to the least ``m`` that still works.
    """
    if not is_infinitesimal(arena, g):
        raise DomainError("up_multiple_bound needs an infinitesimal game")
    m = _up_bound_leq(arena, g)
    if not arena.leq(g, up_multiple(arena, m)):
        raise AssertionError(f"proof bound m={m} failed verification")
    if minimize:
        while m > 1 and arena.leq(g, up_multiple(arena, m - 1)):
            m -= 1
    return m


def check_number_avoidance(arena: Arena, g: GameRef, x: Rational) -> bool:
    """Check weak and strong number avoidance for a non-number ``g`` and number ``x``.

    Weak: ``x <| g`` iff some ``g^L >= x``.
    Strong: ``g + x == {g^L + x | g^R + x}``.
    """
    if game_to_number(arena, g) is not None:
        raise DomainError("number avoidance needs a game that is not a number")
    xg = dyadic_to_game(arena, Dyadic.coerce(x))
    left, right = arena.node(g)
    fuzzy_or_less = not arena.leq(g, xg)
    weak = fuzzy_or_less == any(arena.leq(xg, a) for a in left)
    shifted = arena.make_game([arena.add(a, xg) for a in left],
                              [arena.add(b, xg) for b in right])
    strong = arena.compare(arena.add(g, xg), shifted) is Comparison.EQUAL
    return weak and strong
