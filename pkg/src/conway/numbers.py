"""Surreal numbers among short games: dyadic values, products and inverses."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .canonical import canonical_form
from .dyadic import Dyadic, Rational, simplest_between
from .errors import DomainError
from .games import Arena, GameRef

simplest_dyadic_between = simplest_between


def _integer_game(arena: Arena, k: int) -> GameRef:
    cache = arena.cache["integer"]
    if k in cache:
        return cache[k]
    step = 1 if k > 0 else -1
    start = k
    while start != 0 and start not in cache:
        start -= step
    cache.setdefault(0, arena.zero)
    g = cache[start]
    for j in range(start + step, k + step, step):
        g = arena.make_game((g,), ()) if step > 0 else arena.make_game((), (g,))
        cache[j] = g
    return g


def dyadic_to_game(arena: Arena, d: Rational) -> GameRef:
    """Canonical game of a dyadic: ``k = {k-1|}`` and ``(2m+1)/2^(n+1) = {m/2^n | (m+1)/2^n}``."""
    d = Dyadic.coerce(d)
    if d.is_integer():
        return _integer_game(arena, d.numerator)
    cache = arena.cache["dyadic"]
    g = cache.get(d)
    if g is None:
        m = (d.numerator - 1) // 2
        n = d.exponent - 1
        g = arena.make_game((dyadic_to_game(arena, Dyadic(m, n)),),
                            (dyadic_to_game(arena, Dyadic(m + 1, n)),))
        cache[d] = g
    return g


def canonical_value(arena: Arena, c: GameRef) -> Dyadic | None:
    cache = arena.cache["number"]
    if c in cache:
        return cache[c]
    left, right = arena.node(c)
    value = None
    if len(left) <= 1 and len(right) <= 1:
        lo = canonical_value(arena, left[0]) if left else None
        hi = canonical_value(arena, right[0]) if right else None
        if ((lo is not None or not left) and (hi is not None or not right)
                and (lo is None or hi is None or lo < hi)):
            value = simplest_between(lo, hi)
    cache[c] = value
    return value


def game_to_number(arena: Arena, g: GameRef) -> Dyadic | None:
    """The dyadic value of ``g`` if ``g`` equals a number, else ``None``.

    Works on the canonical form, where a number has at most one option per
    side and those options are themselves numbers in increasing order.
    """
    return canonical_value(arena, canonical_form(arena, g))


def is_number(arena: Arena, g: GameRef) -> bool:
    return game_to_number(arena, g) is not None


def multiply_numbers(x: Rational, y: Rational) -> Dyadic:
    return Dyadic.coerce(x) * Dyadic.coerce(y)


def conway_product(arena: Arena, g: GameRef, h: GameRef) -> GameRef:
    """Conway's product, applied to the given forms.

    Left options are ``gL*h + g*hL - gL*hL`` and ``gR*h + g*hR - gR*hR``;
    right options are ``gL*h + g*hR - gL*hR`` and ``gR*h + g*hL - gR*hL``.
    Each option is replaced by its canonical form, which keeps the value.
    The result respects equality only when both factors are numbers.
    """
    key = (g, h) if g <= h else (h, g)
    cache = arena.cache["product"]
    result = cache.get(key)
    if result is not None:
        return result
    gl, gr = arena.node(g)
    hl, hr = arena.node(h)

    def term(a: GameRef, b: GameRef) -> GameRef:
        s = arena.add(conway_product(arena, a, h), conway_product(arena, g, b))
        return canonical_form(arena, arena.subtract(s, conway_product(arena, a, b)))

    left = ([term(a, b) for a in gl for b in hl]
            + [term(a, b) for a in gr for b in hr])
    right = ([term(a, b) for a in gl for b in hr]
             + [term(a, b) for a in gr for b in hl])
    result = arena.make_game(left, right)
    cache[key] = result
    return result


def multiply(arena: Arena, g: GameRef, h: GameRef) -> GameRef:
    """Canonical product of two games that are equal to numbers."""
    if not (is_number(arena, g) and is_number(arena, h)):
        raise DomainError("multiplication is only defined on numbers")
    p = conway_product(arena, canonical_form(arena, g), canonical_form(arena, h))
    return canonical_form(arena, p)


@dataclass(frozen=True)
class InverseApproximation:
    """Option sets generated so far for ``1/x``.

    ``steps`` counts applications of the recurrence; ``depth`` counts rounds,
    each round being two applications (a left value feeds a right one and back).
    """

    value: Fraction
    left: frozenset[Fraction]
    right: frozenset[Fraction]
    steps: int
    depth: int = 0

    def lower(self) -> Fraction:
        return max(self.left)

    def upper(self) -> Fraction | None:
        return min(self.right) if self.right else None


def _positive_options(arena: Arena, x: GameRef) -> tuple[Fraction, list[Fraction], list[Fraction]]:
    value = game_to_number(arena, x)
    if value is None or value <= 0:
        raise DomainError("inverse needs a game equal to a positive number")
    c = canonical_form(arena, x)
    left = [game_to_number(arena, a).to_fraction() for a in arena.left(c)]
    right = [game_to_number(arena, b).to_fraction() for b in arena.right(c)]
    # offer 0 as a left gift horse; it dominates any negative left option
    left = sorted({a for a in left + [Fraction(0)] if a >= 0})
    return value.to_fraction(), [a for a in left if a != 0], right


def inverse_steps(arena: Arena, x: GameRef) -> Iterator[InverseApproximation]:
    """Yield the option sets of ``1/x`` after 0, 1, 2, ... recurrence steps."""
    v, xl, xr = _positive_options(arena, x)
    left = frozenset({Fraction(0)})
    right: frozenset[Fraction] = frozenset()
    n = 0
    while True:
        yield InverseApproximation(v, left, right, n, n // 2)
        new_left = set(left)
        new_left.update((1 + (b - v) * y) / b for b in xr for y in left)
        new_left.update((1 + (a - v) * y) / a for a in xl for y in right)
        new_right = set(right)
        new_right.update((1 + (a - v) * y) / a for a in xl for y in left)
        new_right.update((1 + (b - v) * y) / b for b in xr for y in right)
        left, right = frozenset(new_left), frozenset(new_right)
        n += 1


def inverse_options(arena: Arena, x: GameRef, depth: int) -> InverseApproximation:
    """Option sets of ``1/x`` after ``depth`` rounds of the inverse recurrence."""
    if depth < 0:
        raise DomainError("depth must be a natural number")
    for approx in inverse_steps(arena, x):
        if approx.steps == 2 * depth:
            return approx
    raise AssertionError("unreachable")


def inverse_bounds(arena: Arena, x: GameRef, depth: int) -> tuple[Fraction, Fraction | None]:
    """``(max left, min right)``; the upper bound is ``None`` while no right option exists."""
    approx = inverse_options(arena, x, depth)
    return approx.lower(), approx.upper()
