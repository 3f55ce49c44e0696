from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ARENA
from conway import (Comparison, DomainError, Dyadic, canonical_form, conway_product,
                    dyadic_to_game, game_to_number, inverse_bounds, inverse_options,
                    is_number, multiply, multiply_numbers, simplest_dyadic_between)
from conway.numbers import inverse_steps

F = Fraction


def dg(x, arena=ARENA):
    return dyadic_to_game(arena, Dyadic.coerce(x) if not isinstance(x, Fraction)
                          else Dyadic.from_fraction(x))


def test_dyadic_to_game_examples(arena):
    half = dyadic_to_game(arena, Dyadic(1, 1))
    assert arena.node(half) == ((arena.zero,), (arena.one,))
    three = dyadic_to_game(arena, 3)
    assert arena.node(three) == ((dyadic_to_game(arena, 2),), ())
    assert dyadic_to_game(arena, 0) == arena.zero
    assert dyadic_to_game(arena, -1) == arena.neg_one


def test_simplest_examples():
    assert simplest_dyadic_between(0, 1) == Dyadic(1, 1)
    assert simplest_dyadic_between(None, None) == 0
    assert simplest_dyadic_between(0, None) == 1
    assert simplest_dyadic_between(F(1, 4), F(3, 4)) == Dyadic(1, 1)


def test_game_to_number_examples(arena):
    assert game_to_number(arena, arena.make_game([arena.zero], [arena.one])) == Dyadic(1, 1)
    assert game_to_number(arena, arena.star) is None
    assert game_to_number(arena, arena.make_game([arena.zero], [arena.up])) is None
    # {0,1|2,3} is the number 3/2 once simplified
    g = arena.make_game([arena.zero, arena.one], [dyadic_to_game(arena, 2), dyadic_to_game(arena, 3)])
    assert game_to_number(arena, g) == Dyadic(3, 1)
    assert is_number(arena, arena.add(arena.star, arena.star))


def test_product_examples(arena):
    two = arena.make_game([arena.one], [])
    assert arena.equal(conway_product(arena, two, arena.star), arena.zero)
    two_alt = arena.make_game([arena.zero, arena.one], [])
    assert arena.equal(two, two_alt)
    assert arena.compare(conway_product(arena, two_alt, arena.star), arena.zero) is Comparison.FUZZY
    for g in (arena.star, arena.up, two):
        assert conway_product(arena, arena.zero, g) == arena.zero
    half = dyadic_to_game(arena, Dyadic(1, 1))
    assert game_to_number(arena, conway_product(arena, half, half)) == Dyadic(1, 2)


def test_multiply_requires_numbers(arena):
    with pytest.raises(DomainError):
        multiply(arena, arena.star, arena.one)
    assert multiply(arena, dyadic_to_game(arena, 3), dyadic_to_game(arena, Dyadic(1, 1))) \
        == dyadic_to_game(arena, Dyadic(3, 1))


def test_multiply_numbers_examples():
    assert multiply_numbers(Dyadic(1, 1), Dyadic(1, 1)) == Dyadic(1, 2)
    assert multiply_numbers(Dyadic(7, 3), 0) == 0
    assert multiply_numbers(Dyadic(3, 2), 4) == 3


# inverses

def test_inverse_of_three(arena):
    approx = inverse_options(arena, dyadic_to_game(arena, 3), 3)
    assert approx.left == {F(0), F(1, 4), F(5, 16), F(21, 64)}
    assert approx.right == {F(1, 2), F(3, 8), F(11, 32)}
    assert inverse_bounds(arena, dyadic_to_game(arena, 3), 3) == (F(21, 64), F(11, 32))
    assert F(21, 64) < F(1, 3) < F(11, 32)


def test_inverse_of_one(arena):
    for depth in range(4):
        approx = inverse_options(arena, arena.one, depth)
        assert approx.left == {0} and approx.right == frozenset()
        assert inverse_bounds(arena, arena.one, depth) == (0, None)


def test_inverse_of_two(arena):
    two = dyadic_to_game(arena, 2)
    approx = inverse_options(arena, two, 2)
    assert approx.left == {0} and approx.right == {1}
    assert inverse_bounds(arena, two, 2) == (0, 1)
    lo, hi = inverse_bounds(arena, two, 3)
    assert lo <= F(1, 2) <= hi


def test_inverse_rejects_non_positive(arena):
    for g in (arena.zero, arena.neg_one, arena.star):
        with pytest.raises(DomainError):
            inverse_options(arena, g, 1)


def test_inverse_of_non_power_of_two_option(arena):
    # 7/2 = {3|4}; dividing by 3 leaves the dyadics, exact rationals still work
    x = dyadic_to_game(arena, Dyadic(7, 1))
    approx = inverse_options(arena, x, 3)
    for y in approx.left:
        assert F(7, 2) * y < 1
    for y in approx.right:
        assert F(7, 2) * y > 1


positive = st.builds(Dyadic, st.integers(1, 40), st.integers(0, 3))


@given(positive)
def test_inverse_contract_and_monotone(x):
    g = dg(x)
    v = x.to_fraction()
    prev = None
    for approx in inverse_steps(ARENA, g):
        if approx.steps > 8:
            break
        assert all(v * y < 1 for y in approx.left)
        assert all(v * y > 1 for y in approx.right)
        lo, hi = approx.lower(), approx.upper()
        if prev is not None:
            assert lo >= prev[0]
            if prev[1] is not None:
                assert hi is not None and hi <= prev[1]
        prev = (lo, hi)


# number properties

def test_simplicity_rule_sweep(arena):
    count = 0
    for n in range(6):
        for m in range(-16, 17):
            g = arena.make_game([dyadic_to_game(arena, Dyadic(m, n))],
                                [dyadic_to_game(arena, Dyadic(m + 1, n))])
            assert arena.equal(g, dyadic_to_game(arena, Dyadic(2 * m + 1, n + 1)))
            count += 1
    assert count >= 160


small = st.builds(Dyadic, st.integers(-12, 12), st.integers(0, 3))


@given(st.builds(Dyadic, st.integers(-64, 64), st.integers(0, 6)))
def test_number_round_trip(x):
    assert game_to_number(ARENA, dg(x)) == x


@given(small, small)
def test_numbers_totally_ordered(x, y):
    c = ARENA.compare(dg(x), dg(y))
    expected = (Comparison.LESS if x < y else Comparison.GREATER if x > y
                else Comparison.EQUAL)
    assert c is expected


@given(small)
def test_options_bracket_number(x):
    c = canonical_form(ARENA, dg(x))
    for a in ARENA.left(c):
        assert ARENA.compare(a, c) is Comparison.LESS
    for b in ARENA.right(c):
        assert ARENA.compare(b, c) is Comparison.GREATER


@given(small, small)
def test_product_matches_oracle(x, y):
    p = conway_product(ARENA, dg(x), dg(y))
    assert game_to_number(ARENA, p) == multiply_numbers(x, y)


tiny = st.builds(Dyadic, st.integers(-6, 6), st.integers(0, 2))


@given(tiny, tiny, tiny)
def test_ring_laws(x, y, z):
    a = ARENA

    def mul(g, h):
        return conway_product(a, g, h)

    gx, gy, gz = dg(x), dg(y), dg(z)
    assert a.equal(mul(gx, gy), mul(gy, gx))
    assert a.equal(mul(a.add(gx, gy), gz), a.add(mul(gx, gz), mul(gy, gz)))
    assert a.equal(mul(mul(gx, gy), gz), mul(gx, mul(gy, gz)))


@given(small, small, small, small)
def test_order_property_p3(a1, a2, b1, b2):
    x1, x2 = sorted((a1, a2))
    y1, y2 = sorted((b1, b2))
    if x1 == x2 or y1 == y2:
        return
    a = ARENA

    def mul(p, q):
        return conway_product(a, dg(p), dg(q))

    lhs = a.add(mul(x1, y2), mul(x2, y1))
    rhs = a.add(mul(x1, y1), mul(x2, y2))
    assert a.compare(lhs, rhs) is Comparison.LESS
