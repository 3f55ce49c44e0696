"""Exact combinatorial game theory for short games."""

from .analysis import (
    Stops,
    check_number_avoidance,
    confusion_interval,
    is_all_small,
    is_infinitesimal,
    stops,
    up_multiple_bound,
)
from .canonical import (
    add_gift_horses,
    bypass_reversible,
    canonical_form,
    is_canonical,
    remove_dominated,
)
from .dyadic import Dyadic, simplest_between
from .errors import DomainError, GameError, HandleError, ParseError
from .games import Arena, Comparison, GameRef, OutcomeClass
from .impartial import (
    grundy,
    is_impartial,
    mex,
    nim_game,
    nim_sum,
    nim_winning_move,
    nimber_to_game,
)
from .numbers import (
    InverseApproximation,
    conway_product,
    dyadic_to_game,
    game_to_number,
    inverse_bounds,
    inverse_options,
    is_number,
    multiply,
    multiply_numbers,
    simplest_dyadic_between,
)
from .parser import evaluate, parse, parse_game, render, render_canonical

__version__ = "0.1.0"
