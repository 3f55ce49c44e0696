class GameError(Exception):
    """Base class for engine errors."""


class HandleError(GameError, LookupError):
    """A game handle does not belong to the arena."""


class DomainError(GameError, ValueError):
    """An operation was applied outside its domain (e.g. a non-number)."""


class ParseError(GameError):
    """Malformed game expression; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position
