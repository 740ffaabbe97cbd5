"""
Exception hierarchy for game construction, algebra and search
"""
from typing import Optional


class GameError(Exception):
    """Base class for every error raised by the library"""


class NotMonotoneError(GameError):
    """Winning set is not upward closed; carries a witness coalition"""

    def __init__(self, message: str, witness: Optional[frozenset] = None):
        super().__init__(message)
        self.witness = witness


class VoterOutOfRangeError(GameError):
    pass


class ParseError(GameError):
    pass


class TooLargeError(GameError):
    """Voter count above a configured cap"""


class MismatchedVoterCountError(GameError):
    pass


class ArityMismatchError(GameError):
    pass


class MapSizeMismatchError(GameError):
    pass


class SameVoterError(GameError):
    pass


class LabelOutOfRangeError(GameError):
    pass


class NotIpsodualError(GameError):
    pass


class TooFewPowerfulError(GameError):
    pass


class TrivialInfluenceError(GameError):
    """No two distinct voters are comparable via influence"""


class UnresolvedError(GameError):
    """Exact value outside the searchable range; a lower bound is known"""

    def __init__(self, message: str, lower_bound: int):
        super().__init__(message)
        self.lower_bound = lower_bound


class BudgetExceededError(GameError):
    pass


class BadIndexError(GameError):
    pass


class DecompositionError(GameError):
    """A constructed decomposition failed its own consistency check"""


class SingleVoterError(GameError):
    """A split needs at least two voters"""


class NotQuotaError(GameError):
    """No integer weights and quota reproduce the game"""
