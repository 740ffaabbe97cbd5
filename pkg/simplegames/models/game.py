"""
Value types for simple games

A game on n voters is a bit vector of length 2^n: bit i is set iff the
coalition with characteristic index i wins. Voter j (1-based) belongs to
coalition i iff bit j-1 of i is set. Everything here is immutable.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from config.settings import settings
from simplegames.errors import (
    MapSizeMismatchError,
    NotMonotoneError,
    TooLargeError,
    VoterOutOfRangeError,
)


# ============ COALITION HELPERS ============

def coalition_index(voters: Iterable[int], n: Optional[int] = None) -> int:
    """Characteristic index of a coalition given as 1-based voters"""
    index = 0
    for voter in voters:
        if voter < 1 or (n is not None and voter > n):
            raise VoterOutOfRangeError(f"voter {voter} outside 1..{n}")
        index |= 1 << (voter - 1)
    return index


def coalition_voters(index: int) -> frozenset:
    """1-based voters of the coalition with the given index"""
    voters = set()
    j = 0
    while index:
        if index & 1:
            voters.add(j + 1)
        index >>= 1
        j += 1
    return frozenset(voters)


def format_coalition(index: int) -> str:
    voters = sorted(coalition_voters(index))
    return "{" + ",".join(str(v) for v in voters) + "}"


@lru_cache(maxsize=None)
def full_mask(n: int) -> int:
    """Mask with every coalition winning (the game 1-hat)"""
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def voter_mask(n: int, j: int) -> int:
    """Coalitions containing voter j (0-based), i.e. the dictatorship of j"""
    half = 1 << j
    period = half << 1
    block = ((1 << half) - 1) << half
    mask = 0
    for start in range(0, 1 << n, period):
        mask |= block << start
    return mask


def first_monotonicity_violation(n: int, mask: int) -> Optional[tuple[int, int]]:
    """(winning coalition index, 0-based voter) whose addition loses, if any"""
    full = full_mask(n)
    for j in range(n):
        without_j = full ^ voter_mask(n, j)
        shift = 1 << j
        broken = ((mask & without_j) << shift) & ~mask & full
        if broken:
            low = (broken & -broken).bit_length() - 1
            return low - shift, j
    return None


# ============ GAME ============

@dataclass(frozen=True, slots=True, order=True)
class Game:
    """A monotone set of winning coalitions over n voters"""
    n_voters: int
    mask: int

    def __post_init__(self):
        if not 1 <= self.n_voters <= settings.MAX_ALGEBRA_VOTERS:
            raise TooLargeError(
                f"voter count {self.n_voters} outside 1..{settings.MAX_ALGEBRA_VOTERS}"
            )
        if self.mask < 0 or self.mask > full_mask(self.n_voters):
            raise ValueError(f"mask does not fit {self.n_voters} voters")
        violation = first_monotonicity_violation(self.n_voters, self.mask)
        if violation is not None:
            index, j = violation
            raise NotMonotoneError(
                f"coalition {format_coalition(index)} wins but "
                f"{format_coalition(index | 1 << j)} loses",
                witness=coalition_voters(index),
            )

    @property
    def n_coalitions(self) -> int:
        return 1 << self.n_voters

    @property
    def size(self) -> int:
        """Number of winning coalitions"""
        return self.mask.bit_count()

    def wins(self, coalition) -> bool:
        """Accepts a characteristic index or an iterable of 1-based voters"""
        index = coalition if isinstance(coalition, int) else coalition_index(coalition, self.n_voters)
        return bool(self.mask >> index & 1)

    def to_hex(self) -> str:
        digits = max(1, self.n_coalitions // 4)
        return format(self.mask, f"0{digits}X")

    def __str__(self) -> str:
        return f"{self.n_voters}:{self.to_hex()}"


# ============ QUOTA GAMES ============

@dataclass(frozen=True, slots=True)
class QuotaGame:
    """Weights per voter and a quota; a coalition wins iff its weight >= quota"""
    weights: tuple[int, ...]
    quota: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights:
            raise ValueError("a quota game needs at least one voter")
        if any(w < 0 for w in self.weights) or self.quota < 0:
            raise ValueError("weights and quota must be non-negative")

    @property
    def n_voters(self) -> int:
        return len(self.weights)

    def coalition_weight(self, index: int) -> int:
        return sum(w for j, w in enumerate(self.weights) if index >> j & 1)


# ============ CLASSIFICATION ============

@dataclass(frozen=True, slots=True)
class Classification:
    is_game: bool
    is_simple: bool
    is_strong: bool
    is_ipsodual: bool
    dummies: frozenset = field(default_factory=frozenset)
    powerful: frozenset = field(default_factory=frozenset)


# ============ VOTER MAPS ============

@dataclass(frozen=True, slots=True)
class VoterMap:
    """Total map from offices (domain voters) to voters; 0-based image"""
    domain: int
    codomain: int
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if len(self.image) != self.domain:
            raise MapSizeMismatchError(
                f"map lists {len(self.image)} images for {self.domain} offices"
            )
        for office, voter in enumerate(self.image):
            if not 0 <= voter < self.codomain:
                raise VoterOutOfRangeError(
                    f"office {office + 1} mapped to {voter + 1}, outside 1..{self.codomain}"
                )

    @classmethod
    def substitution(cls, n: int, x: int, y: int) -> "VoterMap":
        """f_xy: fixes every voter except x (1-based), which goes to y"""
        image = list(range(n))
        image[x - 1] = y - 1
        return cls(n, n, tuple(image))

    @classmethod
    def from_pairs(cls, text: str, domain: int, codomain: Optional[int] = None) -> "VoterMap":
        """Parse `1:2,3:1` (1-based); unlisted offices map to themselves"""
        image = list(range(domain))
        if text.strip():
            for pair in text.split(","):
                try:
                    office, voter = (int(part) for part in pair.split(":"))
                except ValueError:
                    raise ValueError(f"malformed map entry '{pair}'")
                if not 1 <= office <= domain:
                    raise VoterOutOfRangeError(f"office {office} outside 1..{domain}")
                image[office - 1] = voter - 1
        if codomain is None:
            codomain = max(domain, max(image) + 1)
        return cls(domain, codomain, tuple(image))

    def __str__(self) -> str:
        return ",".join(f"{office + 1}:{voter + 1}" for office, voter in enumerate(self.image))
