"""
Core operations on games: construction, duality, classification,
minimal/maximal coalitions, quota notation and dummy voters
"""
import re
from typing import Iterable

from config.settings import settings
from simplegames.errors import ParseError, TooLargeError, VoterOutOfRangeError
from simplegames.models.game import (
    Classification,
    Game,
    QuotaGame,
    coalition_index,
    coalition_voters,
    full_mask,
    voter_mask,
)

_DIGIT_QUOTA = re.compile(r"^\(\s*(\d+)\s*\)\s*_\s*\{?\s*(\d+)\s*\}?$")
_COMMA_QUOTA = re.compile(r"^\(\s*(\d+(?:\s*,\s*\d+)*)\s*,?\s*\)\s*_\s*\{?\s*(\d+)\s*\}?$")


# ============ CONSTRUCTION ============

def new_game(n: int, winning: Iterable[Iterable[int]]) -> Game:
    """Validated constructor; rejects a winning set that is not upward closed"""
    mask = 0
    for coalition in winning:
        mask |= 1 << coalition_index(coalition, n)
    return Game(n, mask)


def from_mask(n: int, mask: int) -> Game:
    return Game(n, mask)


def from_hex(n: int, text: str) -> Game:
    try:
        mask = int(text.strip(), 16)
    except ValueError:
        raise ParseError(f"'{text}' is not a hexadecimal mask")
    if mask > full_mask(n):
        raise ParseError(f"mask {text} has more than {1 << n} bits")
    return Game(n, mask)


def upward_closure(n: int, coalitions: Iterable[Iterable[int]]) -> Game:
    """Smallest game containing the given coalitions"""
    mask = 0
    for coalition in coalitions:
        mask |= 1 << coalition_index(coalition, n)
    full = full_mask(n)
    # one pass per voter suffices: closure under j survives later passes
    for j in range(n):
        mask |= ((mask & (full ^ voter_mask(n, j))) << (1 << j)) & full
    return Game(n, mask)


def dictatorship(n: int, voter: int) -> Game:
    if not 1 <= voter <= n:
        raise VoterOutOfRangeError(f"voter {voter} outside 1..{n}")
    return Game(n, voter_mask(n, voter - 1))


def hat0(n: int) -> Game:
    """Predetermined loss"""
    return Game(n, 0)


def hat1(n: int) -> Game:
    """Predetermined win"""
    return Game(n, full_mask(n))


# ============ DUALITY AND CLASSIFICATION ============

def _reverse_bits(mask: int, width: int) -> int:
    return int(format(mask, f"0{width}b")[::-1], 2)


def dual(game: Game) -> Game:
    """Blocking dual: A wins iff its complement loses"""
    n = game.n_voters
    # complement of coalition i is index (2^n - 1) ^ i, i.e. bit reversal
    return Game(n, ~_reverse_bits(game.mask, 1 << n) & full_mask(n))


def dummy_voters(game: Game) -> frozenset:
    """1-based voters that appear in no minimal winning coalition"""
    n, mask = game.n_voters, game.mask
    full = full_mask(n)
    dummies = set()
    for j in range(n):
        without_j = full ^ voter_mask(n, j)
        if (mask >> (1 << j)) & without_j == mask & without_j:
            dummies.add(j + 1)
    return frozenset(dummies)


def powerful_voters(game: Game) -> frozenset:
    return frozenset(range(1, game.n_voters + 1)) - dummy_voters(game)


def classify(game: Game) -> Classification:
    star = dual(game).mask
    is_simple = game.mask & ~star == 0
    is_strong = star & ~game.mask == 0
    dummies = dummy_voters(game)
    return Classification(
        is_game=True,
        is_simple=is_simple,
        is_strong=is_strong,
        is_ipsodual=is_simple and is_strong,
        dummies=dummies,
        powerful=frozenset(range(1, game.n_voters + 1)) - dummies,
    )


def is_ipsodual(game: Game) -> bool:
    return dual(game).mask == game.mask


# ============ MINIMAL WINNING / MAXIMAL LOSING ============

def min_winning_mask(game: Game) -> int:
    n, mask = game.n_voters, game.mask
    full = full_mask(n)
    redundant = 0
    for j in range(n):
        redundant |= (mask & (full ^ voter_mask(n, j))) << (1 << j)
    return mask & ~redundant


def max_losing_mask(game: Game) -> int:
    n = game.n_voters
    full = full_mask(n)
    losing = full & ~game.mask
    extendable = 0
    for j in range(n):
        extendable |= (losing >> (1 << j)) & (full ^ voter_mask(n, j))
    return losing & ~extendable


def _indices(mask: int) -> list[int]:
    found = []
    while mask:
        low = mask & -mask
        found.append(low.bit_length() - 1)
        mask ^= low
    return found


def min_winning_indices(game: Game) -> list[int]:
    return _indices(min_winning_mask(game))


def max_losing_indices(game: Game) -> list[int]:
    return _indices(max_losing_mask(game))


def min_winning(game: Game) -> list[frozenset]:
    return [coalition_voters(i) for i in min_winning_indices(game)]


def max_losing(game: Game) -> list[frozenset]:
    return [coalition_voters(i) for i in max_losing_indices(game)]


# ============ QUOTA NOTATION ============

def parse_quota(text: str) -> QuotaGame:
    """Parse `(d1d2...dn)_q` (single digits) or `(w1,w2,...,wn)_q`"""
    stripped = text.strip()
    match = _DIGIT_QUOTA.match(stripped)
    if match:
        weights = tuple(int(d) for d in match.group(1))
        return QuotaGame(weights, int(match.group(2)))
    match = _COMMA_QUOTA.match(stripped)
    if match:
        weights = tuple(int(w) for w in match.group(1).split(","))
        return QuotaGame(weights, int(match.group(2)))
    raise ParseError(f"'{text}' is not quota notation like (2111)_3 or (12,1,1)_13")


def format_quota(quota_game: QuotaGame) -> str:
    if all(w <= 9 for w in quota_game.weights):
        body = "".join(str(w) for w in quota_game.weights)
    else:
        body = ",".join(str(w) for w in quota_game.weights)
        # a lone weight keeps its comma, (12)_3 would read back as (1,2)_3
        if len(quota_game.weights) == 1:
            body += ","
    return f"({body})_{quota_game.quota}"


def compile_quota(quota_game: QuotaGame) -> Game:
    """Coalition A wins iff the sum of its weights attains the quota"""
    n = quota_game.n_voters
    if n > settings.MAX_ALGEBRA_VOTERS:
        raise TooLargeError(f"{n} voters exceeds {settings.MAX_ALGEBRA_VOTERS}")
    weights, quota = quota_game.weights, quota_game.quota
    sums = [0] * (1 << n)
    mask = 1 if quota <= 0 else 0
    for index in range(1, 1 << n):
        low = index & -index
        sums[index] = sums[index ^ low] + weights[low.bit_length() - 1]
        if sums[index] >= quota:
            mask |= 1 << index
    return Game(n, mask)


def is_homogeneous(quota_game: QuotaGame) -> bool:
    """Every minimal winning coalition weighs exactly the quota"""
    game = compile_quota(quota_game)
    return all(
        quota_game.coalition_weight(index) == quota_game.quota
        for index in min_winning_indices(game)
    )


# ============ DUMMIES ============

def add_dummy(game: Game) -> Game:
    """Append a powerless voter n+1"""
    n = game.n_voters
    if n + 1 > settings.MAX_ALGEBRA_VOTERS:
        raise TooLargeError(f"cannot add a voter beyond {settings.MAX_ALGEBRA_VOTERS}")
    return Game(n + 1, game.mask | (game.mask << (1 << n)))


def restrict(game: Game, voters: Iterable[int]) -> Game:
    """Game on the listed 1-based voters, every other voter held out"""
    positions = [v - 1 for v in sorted(voters)]
    p = len(positions)
    mask = 0
    for k in range(1 << p):
        old = 0
        for bit, position in enumerate(positions):
            if k >> bit & 1:
                old |= 1 << position
        if game.mask >> old & 1:
            mask |= 1 << k
    return Game(p, mask)


def strip_dummies(game: Game) -> tuple[Game, tuple[int, ...]]:
    """Restriction to the powerful voters, with those voters (1-based)

    A game without powerful voters (1-hat or 0-hat) comes back as the
    one-voter constant game and an empty voter tuple.
    """
    powerful = tuple(sorted(powerful_voters(game)))
    if not powerful:
        return Game(1, full_mask(1) if game.mask else 0), ()
    if len(powerful) == game.n_voters:
        return game, powerful
    return restrict(game, powerful), powerful
