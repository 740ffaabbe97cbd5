"""
Operators on games: median, compound, quotient, choice, substitution and
opposition, influence, and the win-type of a game tree
"""
import logging
from typing import Sequence

import numpy as np

from simplegames.errors import (
    ArityMismatchError,
    LabelOutOfRangeError,
    MapSizeMismatchError,
    MismatchedVoterCountError,
    NotMonotoneError,
    SameVoterError,
    VoterOutOfRangeError,
)
from simplegames.models.game import (
    Game,
    VoterMap,
    coalition_voters,
    format_coalition,
    full_mask,
    voter_mask,
)
from simplegames.models.tree import GameTree
from simplegames.services.game_core import dictatorship
from simplegames.services.mask_rows import mask_bits, pack_bits, rows_to_ints, source_indices

logger = logging.getLogger(__name__)


def _same_size(*games: Game) -> int:
    n = games[0].n_voters
    for game in games[1:]:
        if game.n_voters != n:
            raise MismatchedVoterCountError(
                f"games on {n} and {game.n_voters} voters cannot be combined"
            )
    return n


def _check_voter(n: int, voter: int) -> None:
    if not 1 <= voter <= n:
        raise VoterOutOfRangeError(f"voter {voter} outside 1..{n}")


# ============ MEDIAN AND COMPOUND ============

def median(first: Game, second: Game, third: Game) -> Game:
    """Coalitions winning in at least two of the three games"""
    n = _same_size(first, second, third)
    s, t, u = first.mask, second.mask, third.mask
    return Game(n, (s & t) | (s & u) | (t & u))


def compound(outer: Game, inner: Sequence[Game]) -> Game:
    """A wins iff the set of inner games it wins is winning in outer"""
    if len(inner) != outer.n_voters:
        raise ArityMismatchError(
            f"outer game has {outer.n_voters} voters but {len(inner)} inner games were given"
        )
    n = _same_size(*inner)
    signature = np.zeros(1 << n, dtype=np.int64)
    for i, game in enumerate(inner):
        signature |= mask_bits(game.mask, n).astype(np.int64) << i
    outcome = mask_bits(outer.mask, outer.n_voters)[signature]
    return Game(n, rows_to_ints(pack_bits(outcome[None, :], n))[0])


# ============ QUOTIENTS ============

def quotient(game: Game, voter_map: VoterMap) -> Game:
    """f(S) = {A : f^-1(A) in S} on the codomain voters"""
    if voter_map.domain != game.n_voters:
        raise MapSizeMismatchError(
            f"map has {voter_map.domain} offices, game has {game.n_voters} voters"
        )
    maps = np.array([voter_map.image], dtype=np.int64)
    src = source_indices(maps, voter_map.codomain)
    bits = mask_bits(game.mask, game.n_voters)[src]
    return Game(voter_map.codomain, rows_to_ints(pack_bits(bits, voter_map.codomain))[0])


def embed(game: Game, n: int, offset: int = 0) -> Game:
    """Copy of the game on voters offset+1..offset+m of an n-voter set"""
    m = game.n_voters
    if offset < 0 or offset + m > n:
        raise VoterOutOfRangeError(f"cannot place {m} voters at offset {offset} among {n}")
    return quotient(game, VoterMap(m, n, tuple(range(offset, offset + m))))


# ============ CHOICE ============

def chi(voter: int, first: Game, second: Game) -> Game:
    """Choice by voter between two games: (S1 & S2) | {A in S1 | S2 : voter in A}"""
    n = _same_size(first, second)
    _check_voter(n, voter)
    s, t = first.mask, second.mask
    return Game(n, (s & t) | (voter_mask(n, voter - 1) & (s | t)))


# ============ INFLUENCE ============

def _single_votes(game: Game, x: int, y: int) -> tuple[int, int]:
    """Masks over coalitions A avoiding x and y: bit A set iff A+x (resp. A+y) wins"""
    n, mask = game.n_voters, game.mask
    free = full_mask(n) & ~voter_mask(n, x - 1) & ~voter_mask(n, y - 1)
    with_x = (mask >> (1 << (x - 1))) & free
    with_y = (mask >> (1 << (y - 1))) & free
    return with_x, with_y


def influence_geq(game: Game, x: int, y: int) -> bool:
    """x is at least as influential as y: A+y wins implies A+x wins"""
    n = game.n_voters
    _check_voter(n, x)
    _check_voter(n, y)
    if x == y:
        return True
    with_x, with_y = _single_votes(game, x, y)
    return with_y & ~with_x == 0


def influence_preorder(game: Game) -> list[list[bool]]:
    """Row x, column y (0-based) holds x >= y"""
    n = game.n_voters
    return [[influence_geq(game, x, y) for y in range(1, n + 1)] for x in range(1, n + 1)]


def influence_classes(game: Game) -> tuple[list[tuple[int, ...]], bool]:
    """Classes of equally influential voters, strongest first, and whether
    the pre-order is total"""
    n = game.n_voters
    order = influence_preorder(game)
    classes: list[tuple[int, ...]] = []
    seen = set()
    for x in range(n):
        if x in seen:
            continue
        members = tuple(y + 1 for y in range(n) if order[x][y] and order[y][x])
        seen.update(v - 1 for v in members)
        classes.append(members)
    total = all(order[x][y] or order[y][x] for x in range(n) for y in range(n))
    dominated = {c: sum(order[c[0] - 1]) for c in classes}
    classes.sort(key=lambda c: (-dominated[c], c))
    return classes, total


def format_influence(classes: list[tuple[int, ...]]) -> str:
    return " > ".join("~".join(str(v) for v in c) for c in classes)


def comparable_pairs(game: Game) -> list[tuple[int, int, bool]]:
    """(i, j, strict) for distinct voters with i <= j, lexicographic in (i, j)"""
    n = game.n_voters
    pairs = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and influence_geq(game, j, i):
                pairs.append((i, j, not influence_geq(game, i, j)))
    return pairs


# ============ SUBSTITUTION AND OPPOSITION ============

def substitute(game: Game, x: int, y: int) -> Game:
    """x votes as y does; x becomes a dummy"""
    n = game.n_voters
    _check_voter(n, x)
    _check_voter(n, y)
    if x == y:
        raise SameVoterError(f"cannot substitute voter {x} by itself")
    return quotient(game, VoterMap.substitution(n, x, y))


def oppose(game: Game, x: int, y: int) -> Game:
    """x votes against y; a game iff x is at most as influential as y"""
    n = game.n_voters
    _check_voter(n, x)
    _check_voter(n, y)
    if x == y:
        raise SameVoterError(f"voter {x} cannot oppose itself")
    with_x, with_y = _single_votes(game, x, y)
    broken = with_x & ~with_y
    if broken:
        index = (broken & -broken).bit_length() - 1
        witness = coalition_voters(index)
        raise NotMonotoneError(
            f"voter {x} is not less influential than {y}: "
            f"{format_coalition(index | 1 << (x - 1))} wins but "
            f"{format_coalition(index | 1 << (y - 1))} loses",
            witness=witness,
        )
    # A is judged as (A - x) when y is in A, and as (A - x) + x otherwise
    k = np.arange(1 << n, dtype=np.int64)
    x_bit, y_bit = 1 << (x - 1), 1 << (y - 1)
    base = k & ~x_bit
    judged = np.where(k & y_bit, base, base | x_bit)
    bits = mask_bits(game.mask, n)[judged]
    return Game(n, rows_to_ints(pack_bits(bits[None, :], n))[0])


# ============ GAME TREES ============

def fold_choice(label: int, children: Sequence[GameTree]) -> GameTree:
    """Binary left-nested tree for one move among several children"""
    tree = GameTree(label, (children[0], children[1]))
    for child in children[2:]:
        tree = GameTree(label, (tree, child))
    return tree


def win_type(tree: GameTree, n: int) -> Game:
    """Coalitions that can force the winning leaf into themselves"""
    out_of_range = [label for label in tree.labels() if label > n]
    if out_of_range:
        raise LabelOutOfRangeError(f"labels {sorted(out_of_range)} exceed {n} voters")
    memo: dict[int, Game] = {}

    def evaluate(node: GameTree) -> Game:
        key = id(node)
        if key not in memo:
            if node.is_leaf:
                memo[key] = dictatorship(n, node.label)
            else:
                games = [evaluate(child) for child in node.children]
                result = chi(node.label, games[0], games[1])
                for game in games[2:]:
                    result = chi(node.label, result, game)
                memo[key] = result
        return memo[key]

    return evaluate(tree)

