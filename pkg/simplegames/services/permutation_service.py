"""
Voter relabeling: canonical forms, isomorphism, automorphism groups and
injective placements of a small game into a larger voter set

Maps are handled in chunks. For a chunk of maps (P, m) sending voter j of
the source game to voter map[j] of the target, the target coalition k
corresponds to the source coalition src[p, k] = sum_j bit(k, map[p, j]) << j,
so the relabeled game is a gather of the source win vector.
"""
import itertools
import logging
from functools import lru_cache
from math import perm
from typing import Iterator, Optional

import numpy as np

from config.settings import settings
from simplegames.errors import BudgetExceededError, TooLargeError
from simplegames.models.game import Game
from simplegames.services.mask_rows import (
    ints_to_rows,
    lexmin_index,
    mask_bits,
    pack_bits,
    rows_to_ints,
    source_indices,
    unique_rows,
)

logger = logging.getLogger(__name__)


def _check_size(n: int) -> None:
    if n > settings.MAX_PERMUTATION_VOTERS:
        raise TooLargeError(
            f"{n} voters exceeds the permutation cap {settings.MAX_PERMUTATION_VOTERS}"
        )


def _map_chunks(m: int, n: int) -> Iterator[np.ndarray]:
    """Injective maps of m voters into n (permutations when m == n), chunked"""
    maps = itertools.permutations(range(n), m)
    while True:
        block = list(itertools.islice(maps, settings.PERMUTATION_CHUNK))
        if not block:
            return
        yield np.array(block, dtype=np.int64).reshape(len(block), m)


def _relabeled_rows(bits: np.ndarray, maps: np.ndarray, n_target: int) -> np.ndarray:
    return pack_bits(bits[source_indices(maps, n_target)], n_target)


def relabel(game: Game, image: tuple[int, ...], n_target: Optional[int] = None) -> Game:
    """Game where voter image[j] (0-based) plays the role of voter j"""
    n_target = game.n_voters if n_target is None else n_target
    maps = np.array([image], dtype=np.int64)
    rows = _relabeled_rows(mask_bits(game.mask, game.n_voters), maps, n_target)
    return Game(n_target, rows_to_ints(rows)[0])


@lru_cache(maxsize=65536)
def canonical_form(game: Game) -> Game:
    """Lexicographically smallest mask over all voter permutations"""
    n = game.n_voters
    _check_size(n)
    bits = mask_bits(game.mask, n)
    best = game.mask
    for maps in _map_chunks(n, n):
        rows = _relabeled_rows(bits, maps, n)
        candidate = rows_to_ints(rows[lexmin_index(rows):][:1])[0]
        best = min(best, candidate)
    return Game(n, best)


def is_isomorphic(first: Game, second: Game) -> bool:
    if first.n_voters != second.n_voters or first.size != second.size:
        return False
    return canonical_form(first) == canonical_form(second)


def automorphisms(game: Game) -> list[tuple[int, ...]]:
    """0-based permutations fixing the game"""
    n = game.n_voters
    _check_size(n)
    bits = mask_bits(game.mask, n)
    original = ints_to_rows([game.mask], n)[0]
    found = []
    for maps in _map_chunks(n, n):
        rows = _relabeled_rows(bits, maps, n)
        hits = np.all(rows == original, axis=1)
        found.extend(tuple(int(v) for v in row) for row in maps[hits])
    return found


def has_transitive_automorphism_group(game: Game) -> bool:
    orbit = {image[0] for image in automorphisms(game)}
    return len(orbit) == game.n_voters


def placement_count(m: int, n: int) -> int:
    return perm(n, m)


def relabelings(game: Game, n_target: Optional[int] = None) -> np.ndarray:
    """Distinct injective relabelings of the game into n_target voters,
    as a sorted (K, W) word matrix"""
    m = game.n_voters
    n = m if n_target is None else n_target
    _check_size(n)
    count = placement_count(m, n)
    if count > settings.PLACEMENT_BUDGET:
        raise BudgetExceededError(
            f"{count} placements of {m} voters into {n} exceed {settings.PLACEMENT_BUDGET}"
        )
    bits = mask_bits(game.mask, m)
    found = [unique_rows(_relabeled_rows(bits, maps, n)) for maps in _map_chunks(m, n)]
    rows = unique_rows(np.concatenate(found))
    logger.debug(f"{len(rows)} distinct relabelings of {game} into {n} voters")
    return rows
