"""
Inverse median search: find x, y, z in three candidate pools with
m(x, y, z) equal to one of several target games

Where x and y agree the median is already decided, so a pair is kept only
if x & y <= T <= x | y; the third game must then match T on the
disagreement set x ^ y.
"""
import logging
from typing import Optional, Sequence

import numpy as np

from config.settings import settings
from simplegames.errors import BudgetExceededError, MismatchedVoterCountError
from simplegames.models.game import Game
from simplegames.services.mask_rows import ints_to_rows

logger = logging.getLogger(__name__)

# rows of the third pool compared at once per surviving pair
PAIR_BLOCK = 256


def find_median_triple(
    targets: np.ndarray,
    first: np.ndarray,
    second: np.ndarray,
    third: np.ndarray,
    symmetric: bool = False,
    budget: Optional[int] = None,
) -> Optional[tuple[int, int, int, int]]:
    """(target, i, j, k) row indices with m(first[i], second[j], third[k]) == targets[t]

    All arguments are (K, W) uint64 word matrices for the same voter count.
    With symmetric=True the three pools must be the same matrix and only
    i <= j <= k is searched.
    """
    budget = settings.POOL_PAIR_BUDGET if budget is None else budget
    if len(targets) == 0 or len(first) == 0 or len(second) == 0 or len(third) == 0:
        return None
    pairs = 0
    for i, x in enumerate(first):
        start = i if symmetric else 0
        ys = second[start:]
        for t, target in enumerate(targets):
            pairs += len(ys)
            if pairs > budget:
                raise BudgetExceededError(f"median search exceeded {budget} candidate pairs")
            forced_in = np.all((x & ys) & ~target == 0, axis=1)
            covered = np.all(target & ~(x | ys) == 0, axis=1)
            survivors = np.flatnonzero(forced_in & covered)
            for offset in survivors:
                j = start + int(offset)
                y = second[j]
                disagree = x ^ y
                k_start = j if symmetric else 0
                zs = third[k_start:]
                for block in range(0, len(zs), PAIR_BLOCK):
                    chunk = zs[block:block + PAIR_BLOCK]
                    hits = np.flatnonzero(np.all((chunk ^ target) & disagree == 0, axis=1))
                    if len(hits):
                        k = k_start + block + int(hits[0])
                        logger.debug(f"median triple found after {pairs} pairs")
                        return t, i, j, k
    logger.debug(f"no median triple among {pairs} pairs")
    return None


def inverse_median_search(game: Game, pool: Sequence[Game]) -> Optional[tuple[Game, Game, Game]]:
    """Three pool members whose median is the game"""
    n = game.n_voters
    if any(member.n_voters != n for member in pool):
        raise MismatchedVoterCountError(f"pool games must all have {n} voters")
    pool = sorted(set(pool))
    rows = ints_to_rows([member.mask for member in pool], n)
    target = ints_to_rows([game.mask], n)
    found = find_median_triple(target, rows, rows, rows, symmetric=True)
    if found is None:
        return None
    _, i, j, k = found
    return pool[i], pool[j], pool[k]
