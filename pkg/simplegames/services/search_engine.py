"""
Exhaustive search over ipsodual games

- enumeration oracle (independent of the closures)
- layered closures of the dictatorships under the median and under choice
- exact weight and depth, bounded layering for 7-9 powerful voters
- quotient testing, isomorphism census
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional

import numpy as np

from config.settings import settings
from simplegames.errors import (
    BudgetExceededError,
    GameError,
    NotIpsodualError,
    TooLargeError,
    UnresolvedError,
)
from simplegames.models.game import Game, VoterMap, first_monotonicity_violation, voter_mask
from simplegames.services.game_core import (
    format_quota,
    is_ipsodual,
    min_winning,
    powerful_voters,
    strip_dummies,
)
from simplegames.services.mask_rows import (
    ints_to_rows,
    mask_bits,
    rows_to_ints,
    unique_rows,
    words_per_game,
)
from simplegames.services.decomposition import chi_decompose, median_decompose
from simplegames.services.median_search import find_median_triple
from simplegames.services.permutation_service import canonical_form, has_transitive_automorphism_group
from simplegames.services.quota_recognition import is_quota_game

logger = logging.getLogger(__name__)

MEDIAN = "median"
CHI = "chi"
OPERATIONS = (MEDIAN, CHI)

# newest-layer rows handed to one worker at a time
LAYER_CHUNK = 32
# cap on rows materialized by one outer product
OUTER_BLOCK_ELEMENTS = 1 << 22


# ============ ORACLE ============

def _dual_mask(mask: int, n: int) -> int:
    """Dual of a raw mask; also defined for n = 0"""
    width = 1 << n
    reversed_mask = int(format(mask, f"0{width}b")[::-1], 2)
    return ~reversed_mask & ((1 << width) - 1)


@lru_cache(maxsize=None)
def monotone_functions(m: int) -> tuple[int, ...]:
    """All monotone Boolean functions on m voters, as sorted masks

    A function splits on its last voter into g0 (voter absent) and g1
    (voter present); it is monotone iff both are and g0 <= g1.
    """
    if m > settings.MAX_SEARCH_VOTERS - 1:
        raise TooLargeError(f"monotone enumeration on {m} voters is out of range")
    if m == 0:
        return (0, 1)
    lower = np.array(monotone_functions(m - 1), dtype=np.uint64)
    shift = np.uint64(1 << (m - 1))
    found = [(lower[(lower & g0) == g0] << shift) | g0 for g0 in lower]
    return tuple(sorted(int(v) for v in np.concatenate(found)))


def enumerate_ipsodual(n: int) -> list[Game]:
    """Ipsodual games on n labeled voters

    Such a game is fixed by its coalitions without voter n, a simple game g
    on n-1 voters: A + n wins iff A is in the dual of g.
    """
    if not 1 <= n <= settings.MAX_SEARCH_VOTERS:
        raise TooLargeError(f"enumeration needs 1..{settings.MAX_SEARCH_VOTERS} voters, got {n}")
    half = 1 << (n - 1)
    games = []
    for g in monotone_functions(n - 1):
        star = _dual_mask(g, n - 1)
        if g & ~star == 0:
            games.append(Game(n, g | star << half))
    games.sort()
    logger.info(f"oracle: {len(games)} ipsodual games on {n} voters")
    return games


def enumerate_ipsodual_bruteforce(n: int) -> list[Game]:
    """Full scan of every mask; only for tiny n"""
    if not 1 <= n <= 4:
        raise TooLargeError("brute-force enumeration is limited to 4 voters")
    return [
        Game(n, mask)
        for mask in range(1 << (1 << n))
        if _dual_mask(mask, n) == mask and first_monotonicity_violation(n, mask) is None
    ]


# ============ LAYERED UNIVERSES ============

@dataclass
class LayeredUniverse:
    """Layer k holds the games first produced at iteration k"""
    n: int
    operation: str
    layers: list[np.ndarray]
    index: dict[int, int] = field(default_factory=dict)
    complete: bool = False

    @property
    def max_layer(self) -> int:
        return len(self.layers) - 1

    @property
    def size(self) -> int:
        return len(self.index)

    def layer_sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def games(self, layer: Optional[int] = None) -> list[Game]:
        selected = self.layers if layer is None else [self.layers[layer]]
        return [Game(self.n, mask) for rows in selected for mask in rows_to_ints(rows)]

    def rows(self, up_to: Optional[int] = None) -> np.ndarray:
        stop = len(self.layers) if up_to is None else up_to + 1
        return np.concatenate(self.layers[:stop])

    def truncated(self, max_layer: int) -> "LayeredUniverse":
        layers = self.layers[:max_layer + 1]
        index = {mask: k for mask, k in self.index.items() if k <= max_layer}
        return LayeredUniverse(self.n, self.operation, layers, index, False)


def dictatorship_rows(n: int) -> np.ndarray:
    return ints_to_rows(sorted(voter_mask(n, j) for j in range(n)), n)


def majority_rows(n: int) -> np.ndarray:
    """Majorities of three voters: the median layer 1 (and choice layer 1)"""
    masks = set()
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a, b, c = voter_mask(n, i), voter_mask(n, j), voter_mask(n, k)
                masks.add((a & b) | (a & c) | (b & c))
    return ints_to_rows(sorted(masks), n)


def _median_blocks(new: np.ndarray, pool: np.ndarray) -> Iterator[np.ndarray]:
    """Medians of each new row with every unordered pair of pool rows, in blocks"""
    width = pool.shape[1]
    block = max(1, OUTER_BLOCK_ELEMENTS // max(1, len(pool) * width))
    for a in new:
        shared = a & pool
        for start in range(0, len(pool), block):
            rows = slice(start, start + block)
            # pairs (j, k) with k >= start cover every j <= k exactly once per block
            both = (shared[rows, None, :] | shared[None, start:, :]) | (pool[rows, None, :] & pool[None, start:, :])
            yield both.reshape(-1, width)


def _chi_blocks(new: np.ndarray, pool: np.ndarray, movers: np.ndarray) -> Iterator[np.ndarray]:
    """Choices by every voter between each new row and every pool row"""
    for s in new:
        meet = s & pool
        join = s | pool
        yield (meet[None, :, :] | (movers[:, None, :] & join[None, :, :])).reshape(-1, pool.shape[1])


class _OracleAccumulator:
    """Closure members as flags over the sorted oracle set (one word per game)"""

    def __init__(self, oracle: np.ndarray):
        self.oracle = oracle[:, 0]
        self.known = np.zeros(len(oracle), dtype=bool)

    def collect(self, blocks: Iterator[np.ndarray]) -> np.ndarray:
        hits = np.zeros(len(self.oracle), dtype=bool)
        for block in blocks:
            values = block[:, 0]
            positions = np.minimum(np.searchsorted(self.oracle, values), len(self.oracle) - 1)
            if not np.array_equal(self.oracle[positions], values):
                raise GameError("closure produced a game outside the ipsodual oracle set")
            hits[positions] = True
        return hits

    def merge(self, parts: list[np.ndarray]) -> np.ndarray:
        hits = np.zeros(len(self.oracle), dtype=bool)
        for part in parts:
            hits |= part
        fresh = hits & ~self.known
        self.known |= fresh
        return self.oracle[fresh].reshape(-1, 1)

    def add(self, rows: np.ndarray) -> None:
        self.known |= np.isin(self.oracle, rows[:, 0])

    @property
    def full(self) -> bool:
        return bool(self.known.all())


class _FreeAccumulator:
    """Closure members as a set of masks, for bounded layers without an oracle"""

    def __init__(self, n: int):
        self.width = words_per_game(n)
        self.known: set[int] = set()

    def collect(self, blocks: Iterator[np.ndarray]) -> np.ndarray:
        parts = [unique_rows(block) for block in blocks]
        if not parts:
            return np.zeros((0, self.width), dtype=np.uint64)
        return unique_rows(np.concatenate(parts))

    def merge(self, parts: list[np.ndarray]) -> np.ndarray:
        parts = [part for part in parts if len(part)]
        if not parts:
            return np.zeros((0, self.width), dtype=np.uint64)
        rows = unique_rows(np.concatenate(parts))
        masks = rows_to_ints(rows)
        keep = np.array([mask not in self.known for mask in masks], dtype=bool)
        self.known.update(masks)
        return rows[keep]

    def add(self, rows: np.ndarray) -> None:
        self.known.update(rows_to_ints(rows))

    @property
    def full(self) -> bool:
        return False


@dataclass
class WeightDepthRecord:
    """Exact value, or a lower bound when the *_exact flag is False"""
    game: Game
    weight: int
    weight_exact: bool
    depth: int
    depth_exact: bool


@dataclass
class CensusEntry:
    game: Game
    weight: int
    depth: int
    quota: Optional[str]
    transitive: bool
    canonical: bool


def weight_lower_bound(game: Game) -> int:
    """A game of weight w is a quotient of Dem3^w, whose minimal winning
    coalitions have 2^w members"""
    smallest = min(len(c) for c in min_winning(game))
    return max(0, (smallest - 1).bit_length())


def depth_lower_bound(game: Game) -> int:
    """Movers on a root-to-leaf path plus the winner form a winning coalition"""
    smallest = min(len(c) for c in min_winning(game))
    return max(smallest - 1, weight_lower_bound(game))


class SearchEngine:
    """Closures are built once per (voters, operation) and reused"""

    def __init__(self, threads: Optional[int] = None):
        self.threads = max(1, threads or settings.THREADS)
        self._oracle: dict[int, np.ndarray] = {}
        self._closures: dict[tuple[int, str], LayeredUniverse] = {}

    # ---------- oracle ----------

    def oracle_rows(self, n: int) -> np.ndarray:
        if n not in self._oracle:
            self._oracle[n] = ints_to_rows([g.mask for g in enumerate_ipsodual(n)], n)
        return self._oracle[n]

    def enumerate_ipsodual(self, n: int) -> list[Game]:
        return [Game(n, mask) for mask in rows_to_ints(self.oracle_rows(n))]

    # ---------- closures ----------

    def close_under_median(self, n: int, max_layer: Optional[int] = None) -> LayeredUniverse:
        return self._close(n, MEDIAN, max_layer)

    def close_under_chi(self, n: int, max_layer: Optional[int] = None) -> LayeredUniverse:
        return self._close(n, CHI, max_layer)

    def closure(self, n: int, operation: str, max_layer: Optional[int] = None) -> LayeredUniverse:
        if operation not in OPERATIONS:
            raise ValueError(f"unknown closure operation '{operation}'")
        return self._close(n, operation, max_layer)

    def _close(self, n: int, operation: str, max_layer: Optional[int]) -> LayeredUniverse:
        if n <= settings.MAX_SEARCH_VOTERS:
            key = (n, operation)
            if key not in self._closures:
                self._closures[key] = self._build(n, operation, _OracleAccumulator(self.oracle_rows(n)), None)
            universe = self._closures[key]
            if max_layer is not None and max_layer < universe.max_layer:
                return universe.truncated(max_layer)
            return universe
        if n <= settings.MAX_BOUNDED_CLOSURE_VOTERS and max_layer is not None and max_layer <= 2:
            key = (n, f"{operation}<={max_layer}")
            if key not in self._closures:
                self._closures[key] = self._build(n, operation, _FreeAccumulator(n), max_layer)
            return self._closures[key]
        raise TooLargeError(
            f"closure on {n} voters needs n <= {settings.MAX_SEARCH_VOTERS}, "
            f"or n <= {settings.MAX_BOUNDED_CLOSURE_VOTERS} with at most 2 layers"
        )

    def _build(self, n: int, operation: str, accumulator, max_layer: Optional[int]) -> LayeredUniverse:
        first = dictatorship_rows(n)
        accumulator.add(first)
        layers = [first]
        movers = dictatorship_rows(n)

        def produce(chunk: np.ndarray, pool: np.ndarray) -> np.ndarray:
            if operation == MEDIAN:
                return accumulator.collect(_median_blocks(chunk, pool))
            return accumulator.collect(_chi_blocks(chunk, pool, movers))

        complete = accumulator.full
        while not complete and (max_layer is None or len(layers) <= max_layer):
            newest = layers[-1]
            pool = np.concatenate(layers)
            found = []
            with ThreadPoolExecutor(max_workers=self.threads) as executor:
                step = LAYER_CHUNK * self.threads
                for start in range(0, len(newest), step):
                    chunks = [
                        newest[s:s + LAYER_CHUNK]
                        for s in range(start, min(start + step, len(newest)), LAYER_CHUNK)
                    ]
                    parts = list(executor.map(lambda c: produce(c, pool), chunks))
                    found.append(accumulator.merge(parts))
                    if accumulator.full:
                        break
            fresh = unique_rows(np.concatenate(found)) if found else newest[:0]
            if len(fresh) == 0:
                complete = True
                break
            layers.append(fresh)
            complete = accumulator.full
            logger.info(f"{operation} closure on {n} voters: layer {len(layers) - 1} has {len(fresh)} games")

        index = {}
        for k, rows in enumerate(layers):
            for mask in rows_to_ints(rows):
                index[mask] = k
        return LayeredUniverse(n, operation, layers, index, complete)

    def closure_summary(self, n: int) -> dict[str, list[int]]:
        return {op: self._close(n, op, None).layer_sizes() for op in OPERATIONS}

    # ---------- weight and depth ----------

    def weight(self, game: Game) -> int:
        return self._measure(game, MEDIAN)

    def depth(self, game: Game) -> int:
        return self._measure(game, CHI)

    def _measure(self, game: Game, operation: str) -> int:
        if not is_ipsodual(game):
            raise NotIpsodualError(f"{game} is not ipsodual")
        core, powerful = strip_dummies(game)
        p = len(powerful)
        if p <= settings.MAX_SEARCH_VOTERS:
            return self._close(p, operation, None).index[core.mask]
        lower = weight_lower_bound(core) if operation == MEDIAN else depth_lower_bound(core)
        if p <= settings.MAX_BOUNDED_VOTERS:
            level = self._bounded_level(core, operation)
            if level is not None:
                return level
            lower = max(lower, 3)
            if self._decomposition_bound(core, operation) == lower:
                return lower
        raise UnresolvedError(
            f"{operation} level of a game with {p} powerful voters is only known to be >= {lower}",
            lower_bound=lower,
        )

    def _bounded_level(self, game: Game, operation: str) -> Optional[int]:
        """0, 1 or 2 when the game lies in the first layers, else None"""
        n = game.n_voters
        dictators = dictatorship_rows(n)
        majorities = majority_rows(n)
        if game.mask in rows_to_ints(dictators):
            return 0
        if game.mask in rows_to_ints(majorities):
            return 1
        pool = np.concatenate([dictators, majorities])
        target = ints_to_rows([game.mask], n)
        if operation == MEDIAN:
            found = find_median_triple(target, pool, pool, pool, symmetric=True)
        else:
            found = find_median_triple(target, pool, pool, dictators)
        return None if found is None else 2

    def _decomposition_bound(self, game: Game, operation: str) -> Optional[int]:
        """1 + the largest known level among the parts of one decomposition step"""
        try:
            if operation == MEDIAN:
                parts = median_decompose(game)
            else:
                _, substituted, opposed = chi_decompose(game)
                parts = (substituted, opposed)
        except GameError as e:
            logger.debug(f"no {operation} step for {game}: {e}")
            return None
        levels = []
        for part in parts:
            core, powerful = strip_dummies(part)
            if len(powerful) <= settings.MAX_SEARCH_VOTERS:
                levels.append(self._close(len(powerful), operation, None).index[core.mask])
            else:
                level = self._bounded_level(core, operation)
                if level is None:
                    return None
                levels.append(level)
        return 1 + max(levels)

    def weight_record(self, game: Game) -> WeightDepthRecord:
        weight, weight_exact = self._level_or_bound(game, MEDIAN)
        depth, depth_exact = self._level_or_bound(game, CHI)
        return WeightDepthRecord(game, weight, weight_exact, depth, depth_exact)

    def _level_or_bound(self, game: Game, operation: str) -> tuple[int, bool]:
        try:
            return self._measure(game, operation), True
        except UnresolvedError as e:
            return e.lower_bound, False

    def W_table(self, n_max: int) -> list[int]:
        return self._table(n_max, MEDIAN)

    def D_table(self, n_max: int) -> list[int]:
        return self._table(n_max, CHI)

    def _table(self, n_max: int, operation: str) -> list[int]:
        if n_max > settings.MAX_SEARCH_VOTERS:
            raise TooLargeError(f"tables are computed up to {settings.MAX_SEARCH_VOTERS} voters")
        return [self._close(n, operation, None).max_layer for n in range(1, n_max + 1)]

    # ---------- quotients ----------

    def is_quotient(self, game: Game, source: Game) -> Optional[VoterMap]:
        """A map f with quotient(source, f) == game, by pruned search"""
        n, m = game.n_voters, source.n_voters
        if m > settings.MAX_PERMUTATION_VOTERS:
            raise TooLargeError(f"quotient search from {m} voters exceeds {settings.MAX_PERMUTATION_VOTERS}")
        if n ** m > settings.MAP_SEARCH_BUDGET:
            raise BudgetExceededError(f"{n}^{m} candidate maps exceed {settings.MAP_SEARCH_BUDGET}")
        coalitions = np.arange(1 << n, dtype=np.int64)
        target = mask_bits(game.mask, n)
        source_bits = mask_bits(source.mask, m)
        members = [(coalitions >> v) & 1 for v in range(n)]
        everyone = (1 << m) - 1
        image = [0] * m

        def extend(office: int, preimage: np.ndarray) -> bool:
            undecided = everyone ^ ((1 << office) - 1)
            # offices still unassigned can only enlarge the preimage
            if np.any(source_bits[preimage] & ~target):
                return False
            if np.any(target & ~source_bits[preimage | undecided]):
                return False
            if office == m:
                return True
            for voter in range(n):
                image[office] = voter
                if extend(office + 1, preimage | (members[voter] << office)):
                    return True
            return False

        if extend(0, np.zeros(1 << n, dtype=np.int64)):
            return VoterMap(m, n, tuple(image))
        return None

    # ---------- census ----------

    def iso_census(self, n_powerful_max: int) -> dict[int, list[Game]]:
        """Canonical forms of ipsodual games by number of powerful voters"""
        if n_powerful_max > settings.MAX_SEARCH_VOTERS:
            raise TooLargeError(f"census is limited to {settings.MAX_SEARCH_VOTERS} powerful voters")
        census = {}
        for p in range(1, n_powerful_max + 1):
            forms = {
                canonical_form(game)
                for game in self.enumerate_ipsodual(p)
                if len(powerful_voters(game)) == p
            }
            census[p] = sorted(forms)
            logger.info(f"census: {len(forms)} classes with {p} powerful voters")
        return census

    def census_entries(self, n: int, progress: Optional[Callable[[int], None]] = None) -> list[CensusEntry]:
        entries = []
        for position, game in enumerate(self.enumerate_ipsodual(n)):
            quota = is_quota_game(game)
            entries.append(CensusEntry(
                game=game,
                weight=self.weight(game),
                depth=self.depth(game),
                quota=None if quota is None else format_quota(quota),
                transitive=has_transitive_automorphism_group(game),
                canonical=canonical_form(game) == game,
            ))
            if progress is not None:
                progress(position + 1)
        return entries
