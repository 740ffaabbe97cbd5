"""
Constructive decompositions of games into expression trees

Every decomposition is checked against its input before it is returned;
a mismatch raises DecompositionError.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Optional

from simplegames.errors import (
    DecompositionError,
    GameError,
    MismatchedVoterCountError,
    NotIpsodualError,
    SingleVoterError,
    TooFewPowerfulError,
    TrivialInfluenceError,
)
from simplegames.models.expr import (
    And,
    Chi,
    Compound,
    Dict,
    GameExpr,
    GameLeaf,
    Hat0,
    Hat1,
    Median,
    Or,
    PairMedian,
    Primed,
)
from simplegames.models.game import Game, QuotaGame, coalition_voters, full_mask
from simplegames.models.tree import GameTree
from simplegames.services.algebra import (
    chi,
    comparable_pairs,
    compound,
    fold_choice,
    median,
    oppose,
    substitute,
)
from simplegames.services.game_core import (
    add_dummy,
    compile_quota,
    dictatorship,
    dummy_voters,
    hat0,
    hat1,
    is_ipsodual,
    min_winning_indices,
    powerful_voters,
)

logger = logging.getLogger(__name__)


# ============ EVALUATION ============

def pad_to(game: Game, n: int) -> Game:
    """Append dummies until the game has n voters"""
    if game.n_voters > n:
        raise MismatchedVoterCountError(f"a {game.n_voters}-voter game does not fit {n} voters")
    while game.n_voters < n:
        game = add_dummy(game)
    return game


def evaluate(expr: GameExpr, n: int, resolve: Optional[Callable[[GameExpr, int], Game]] = None) -> Game:
    """Game on n voters denoted by the expression

    Smaller leaves get dummies appended. Primed leaves and two-argument
    medians are not fixed by the notation and go through `resolve`.
    """
    memo: dict[int, Game] = {}

    def visit(node: GameExpr) -> Game:
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Dict):
            result = dictatorship(n, node.voter)
        elif isinstance(node, Hat0):
            result = hat0(n)
        elif isinstance(node, Hat1):
            result = hat1(n)
        elif isinstance(node, GameLeaf):
            result = pad_to(node.game, n)
        elif isinstance(node, (Primed, PairMedian)):
            if resolve is None:
                raise GameError(f"'{node}' names no single game without a resolver")
            result = resolve(node, n)
        elif isinstance(node, Median):
            result = median(visit(node.first), visit(node.second), visit(node.third))
        elif isinstance(node, Chi):
            result = chi(node.voter, visit(node.first), visit(node.second))
        elif isinstance(node, Compound):
            result = compound(node.outer, [visit(e) for e in node.inner])
        elif isinstance(node, And):
            mask = full_mask(n)
            for term in node.terms:
                mask &= visit(term).mask
            result = Game(n, mask)
        elif isinstance(node, Or):
            result = Game(n, visit(node.first).mask | visit(node.second).mask)
        else:
            raise TypeError(f"not a game expression: {node!r}")
        memo[key] = result
        return result

    return visit(expr)


def verify_expr(expr: GameExpr, game: Game) -> bool:
    return evaluate(expr, game.n_voters) == game


# ============ MEDIAN DECOMPOSITIONS ============

def _substitution_triple(game: Game, x: int, y: int, z: int) -> tuple[Game, Game, Game]:
    # ordered so that Dem3 on x, y, z splits as m(Dict_x,Dict_y,Dict_z)
    triple = (substitute(game, z, x), substitute(game, x, y), substitute(game, y, z))
    _check_triple(game, triple)
    return triple


def _check_triple(game: Game, triple: tuple[Game, Game, Game]) -> None:
    if median(*triple) != game:
        raise DecompositionError(f"median of the components does not reproduce {game}")
    dummies = len(dummy_voters(game))
    for component in triple:
        if len(dummy_voters(component)) <= dummies:
            raise DecompositionError(f"component {component} has no more dummies than {game}")


def median_decompose(game: Game) -> tuple[Game, Game, Game]:
    """S = m(S_zx, S_xy, S_yz) for the three smallest powerful voters"""
    if not is_ipsodual(game):
        raise NotIpsodualError(f"{game} is not ipsodual")
    powerful = sorted(powerful_voters(game))
    if len(powerful) < 3:
        raise TooFewPowerfulError(f"{game} has {len(powerful)} powerful voters, 3 are needed")
    x, y, z = powerful[:3]
    return _substitution_triple(game, x, y, z)


def median_decompose_general(game: Game) -> tuple[Game, Game, Game]:
    """Median triple with more dummies, for any game with two or more powerful voters"""
    powerful = sorted(powerful_voters(game))
    if len(powerful) < 2:
        raise TooFewPowerfulError(f"{game} has {len(powerful)} powerful voters, 2 are needed")
    if len(powerful) >= 3:
        return _substitution_triple(game, *powerful[:3])

    # two powerful voters: the game is x AND y or x OR y
    x, y = powerful
    n = game.n_voters
    either = game.wins([x])
    triple = (dictatorship(n, x), dictatorship(n, y), hat1(n) if either else hat0(n))
    _check_triple(game, triple)
    return triple


def full_median_basis(game: Game) -> GameExpr:
    """Median-only expression over dictatorships (plus Hat0/Hat1 when the
    game is not ipsodual)"""
    memo: dict[Game, GameExpr] = {}

    def build(current: Game) -> GameExpr:
        if current in memo:
            return memo[current]
        powerful = sorted(powerful_voters(current))
        if not powerful:
            expr = Hat1() if current.mask else Hat0()
        elif len(powerful) == 1:
            expr = Dict(powerful[0])
        else:
            first, second, third = median_decompose_general(current)
            expr = Median(build(first), build(second), build(third))
        memo[current] = expr
        return expr

    return build(game)


# ============ CHOICE DECOMPOSITIONS ============

def chi_decompose(game: Game) -> tuple[int, Game, Game]:
    """(i, S_ij, S_i/j) with S = chi_i(S_ij, S_i/j), for the first pair i <= j"""
    if not is_ipsodual(game):
        raise NotIpsodualError(f"{game} is not ipsodual")
    # a dummy is below everyone but splitting on it changes nothing
    powerful = powerful_voters(game)
    pairs = [p for p in comparable_pairs(game) if p[0] in powerful and p[1] in powerful]
    if not pairs:
        raise TrivialInfluenceError(f"no two distinct powerful voters of {game} are comparable")
    i, j, _ = next((p for p in pairs if p[2]), pairs[0])
    substituted = substitute(game, i, j)
    opposed = oppose(game, i, j)
    if chi(i, substituted, opposed) != game:
        raise DecompositionError(f"choice by {i} does not reproduce {game}")
    return i, substituted, opposed


def chi_basis(game: Game) -> GameExpr:
    """Choice-only expression over dictatorships by repeated chi_decompose"""
    memo: dict[Game, GameExpr] = {}

    def build(current: Game) -> GameExpr:
        if current in memo:
            return memo[current]
        powerful = sorted(powerful_voters(current))
        if len(powerful) == 1:
            expr = Dict(powerful[0])
        else:
            voter, substituted, opposed = chi_decompose(current)
            expr = Chi(voter, build(substituted), build(opposed))
        memo[current] = expr
        return expr

    return build(game)


# ============ QUOTA SPLITS ============

@dataclass(frozen=True)
class QuotaSplit:
    """Both halves are on the voters sorted by decreasing weight (sorted_input);
    order[k] is the original voter (1-based) at sorted position k+1"""
    substituted: QuotaGame
    opposed: QuotaGame
    order: tuple[int, ...]
    sorted_input: QuotaGame


def quota_split(quota_game: QuotaGame) -> QuotaSplit:
    """Substitution and opposition of the lightest voter by the heaviest,
    read off the weights"""
    n = quota_game.n_voters
    if n < 2:
        raise SingleVoterError("a quota split needs at least two voters")
    order = tuple(sorted(range(1, n + 1), key=lambda v: -quota_game.weights[v - 1]))
    weights = [quota_game.weights[v - 1] for v in order]
    heaviest, lightest, middle = weights[0], weights[-1], weights[1:-1]
    q = quota_game.quota
    substituted = QuotaGame((heaviest + lightest, *middle, 0), q)
    opposed = QuotaGame((heaviest - lightest, *middle, 0), max(0, q - lightest))
    return QuotaSplit(substituted, opposed, order, QuotaGame(tuple(weights), q))


def quota_basis(quota_game: QuotaGame) -> GameExpr:
    """Choice expression for an ipsodual quota game: the lightest powerful
    voter repeatedly chooses between following and opposing the heaviest"""
    game = compile_quota(quota_game)
    if not is_ipsodual(game):
        raise NotIpsodualError(f"{game} is not ipsodual")

    def build(current: Game, weights: tuple[int, ...], quota: int) -> GameExpr:
        powerful = sorted(powerful_voters(current))
        if len(powerful) == 1:
            return Dict(powerful[0])
        y = min(powerful, key=lambda v: (-weights[v - 1], v))
        x = min(powerful, key=lambda v: (weights[v - 1], -v))
        with_y = list(weights)
        with_y[y - 1] += weights[x - 1]
        with_y[x - 1] = 0
        against_y = list(weights)
        against_y[y - 1] -= weights[x - 1]
        against_y[x - 1] = 0
        return Chi(
            x,
            build(substitute(current, x, y), tuple(with_y), quota),
            build(oppose(current, x, y), tuple(against_y), max(0, quota - weights[x - 1])),
        )

    expr = build(game, quota_game.weights, quota_game.quota)
    if not verify_expr(expr, game):
        raise DecompositionError(f"quota basis does not reproduce {game}")
    return expr


# ============ DISJUNCTIVE FORM ============

def dnf_expression(game: Game) -> GameExpr:
    """Or over the minimal winning coalitions, each an And of dictatorships"""
    if game.mask == 0:
        return Hat0()
    terms = [
        And(tuple(Dict(v) for v in sorted(coalition_voters(index))))
        for index in min_winning_indices(game)
    ]
    expr = terms[-1]
    for term in reversed(terms[:-1]):
        expr = Or(term, expr)
    return expr


# ============ GAME TREES ============

def realize_game_tree(game: Game) -> GameTree:
    """Elimination game: in increasing order, each voter keeps one of the
    remaining minimal winning coalitions containing it"""
    if not is_ipsodual(game):
        raise NotIpsodualError(f"{game} is not ipsodual")
    n = game.n_voters
    coalitions = tuple(min_winning_indices(game))
    memo: dict[tuple[tuple[int, ...], int], GameTree] = {}

    def play(remaining: tuple[int, ...], player: int) -> GameTree:
        key = (remaining, player)
        if key in memo:
            return memo[key]
        if len(remaining) == 1 or player > n:
            # ipsodual coalitions pairwise intersect, so one survives
            tree = GameTree(min(coalition_voters(remaining[0])))
        else:
            bit = 1 << (player - 1)
            mine = [c for c in remaining if c & bit]
            if len(mine) < 2:
                tree = play(remaining, player + 1)
            else:
                others = tuple(c for c in remaining if not c & bit)
                children = [play(tuple(sorted(others + (kept,))), player + 1) for kept in mine]
                tree = fold_choice(player, children)
        memo[key] = tree
        return tree

    tree = play(coalitions, 1)
    logger.debug(f"game tree for {game}: height {tree.height()}, {len(memo)} states")
    return tree
