"""
decompose: median, choice, quota, game-tree and disjunctive decompositions
"""
import argparse
import logging

from simplegames.commands.output import CommandContext, describe, game_record
from simplegames.errors import NotQuotaError, ParseError
from simplegames.models.expr import Chi, GameLeaf, Median, expr_height
from simplegames.models.game import QuotaGame
from simplegames.schemas.game_schema import ExpressionRecord
from simplegames.services.algebra import chi, win_type
from simplegames.services.catalog import resolve
from simplegames.services.decomposition import (
    chi_basis,
    chi_decompose,
    dnf_expression,
    full_median_basis,
    median_decompose_general,
    quota_basis,
    quota_split,
    realize_game_tree,
    verify_expr,
)
from simplegames.services.game_core import compile_quota, format_quota, parse_quota
from simplegames.services.quota_recognition import is_quota_game

logger = logging.getLogger(__name__)

METHODS = ("median", "chi", "quota", "tree", "dnf")


def _quota_form(spec: str, game) -> QuotaGame:
    """The weights as written, else a recognized witness"""
    try:
        return parse_quota(spec)
    except ParseError:
        pass
    witness = is_quota_game(game)
    if witness is None:
        raise NotQuotaError(f"{describe(game)} is not a quota game")
    return witness


def _leaf(game) -> GameLeaf:
    return GameLeaf(game, describe(game))


def run_decompose(args: argparse.Namespace, context: CommandContext) -> int:
    game = resolve(args.game)
    method = args.method

    if method == "tree":
        tree = realize_game_tree(game)
        record = ExpressionRecord(
            game=game_record(game),
            method=method,
            expression=str(tree),
            height=tree.height(),
            verified=win_type(tree, game.n_voters) == game,
        )
    elif method == "quota" and args.step:
        split = quota_split(_quota_form(args.game, game))
        n = split.sorted_input.n_voters
        expr = Chi(n, _leaf(compile_quota(split.substituted)), _leaf(compile_quota(split.opposed)))
        verified = chi(n, compile_quota(split.substituted), compile_quota(split.opposed)) == compile_quota(split.sorted_input)
        logger.info(f"sorted {format_quota(split.sorted_input)}, voter order {list(split.order)}")
        record = ExpressionRecord(
            game=game_record(compile_quota(split.sorted_input)),
            method=method,
            expression=str(expr),
            height=1,
            verified=verified,
        )
    else:
        if method == "median":
            expr = Median(*(_leaf(g) for g in median_decompose_general(game))) if args.step else full_median_basis(game)
        elif method == "chi":
            if args.step:
                voter, substituted, opposed = chi_decompose(game)
                expr = Chi(voter, _leaf(substituted), _leaf(opposed))
            else:
                expr = chi_basis(game)
        elif method == "quota":
            expr = quota_basis(_quota_form(args.game, game))
        else:
            expr = dnf_expression(game)
        record = ExpressionRecord(
            game=game_record(game),
            method=method,
            expression=str(expr),
            height=expr_height(expr),
            verified=verify_expr(expr, game),
        )

    text = record.expression if record.verified else f"{record.expression} (does not reproduce the game)"
    context.output.emit(record, text)
    return 0 if record.verified else 1


def register(subparsers) -> None:
    parser = subparsers.add_parser("decompose", help="Decompose a game into an expression or game tree")
    parser.add_argument("game", help="Game spec")
    parser.add_argument("--method", choices=METHODS, default="median", help="Decomposition method")
    parser.add_argument("--step", action="store_true", help="One decomposition step instead of a full basis")
    parser.set_defaults(handler=run_decompose)
