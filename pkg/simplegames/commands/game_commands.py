"""
Commands on single games: classify, dual, median, chi, compound, quotient,
canonical, influence, is-quota, tree
"""
import argparse
import logging

from simplegames.commands.output import CommandContext, describe, game_record
from simplegames.models.game import VoterMap
from simplegames.models.tree import parse_tree
from simplegames.schemas.game_schema import ClassificationRecord, InfluenceRecord, QuotaGameRecord, QuotaRecord
from simplegames.services.algebra import (
    chi,
    comparable_pairs,
    compound,
    format_influence,
    influence_classes,
    median,
    quotient,
    win_type,
)
from simplegames.services.catalog import resolve
from simplegames.services.game_core import classify, dual, format_quota
from simplegames.services.permutation_service import canonical_form
from simplegames.services.quota_recognition import is_quota_game

logger = logging.getLogger(__name__)


def run_classify(args: argparse.Namespace, context: CommandContext) -> int:
    game = resolve(args.game)
    result = classify(game)
    record = ClassificationRecord(
        game=game_record(game),
        simple=result.is_simple,
        strong=result.is_strong,
        ipsodual=result.is_ipsodual,
        powerful=sorted(result.powerful),
        dummies=sorted(result.dummies),
    )
    kind = "ipsodual" if result.is_ipsodual else "simple" if result.is_simple else "strong" if result.is_strong else "neither"
    text = f"{record.game.text}: {kind}; powerful {record.powerful}; dummies {record.dummies}"
    context.output.emit(record, text)
    return 0


def _emit_game(context: CommandContext, game) -> int:
    record = game_record(game)
    context.output.emit(record, record.text)
    return 0


def run_dual(args: argparse.Namespace, context: CommandContext) -> int:
    return _emit_game(context, dual(resolve(args.game)))


def run_median(args: argparse.Namespace, context: CommandContext) -> int:
    first, second, third = (resolve(spec) for spec in args.games)
    return _emit_game(context, median(first, second, third))


def run_chi(args: argparse.Namespace, context: CommandContext) -> int:
    first, second = (resolve(spec) for spec in args.games)
    return _emit_game(context, chi(args.by, first, second))


def run_compound(args: argparse.Namespace, context: CommandContext) -> int:
    outer = resolve(args.outer)
    inner = [resolve(spec) for spec in args.inner]
    return _emit_game(context, compound(outer, inner))


def run_quotient(args: argparse.Namespace, context: CommandContext) -> int:
    game = resolve(args.game)
    voter_map = VoterMap.from_pairs(args.map, game.n_voters, args.voters)
    logger.debug(f"quotient of {game} by {voter_map}")
    return _emit_game(context, quotient(game, voter_map))


def run_canonical(args: argparse.Namespace, context: CommandContext) -> int:
    return _emit_game(context, canonical_form(resolve(args.game)))


def run_influence(args: argparse.Namespace, context: CommandContext) -> int:
    game = resolve(args.game)
    classes, total = influence_classes(game)
    pairs = comparable_pairs(game)
    record = InfluenceRecord(
        game=game_record(game),
        total=total,
        order=format_influence(classes),
        classes=[list(c) for c in classes],
        comparable=[[i, j] for i, j, _ in pairs],
    )
    text = record.order if total else f"{record.order} (not total)"
    context.output.emit(record, text)
    return 0


def run_is_quota(args: argparse.Namespace, context: CommandContext) -> int:
    game = resolve(args.game)
    witness = is_quota_game(game)
    if witness is None:
        record = QuotaRecord(
            game=game_record(game),
            is_quota=False,
            note="separation program infeasible: no weights split winning from losing coalitions",
        )
        context.output.emit(record, f"no ({record.note})")
    else:
        record = QuotaRecord(
            game=game_record(game),
            is_quota=True,
            witness=QuotaGameRecord(weights=list(witness.weights), quota=witness.quota),
        )
        context.output.emit(record, f"yes {format_quota(witness)}")
    return 0


def run_tree(args: argparse.Namespace, context: CommandContext) -> int:
    tree = parse_tree(args.tree)
    n = args.voters or max(tree.labels())
    game = win_type(tree, n)
    logger.info(f"tree of height {tree.height()} on {n} voters gives {describe(game)}")
    return _emit_game(context, game)


def register(subparsers) -> None:
    parser = subparsers.add_parser("classify", help="Simple / strong / ipsodual and dummy voters")
    parser.add_argument("game", help="Game spec")
    parser.set_defaults(handler=run_classify)

    parser = subparsers.add_parser("dual", help="Blocking dual of a game")
    parser.add_argument("game", help="Game spec")
    parser.set_defaults(handler=run_dual)

    parser = subparsers.add_parser("median", help="Median of three games")
    parser.add_argument("games", nargs=3, metavar="game", help="Game spec")
    parser.set_defaults(handler=run_median)

    parser = subparsers.add_parser("chi", help="Choice by one voter between two games")
    parser.add_argument("--by", type=int, required=True, help="Choosing voter (1-based)")
    parser.add_argument("games", nargs=2, metavar="game", help="Game spec")
    parser.set_defaults(handler=run_chi)

    parser = subparsers.add_parser("compound", help="Outer game applied to inner games")
    parser.add_argument("outer", help="Outer game spec")
    parser.add_argument("inner", nargs="+", help="One inner game spec per outer voter")
    parser.set_defaults(handler=run_compound)

    parser = subparsers.add_parser("quotient", help="Quotient by a voter map")
    parser.add_argument("game", help="Game spec")
    parser.add_argument("--map", required=True, help="Office:voter pairs, e.g. 1:2,3:1")
    parser.add_argument("--voters", type=int, default=None, help="Voters of the quotient (default: inferred)")
    parser.set_defaults(handler=run_quotient)

    parser = subparsers.add_parser("canonical", help="Canonical representative of the isomorphism class")
    parser.add_argument("game", help="Game spec")
    parser.set_defaults(handler=run_canonical)

    parser = subparsers.add_parser("influence", help="Influence pre-order")
    parser.add_argument("game", help="Game spec")
    parser.set_defaults(handler=run_influence)

    parser = subparsers.add_parser("is-quota", help="Quota recognition by exact linear programming")
    parser.add_argument("game", help="Game spec")
    parser.set_defaults(handler=run_is_quota)

    parser = subparsers.add_parser("tree", help="Win type of a game tree such as 1(2,3)")
    parser.add_argument("tree", help="Tree text")
    parser.add_argument("--voters", type=int, default=None, help="Number of voters (default: largest label)")
    parser.set_defaults(handler=run_tree)
