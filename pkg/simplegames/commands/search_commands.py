"""
Search commands: weight, depth, enumerate, wtable, closure, census
"""
import argparse
import logging

from simplegames.commands.output import CommandContext, game_record
from simplegames.errors import UnresolvedError
from simplegames.models.game import Game
from simplegames.schemas.census_schema import (
    CensusRecord,
    EnumerationRecord,
    LayerRecord,
    TableRecord,
)
from simplegames.schemas.game_schema import MeasureRecord
from simplegames.services.catalog import resolve
from simplegames.services.game_core import format_quota
from simplegames.services.permutation_service import canonical_form, has_transitive_automorphism_group
from simplegames.services.quota_recognition import is_quota_game
from simplegames.services.search_engine import CHI, MEDIAN, OPERATIONS, SearchEngine

logger = logging.getLogger(__name__)


def _measure(args: argparse.Namespace, context: CommandContext, measure: str) -> int:
    game = resolve(args.game)
    engine = context.engine
    try:
        value = engine.weight(game) if measure == "weight" else engine.depth(game)
        exact = True
    except UnresolvedError as e:
        value, exact = e.lower_bound, False
    record = MeasureRecord(game=game_record(game), measure=measure, value=value, exact=exact)
    text = str(value) if exact else f">= {value} (lower bound; exact value out of search range)"
    context.output.emit(record, text)
    return 0


def run_weight(args: argparse.Namespace, context: CommandContext) -> int:
    return _measure(args, context, "weight")


def run_depth(args: argparse.Namespace, context: CommandContext) -> int:
    return _measure(args, context, "depth")


def run_enumerate(args: argparse.Namespace, context: CommandContext) -> int:
    games = context.engine.enumerate_ipsodual(args.voters)
    if args.iso:
        games = sorted({canonical_form(game) for game in games})
    record = EnumerationRecord(
        voters=args.voters,
        count=len(games),
        iso=args.iso,
        games=[game.to_hex() for game in games],
    )
    context.output.emit(record, "\n".join([str(record.count)] + record.games))
    return 0


def run_wtable(args: argparse.Namespace, context: CommandContext) -> int:
    engine = context.engine
    values = engine.D_table(args.max) if args.depth else engine.W_table(args.max)
    record = TableRecord(measure="depth" if args.depth else "weight", values=values)
    context.output.emit(record, ",".join(str(v) for v in values))
    return 0


def run_closure(args: argparse.Namespace, context: CommandContext) -> int:
    universe = context.engine.closure(args.voters, args.op, args.max_layer)
    layers = universe.layer_sizes()
    record = LayerRecord(voters=args.voters, operation=args.op, layers=layers, total=sum(layers))
    text = "\n".join(f"layer {k}: {size}" for k, size in enumerate(layers)) + f"\ntotal: {record.total}"
    context.output.emit(record, text)
    return 0


def census_record(engine: SearchEngine, game: Game, p: int) -> CensusRecord:
    quota = is_quota_game(game)
    return CensusRecord(
        n=p,
        mask_hex=game.to_hex(),
        weight=engine.weight(game),
        depth=engine.depth(game),
        quota=None if quota is None else format_quota(quota),
        transitive=has_transitive_automorphism_group(game),
        canonical=canonical_form(game) == game,
    )


def run_census(args: argparse.Namespace, context: CommandContext) -> int:
    """Text summary, or one CensusRecord per class as JSON lines"""
    engine = context.engine
    census = engine.iso_census(args.powerful_max)
    per_n = [len(census[p]) for p in range(1, args.powerful_max + 1)]
    classes = []
    if args.details or context.output.as_json:
        classes = [census_record(engine, game, p) for p in census for game in census[p]]
    lines = [f"{sum(per_n)} classes; per n: {','.join(str(c) for c in per_n)}"]
    if args.details:
        for entry in classes:
            quota = entry.quota or "-"
            lines.append(f"n={entry.n} {entry.mask_hex} w={entry.weight} d={entry.depth} quota={quota}"
                         + (" transitive" if entry.transitive else ""))
    context.output.lines(classes, "\n".join(lines))
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("weight", help="Median weight of an ipsodual game")
    parser.add_argument("game", help="Game spec")
    parser.set_defaults(handler=run_weight)

    parser = subparsers.add_parser("depth", help="Game-tree depth of an ipsodual game")
    parser.add_argument("game", help="Game spec")
    parser.set_defaults(handler=run_depth)

    parser = subparsers.add_parser("enumerate", help="All ipsodual games on n voters")
    parser.add_argument("--voters", type=int, required=True, help="Number of voters")
    parser.add_argument("--iso", action="store_true", help="One canonical game per isomorphism class")
    parser.set_defaults(handler=run_enumerate)

    parser = subparsers.add_parser("wtable", help="W(n) (or D(n) with --depth) for n = 1..max")
    parser.add_argument("--max", type=int, required=True, help="Largest n")
    parser.add_argument("--depth", action="store_true", help="Depth table instead of weight")
    parser.set_defaults(handler=run_wtable)

    parser = subparsers.add_parser("closure", help="Layer sizes of the median or choice closure")
    parser.add_argument("--voters", type=int, required=True, help="Number of voters")
    parser.add_argument("--op", choices=OPERATIONS, default=MEDIAN, help=f"{MEDIAN} or {CHI}")
    parser.add_argument("--max-layer", type=int, default=None, help="Stop after this layer")
    parser.set_defaults(handler=run_closure)

    parser = subparsers.add_parser("census", help="Isomorphism classes by number of powerful voters")
    parser.add_argument("--powerful-max", type=int, required=True, help="Largest number of powerful voters")
    parser.add_argument("--details", action="store_true", help="Weight, depth, quota and symmetry per class")
    parser.set_defaults(handler=run_census)
