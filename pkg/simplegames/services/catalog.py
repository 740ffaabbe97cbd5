"""
Named games and the embedded classification table

Games: Dem_3^d, the binary-tree games B_k, the Fano plane, the icosahedral
game and S_{6,21}..S_{6,30} (defined by their table median decompositions).
`resolve` turns any command-line game spec into a Game.
"""
import logging
import re
from functools import lru_cache
from pathlib import Path

from pydantic import TypeAdapter

from simplegames.errors import BadIndexError, ParseError, TooLargeError
from simplegames.models.game import Game, QuotaGame
from simplegames.models.tree import GameTree
from simplegames.schemas.table_schema import Table1Row
from simplegames.services.algebra import chi, compound, embed, win_type
from simplegames.services.decomposition import evaluate
from simplegames.services.expr_parser import expression_voters, is_concrete, name_of, parse_expression
from simplegames.services.game_core import (
    compile_quota,
    dictatorship,
    from_hex,
    parse_quota,
    upward_closure,
)

logger = logging.getLogger(__name__)

TABLE_PATH = Path(__file__).resolve().parent.parent / "data" / "table1.json"

DEM3 = compile_quota(parse_quota("(111)_2"))

FANO_LINES = (
    (1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6),
)

# vertices: 0 top, 1..5 upper ring, 6 bottom, v+6 antipodal to v
ICOSAHEDRON_FACES = (
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
    (6, 7, 8), (6, 8, 9), (6, 9, 10), (6, 10, 11), (6, 11, 7),
    (1, 2, 10), (2, 3, 11), (3, 4, 7), (4, 5, 8), (5, 1, 9),
    (7, 8, 4), (8, 9, 5), (9, 10, 1), (10, 11, 2), (11, 7, 3),
)

S6_INDICES = range(21, 31)

_HEX_SPEC = re.compile(r"^\s*(\d+)\s*:\s*([0-9A-Fa-f]+)\s*$")
_NAME = re.compile(r"^(s6\.|dem3\^|b_)(\d+)$")


# ============ TABLE DATA ============

@lru_cache(maxsize=None)
def table_rows() -> tuple[Table1Row, ...]:
    rows = TypeAdapter(list[Table1Row]).validate_json(TABLE_PATH.read_bytes())
    logger.debug(f"loaded {len(rows)} table rows from {TABLE_PATH.name}")
    return tuple(rows)


# ============ NAMED GAMES ============

@lru_cache(maxsize=None)
def dem3_power(d: int) -> Game:
    """Dem_3^0 = Dict_1, Dem_3^(d+1) = Dem_3[Dem_3^d, Dem_3^d, Dem_3^d]"""
    if d < 0:
        raise BadIndexError(f"power {d} must be non-negative")
    if d > 2:
        raise TooLargeError(f"Dem_3^{d} has {3 ** d} voters, at most 9 are supported")
    if d == 0:
        return dictatorship(1, 1)
    inner = dem3_power(d - 1)
    block = inner.n_voters
    return compound(DEM3, [embed(inner, 3 * block, k * block) for k in range(3)])


@lru_cache(maxsize=None)
def bk_game(k: int) -> Game:
    """Win type of the complete binary tree of height k, heap-numbered"""
    if k < 0:
        raise BadIndexError(f"height {k} must be non-negative")
    if k > 2:
        raise TooLargeError(f"B_{k} has {2 ** (k + 1) - 1} voters, at most 7 are supported")
    n = 2 ** (k + 1) - 1

    def node(i: int) -> GameTree:
        if 2 * i > n:
            return GameTree(i)
        return GameTree(i, (node(2 * i), node(2 * i + 1)))

    return win_type(node(1), n)


@lru_cache(maxsize=None)
def fano_game() -> Game:
    """A coalition wins iff it contains a line of the Fano plane"""
    return upward_closure(7, FANO_LINES)


@lru_cache(maxsize=None)
def icosahedral_game() -> Game:
    """A coalition wins iff it holds a face; voter v owns vertices v and v+6"""
    triples = {frozenset(v % 6 + 1 for v in face) for face in ICOSAHEDRON_FACES}
    return upward_closure(6, triples)


# chi_1((221110)_4,(010112)_3) as printed has weight 2; with the operands
# placed like this it is the Fano game with two points merged, so that
# m(S_{6,22},S'_{6,22},S''_{6,22}) can give Fano
S6_22_OPERANDS = (QuotaGame((0, 1, 1, 2, 1, 2), 4), QuotaGame((1, 2, 1, 0, 1, 0), 3))


@lru_cache(maxsize=None)
def s6(k: int) -> Game:
    if k not in S6_INDICES:
        raise BadIndexError(f"S_(6,{k}) is not in the table; indices run 21..30")
    if k == 22:
        first, second = (compile_quota(operand) for operand in S6_22_OPERANDS)
        return chi(1, first, second)
    label = f"S_{{6,{k}}}"
    row = next(r for r in table_rows() if r.label is not None and r.label.endswith(label))
    return evaluate(parse_expression(row.median_expr, named), row.n)


def named(name: str) -> Game:
    """Lookup by catalog name: dem3^d, b_k, fano, icosa, s6.k"""
    key = name.strip().lower()
    if key == "fano":
        return fano_game()
    if key == "icosa":
        return icosahedral_game()
    match = _NAME.match(key)
    if match is None:
        raise ParseError(f"unknown game name '{name}'")
    family, index = match.group(1), int(match.group(2))
    if family == "s6.":
        return s6(index)
    if family == "dem3^":
        return dem3_power(index)
    return bk_game(index)


def names() -> list[str]:
    return ["dem3^0", "dem3^1", "dem3^2", "b_0", "b_1", "b_2", "fano", "icosa"] + [
        f"s6.{k}" for k in S6_INDICES
    ]


# ============ GAME SPECS ============

def resolve(spec: str) -> Game:
    """Game for a quota string, `n:HEX`, a catalog name or an expression"""
    text = spec.strip()
    if not text:
        raise ParseError("empty game spec")
    match = _HEX_SPEC.match(text)
    if match:
        return from_hex(int(match.group(1)), match.group(2))
    try:
        return compile_quota(parse_quota(text))
    except ParseError:
        pass
    found = name_of(text)
    if found is not None:
        name, primes = found
        if primes:
            raise ParseError(f"'{text}' names an unspecified relabeling, not a game")
        return named(name)
    expr = parse_expression(text, named)
    if not is_concrete(expr):
        raise ParseError(f"'{text}' leaves a relabeling or a dictator open, so it names no single game")
    return evaluate(expr, expression_voters(expr))
