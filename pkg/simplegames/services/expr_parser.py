"""
Parser for game expressions in classification-table notation

    expr   := m(expr,expr,expr) | m(expr,expr) | chi_a(expr,expr)
            | and(expr,...) | or(expr,...) | leaf
    leaf   := (2111)_3 | (12,1,1)_{13} | Dict_i | Hat0 | Hat1 | name
    name   := S_{6,22} | S'_{6,22} | B_2 | B'_2 | Fano | I | Dem_3^2
            | s6.22 | b_2 | fano | icosa | dem3^2

Primes mark an unspecified relabeling of the named game.
"""
import re
from typing import Callable, Optional

from simplegames.errors import ParseError
from simplegames.models.expr import (
    And,
    Chi,
    Dict,
    GameExpr,
    GameLeaf,
    Hat0,
    Hat1,
    Median,
    Or,
    PairMedian,
    Primed,
    children,
)
from simplegames.models.game import Game
from simplegames.services.game_core import compile_quota, parse_quota

# name lookup: canonical catalog name -> game
Lookup = Callable[[str], Game]

_TOKEN = re.compile(
    r"""
    (?P<quota>\(\s*\d+(?:\s*,\s*\d+)*\s*\)\s*_\s*(?:\{\s*\d+\s*\}|\d+))
  | (?P<chi>(?:chi|χ)_\{?(?P<mover>\d+)\}?\s*\()
  | (?P<func>(?:m|and|or)\s*\()
  | (?P<dict>Dict_\{?(?P<voter>\d+)\}?)
  | (?P<hat>Hat[01]|ĥ[01])
  | (?P<s6>S(?P<s6_primes>'*)_\{\s*6\s*,\s*(?P<s6_index>\d+)\s*\})
  | (?P<bk>[Bb](?P<bk_primes>'*)_\{?(?P<bk_index>\d+)\}?)
  | (?P<dem>Dem_?3\^\{?(?P<dem_power>\d+)\}?)
  | (?P<short>s6\.(?P<short_index>\d+))
  | (?P<word>(?:fano|icosa|I)(?P<word_primes>'*))
  | (?P<punct>[(),])
    """,
    re.VERBOSE | re.IGNORECASE,
)


def _tokens(text: str) -> list[tuple[str, re.Match]]:
    found = []
    position = 0
    while position < len(text):
        if text[position].isspace():
            position += 1
            continue
        match = _TOKEN.match(text, position)
        if match is None:
            raise ParseError(f"unexpected '{text[position:position + 12]}' at position {position}")
        found.append((_kind(match), match))
        position = match.end()
    return found


def _kind(match: re.Match) -> str:
    for kind in ("quota", "chi", "func", "dict", "hat", "s6", "bk", "dem", "short", "word", "punct"):
        if match.group(kind) is not None:
            return kind
    raise ParseError(f"unrecognized token '{match.group(0)}'")


def canonical_name(kind: str, match: re.Match) -> tuple[str, int]:
    """(catalog name, number of primes) for a name token"""
    if kind == "s6":
        return f"s6.{int(match.group('s6_index'))}", len(match.group("s6_primes"))
    if kind == "bk":
        return f"b_{int(match.group('bk_index'))}", len(match.group("bk_primes"))
    if kind == "dem":
        return f"dem3^{int(match.group('dem_power'))}", 0
    if kind == "short":
        return f"s6.{int(match.group('short_index'))}", 0
    word = match.group("word")
    primes = len(match.group("word_primes"))
    base = word[: len(word) - primes].lower()
    return ("icosa" if base in ("i", "icosa") else "fano"), primes


class ExpressionParser:
    """Recursive descent over the token list"""

    def __init__(self, text: str, lookup: Lookup):
        self.text = text
        self.lookup = lookup
        self.tokens = _tokens(text)
        self.position = 0

    def parse(self) -> GameExpr:
        expr = self._expr()
        if self.position != len(self.tokens):
            raise ParseError(f"trailing input after expression in '{self.text}'")
        return expr

    def _next(self) -> tuple[str, re.Match]:
        if self.position >= len(self.tokens):
            raise ParseError(f"expression '{self.text}' ends early")
        token = self.tokens[self.position]
        self.position += 1
        return token

    def _arguments(self) -> list[GameExpr]:
        """Comma-separated expressions up to the closing parenthesis"""
        args = [self._expr()]
        while True:
            kind, match = self._next()
            symbol = match.group(0)
            if kind == "punct" and symbol == ",":
                args.append(self._expr())
            elif kind == "punct" and symbol == ")":
                return args
            else:
                raise ParseError(f"expected ',' or ')' in '{self.text}', found '{symbol}'")

    def _expr(self) -> GameExpr:
        kind, match = self._next()
        text = match.group(0)
        if kind == "quota":
            return GameLeaf(compile_quota(parse_quota(text)), "".join(text.split()))
        if kind == "dict":
            return Dict(int(match.group("voter")))
        if kind == "hat":
            return Hat0() if text.endswith("0") else Hat1()
        if kind == "chi":
            args = self._arguments()
            if len(args) != 2:
                raise ParseError(f"chi takes two games, got {len(args)}")
            return Chi(int(match.group("mover")), args[0], args[1])
        if kind == "func":
            name = text.rstrip("( ").lower()
            args = self._arguments()
            if name == "m":
                if len(args) == 3:
                    return Median(*args)
                if len(args) == 2:
                    return PairMedian(*args)
                raise ParseError(f"m takes two or three games, got {len(args)}")
            if name == "and":
                return And(tuple(args))
            expr = args[-1]
            for arg in reversed(args[:-1]):
                expr = Or(arg, expr)
            return expr
        if kind in ("s6", "bk", "dem", "short", "word"):
            name, primes = canonical_name(kind, match)
            game = self.lookup(name)
            if primes:
                return Primed(game, text[: text.index("'")] + text[text.rindex("'") + 1:], primes)
            return GameLeaf(game, text)
        raise ParseError(f"unexpected '{text}' in '{self.text}'")


def parse_expression(text: str, lookup: Lookup) -> GameExpr:
    return ExpressionParser(text, lookup).parse()


def expression_voters(expr: GameExpr) -> int:
    """Smallest voter count every leaf and mover fits into"""
    n = 1
    stack = [expr]
    while stack:
        node = stack.pop()
        if isinstance(node, (Dict, Chi)):
            n = max(n, node.voter)
        elif isinstance(node, GameLeaf):
            n = max(n, node.game.n_voters)
        elif isinstance(node, Primed):
            n = max(n, node.base.n_voters)
        stack.extend(children(node))
    return n


def name_of(text: str) -> Optional[tuple[str, int]]:
    """Catalog name of a whole-string name token, if it is one"""
    match = _TOKEN.fullmatch(text.strip())
    if match is None:
        return None
    kind = _kind(match)
    if kind not in ("s6", "bk", "dem", "short", "word"):
        return None
    return canonical_name(kind, match)


def is_concrete(expr: GameExpr) -> bool:
    """True when the expression denotes one game: no primes, no two-argument medians"""
    stack = [expr]
    while stack:
        node = stack.pop()
        if isinstance(node, (Primed, PairMedian)):
            return False
        stack.extend(children(node))
    return True
