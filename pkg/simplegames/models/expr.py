"""
Expression trees over games, printed in the notation of the classification
table: `m(a,b,c)`, `chi_a(x,y)`, quota leaves such as `(2111)_3`
"""
from dataclasses import dataclass
from typing import Union

from simplegames.models.game import Game


@dataclass(frozen=True, slots=True)
class Dict:
    voter: int

    def __str__(self) -> str:
        return f"Dict_{self.voter}"


@dataclass(frozen=True, slots=True)
class Hat0:
    def __str__(self) -> str:
        return "Hat0"


@dataclass(frozen=True, slots=True)
class Hat1:
    def __str__(self) -> str:
        return "Hat1"


@dataclass(frozen=True, slots=True)
class GameLeaf:
    """A concrete game; `text` is how it was written (quota string or name)"""
    game: Game
    text: str

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True, slots=True)
class Primed:
    """Some relabeling of `base`, not fixed by the notation (S', S'', ...)"""
    base: Game
    name: str
    primes: int

    def __str__(self) -> str:
        return self.name + "'" * self.primes


@dataclass(frozen=True, slots=True)
class Median:
    first: "GameExpr"
    second: "GameExpr"
    third: "GameExpr"

    def __str__(self) -> str:
        return f"m({self.first},{self.second},{self.third})"


@dataclass(frozen=True, slots=True)
class PairMedian:
    """m(S,T) with the third argument a dictatorship left open"""
    first: "GameExpr"
    second: "GameExpr"

    def __str__(self) -> str:
        return f"m({self.first},{self.second})"


@dataclass(frozen=True, slots=True)
class Chi:
    voter: int
    first: "GameExpr"
    second: "GameExpr"

    def __str__(self) -> str:
        return f"chi_{self.voter}({self.first},{self.second})"


@dataclass(frozen=True, slots=True)
class Compound:
    outer: Game
    inner: tuple["GameExpr", ...]

    def __str__(self) -> str:
        return f"compound({self.outer};" + ",".join(str(e) for e in self.inner) + ")"


@dataclass(frozen=True, slots=True)
class And:
    terms: tuple["GameExpr", ...]

    def __str__(self) -> str:
        return "and(" + ",".join(str(t) for t in self.terms) + ")"


@dataclass(frozen=True, slots=True)
class Or:
    first: "GameExpr"
    second: "GameExpr"

    def __str__(self) -> str:
        return f"or({self.first},{self.second})"


GameExpr = Union[Dict, Hat0, Hat1, GameLeaf, Primed, Median, PairMedian, Chi, Compound, And, Or]


def children(expr: GameExpr) -> tuple[GameExpr, ...]:
    if isinstance(expr, Median):
        return (expr.first, expr.second, expr.third)
    if isinstance(expr, (PairMedian, Chi, Or)):
        return (expr.first, expr.second)
    if isinstance(expr, Compound):
        return expr.inner
    if isinstance(expr, And):
        return expr.terms
    return ()


def leaves(expr: GameExpr) -> list[GameExpr]:
    found = []
    stack = [expr]
    while stack:
        node = stack.pop()
        below = children(node)
        if below:
            stack.extend(reversed(below))
        else:
            found.append(node)
    return found


def expr_height(expr: GameExpr) -> int:
    below = children(expr)
    return 0 if not below else 1 + max(expr_height(e) for e in below)


def format_expr(expr: GameExpr) -> str:
    return str(expr)
