"""
Quota recognition by exact linear programming

A game is a quota game iff some weights w >= 0 and quota q >= 0 satisfy
    sum_A w >= q        for every minimal winning A
    sum_B w <= q - 1    for every maximal losing B
The separation gap is normalized to 1. Feasibility is decided with a
two-phase tableau simplex over Fractions (Bland's rule, so it terminates).
"""
import logging
from fractions import Fraction
from math import gcd, lcm
from typing import Optional

from config.settings import settings
from simplegames.errors import GameError, TooLargeError
from simplegames.models.game import Game, QuotaGame
from simplegames.services.game_core import compile_quota, max_losing_indices, min_winning_indices

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


class ExactSimplex:
    """Minimize c.x subject to A x <= b, x >= 0, in exact arithmetic"""

    def __init__(self, rows: list[list[int]], rhs: list[int], cost: list[int]):
        self.n_vars = len(cost)
        self.cost = [Fraction(c) for c in cost]
        self.tableau: list[list[Fraction]] = []
        self.rhs: list[Fraction] = []
        self.basis: list[int] = []
        self.artificial: set[int] = set()

        m = len(rows)
        n_artificial = sum(1 for b in rhs if b < 0)
        width = self.n_vars + m + n_artificial
        next_artificial = self.n_vars + m
        for i, (row, b) in enumerate(zip(rows, rhs)):
            line = [ZERO] * width
            sign = -1 if b < 0 else 1
            for j, a in enumerate(row):
                line[j] = Fraction(sign * a)
            line[self.n_vars + i] = Fraction(sign)
            if b < 0:
                line[next_artificial] = ONE
                self.basis.append(next_artificial)
                self.artificial.add(next_artificial)
                next_artificial += 1
            else:
                self.basis.append(self.n_vars + i)
            self.tableau.append(line)
            self.rhs.append(Fraction(sign * b))
        self.width = width

    def _pivot(self, row: int, column: int) -> None:
        pivot_line = self.tableau[row]
        factor = pivot_line[column]
        self.tableau[row] = [a / factor for a in pivot_line]
        self.rhs[row] /= factor
        pivot_line = self.tableau[row]
        for i, line in enumerate(self.tableau):
            if i != row and line[column] != 0:
                scale = line[column]
                self.tableau[i] = [a - scale * p for a, p in zip(line, pivot_line)]
                self.rhs[i] -= scale * self.rhs[row]
        self.basis[row] = column

    def _optimize(self, cost: list[Fraction], allowed: list[int]) -> None:
        while True:
            entering = None
            for j in allowed:
                reduced = cost[j] - sum(cost[b] * line[j] for b, line in zip(self.basis, self.tableau))
                if reduced < 0:
                    entering = j
                    break
            if entering is None:
                return
            best = None
            for i, line in enumerate(self.tableau):
                if line[entering] > 0:
                    ratio = self.rhs[i] / line[entering]
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                # cost is bounded below for every use in this module
                raise GameError("unbounded linear program")
            self._pivot(best[1], entering)

    def solve(self) -> Optional[list[Fraction]]:
        """Optimal x, or None when infeasible"""
        if self.artificial:
            phase_one = [ONE if j in self.artificial else ZERO for j in range(self.width)]
            self._optimize(phase_one, list(range(self.width)))
            infeasibility = sum(self.rhs[i] for i, b in enumerate(self.basis) if b in self.artificial)
            if infeasibility > 0:
                return None
            self._drive_out_artificials()

        cost = self.cost + [ZERO] * (self.width - self.n_vars)
        self._optimize(cost, [j for j in range(self.width) if j not in self.artificial])
        solution = [ZERO] * self.n_vars
        for i, b in enumerate(self.basis):
            if b < self.n_vars:
                solution[b] = self.rhs[i]
        return solution

    def _drive_out_artificials(self) -> None:
        i = 0
        while i < len(self.basis):
            if self.basis[i] in self.artificial:
                column = next(
                    (j for j in range(self.width)
                     if j not in self.artificial and self.tableau[i][j] != 0),
                    None,
                )
                if column is None:
                    # redundant constraint
                    del self.tableau[i], self.rhs[i], self.basis[i]
                    continue
                self._pivot(i, column)
            i += 1


def separation_program(game: Game) -> ExactSimplex:
    """Variables w_1..w_n, q; minimize the total weight plus quota"""
    n = game.n_voters
    rows, rhs = [], []
    for index in min_winning_indices(game):
        rows.append([-(index >> j & 1) for j in range(n)] + [1])
        rhs.append(0)
    for index in max_losing_indices(game):
        rows.append([index >> j & 1 for j in range(n)] + [-1])
        rhs.append(-1)
    return ExactSimplex(rows, rhs, [1] * (n + 1))


def is_quota_game(game: Game, reduce: bool = True) -> Optional[QuotaGame]:
    """Integer weights and quota compiling to the game, or None"""
    n = game.n_voters
    if n > settings.MAX_QUOTA_VOTERS:
        raise TooLargeError(f"{n} voters exceeds the quota recognition cap {settings.MAX_QUOTA_VOTERS}")
    solution = separation_program(game).solve()
    if solution is None:
        logger.debug(f"{game}: separation program infeasible")
        return None

    scale = lcm(*(value.denominator for value in solution))
    integers = [int(value * scale) for value in solution]
    if reduce:
        common = gcd(*integers)
        if common > 1:
            integers = [value // common for value in integers]
    witness = QuotaGame(tuple(integers[:n]), integers[n])
    if compile_quota(witness) != game:
        raise GameError(f"quota witness {witness} does not reproduce {game}")
    return witness
