"""
Tests for quota recognition
"""
from fractions import Fraction

import pytest

from simplegames.errors import TooLargeError
from simplegames.models.game import QuotaGame
from simplegames.services.catalog import dem3_power, fano_game, icosahedral_game, s6, table_rows
from simplegames.services.game_core import compile_quota, format_quota
from simplegames.services.quota_recognition import ExactSimplex, is_quota_game
from tests.conftest import quota


def test_majority_gets_smallest_weights(dem3):
    witness = is_quota_game(dem3)
    assert witness == QuotaGame((1, 1, 1), 2)
    assert format_quota(witness) == "(111)_2"


@pytest.mark.parametrize("game", [s6(23), icosahedral_game(), fano_game()], ids=["s6.23", "icosa", "fano"])
def test_non_quota_games(game):
    assert is_quota_game(game) is None


def test_table_quota_labels_are_recognized():
    labels = [row.label for row in table_rows() if row.label and row.label.startswith("(")]
    assert len(labels) == 21
    for label in labels:
        game = quota(label)
        witness = is_quota_game(game)
        assert witness is not None, label
        assert compile_quota(witness) == game


def test_witness_without_reduction_still_compiles():
    game = quota("(422)_5")
    witness = is_quota_game(game, reduce=False)
    assert compile_quota(witness) == game


def test_recognition_cap():
    with pytest.raises(TooLargeError):
        is_quota_game(dem3_power(2))


def test_simplex_optimum():
    # minimize x + y with x + y >= 2, x <= 3
    solution = ExactSimplex([[-1, -1], [1, 0]], [-2, 3], [1, 1]).solve()
    assert solution is not None
    assert sum(solution) == Fraction(2)
    assert all(value >= 0 for value in solution)


def test_simplex_infeasible():
    assert ExactSimplex([[1]], [-1], [1]).solve() is None
