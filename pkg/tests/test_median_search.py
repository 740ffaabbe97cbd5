"""
Tests for the inverse median search
"""
import pytest

from simplegames.errors import BudgetExceededError, MismatchedVoterCountError
from simplegames.services.algebra import median
from simplegames.services.game_core import dictatorship
from simplegames.services.mask_rows import ints_to_rows
from simplegames.services.median_search import find_median_triple, inverse_median_search
from tests.conftest import quota


def test_majority_from_dictators(dem3, dictators3):
    triple = inverse_median_search(dem3, dictators3)
    assert triple is not None
    assert median(*triple) == dem3


def test_no_triple_in_pool():
    pool = [dictatorship(4, v) for v in range(1, 5)]
    assert inverse_median_search(quota("(2111)_3"), pool) is None


def test_pool_must_match_voters(dem3):
    with pytest.raises(MismatchedVoterCountError):
        inverse_median_search(dem3, [dictatorship(4, 1)])


def test_several_targets(dem3, dictators3):
    pool = ints_to_rows([g.mask for g in dictators3], 3)
    targets = ints_to_rows([dictators3[0].mask, dem3.mask], 3)
    t, i, j, k = find_median_triple(targets, pool, pool, pool)
    assert t == 0
    assert dictators3[0] == median(dictators3[i], dictators3[j], dictators3[k])


def test_pair_budget(dem3, dictators3):
    pool = ints_to_rows([g.mask for g in dictators3], 3)
    target = ints_to_rows([dem3.mask], 3)
    with pytest.raises(BudgetExceededError):
        find_median_triple(target, pool, pool, pool, budget=2)
