"""
Tests for median, choice, compound, quotients, influence and game trees
"""
import itertools
import random

import pytest

from simplegames.errors import (
    ArityMismatchError,
    LabelOutOfRangeError,
    MismatchedVoterCountError,
    NotMonotoneError,
    ParseError,
    SameVoterError,
)
from simplegames.models.game import Game, QuotaGame, VoterMap
from simplegames.models.tree import GameTree, parse_tree
from simplegames.services.algebra import (
    chi,
    comparable_pairs,
    compound,
    embed,
    format_influence,
    influence_classes,
    influence_geq,
    median,
    oppose,
    quotient,
    substitute,
    win_type,
)
from simplegames.services.catalog import icosahedral_game, s6
from simplegames.services.game_core import (
    classify,
    compile_quota,
    dictatorship,
    dual,
    dummy_voters,
    is_ipsodual,
    upward_closure,
)
from simplegames.services.search_engine import enumerate_ipsodual, monotone_functions
from tests.conftest import quota


def test_median_of_three_dictators_is_majority(dem3, dictators3):
    assert median(*dictators3) == dem3


def test_median_requires_equal_voter_counts(dictators3):
    with pytest.raises(MismatchedVoterCountError):
        median(dictators3[0], dictators3[1], dictatorship(4, 1))


def test_chi_by_third_voter_is_majority(dem3, dictators3):
    assert chi(3, dictators3[0], dictators3[1]) == dem3


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_chi_equals_median_with_dictator(n):
    """chi_a(S, T) = m(S, T, Dict_a) on every pair of ipsodual games"""
    games = enumerate_ipsodual(n)
    for first, second in itertools.product(games, repeat=2):
        for a in range(1, n + 1):
            assert chi(a, first, second) == median(first, second, dictatorship(n, a))


def test_dual_commutes_with_median():
    games = [Game(3, mask) for mask in monotone_functions(3)]
    for first, second, third in itertools.product(games, repeat=3):
        assert dual(median(first, second, third)) == median(dual(first), dual(second), dual(third))


def test_median_of_ipsodual_games_is_ipsodual():
    games = enumerate_ipsodual(4)
    for triple in itertools.combinations(games, 3):
        assert is_ipsodual(median(*triple))


def test_compound_of_dictators_is_outer(dem3, dictators3):
    assert compound(dem3, dictators3) == dem3


def test_compound_arity_mismatch(dem3, dictators3):
    with pytest.raises(ArityMismatchError):
        compound(dem3, dictators3[:2])


def test_quotient_merging_two_offices(dem3):
    """Offices 1 and 2 both go to voter 1: voter 1 alone already wins"""
    voter_map = VoterMap.from_pairs("1:1,2:1,3:2", 3, 2)
    assert quotient(dem3, voter_map) == dictatorship(2, 1)


def _maps(n):
    return [VoterMap(n, n, image) for image in itertools.product(range(n), repeat=n)]


def _random_game(rng, n):
    coalitions = [
        [v for v in range(1, n + 1) if rng.random() < 0.5]
        for _ in range(rng.randint(1, 6))
    ]
    return upward_closure(n, coalitions)


def _keeps_strong_and_simple(game, voter_map):
    before, after = classify(game), classify(quotient(game, voter_map))
    if before.is_strong:
        assert after.is_strong
    if before.is_simple:
        assert after.is_simple


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_quotients_keep_strong_and_simple_games(n):
    maps = _maps(n)
    for mask in monotone_functions(n):
        game = Game(n, mask)
        for voter_map in maps:
            _keeps_strong_and_simple(game, voter_map)


@pytest.mark.parametrize("n", [5, 6])
def test_quotients_keep_strong_and_simple_games_sampled(n):
    rng = random.Random(1000 + n)
    for _ in range(300):
        game = _random_game(rng, n)
        image = tuple(rng.randrange(n) for _ in range(n))
        _keeps_strong_and_simple(game, VoterMap(n, n, image))


def test_quotient_of_quota_game_sums_weights():
    rng = random.Random(31)
    for _ in range(300):
        n = rng.randint(1, 6)
        m = rng.randint(1, 6)
        weights = tuple(rng.randint(0, 9) for _ in range(n))
        q = rng.randint(0, sum(weights) + 1)
        image = tuple(rng.randrange(m) for _ in range(n))
        summed = tuple(sum(w for w, j in zip(weights, image) if j == target) for target in range(m))
        merged = quotient(compile_quota(QuotaGame(weights, q)), VoterMap(n, m, image))
        assert merged == compile_quota(QuotaGame(summed, q))


def test_embed_places_game_at_offset():
    assert embed(dictatorship(1, 1), 3, 2) == dictatorship(3, 3)


def test_substitute_makes_follower_a_dummy(dem3):
    result = substitute(dem3, 1, 2)
    assert result == dictatorship(3, 2)
    assert 1 in dummy_voters(result)


def test_oppose_in_majority(dem3):
    assert oppose(dem3, 1, 2) == dictatorship(3, 3)


def test_oppose_needs_weaker_first_voter():
    """In (2111)_3 voter 1 is strictly stronger than voter 2"""
    game = quota("(2111)_3")
    oppose(game, 2, 1)
    with pytest.raises(NotMonotoneError) as caught:
        oppose(game, 1, 2)
    witness = caught.value.witness
    assert 1 not in witness and 2 not in witness


@pytest.mark.parametrize("n", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_oppose_is_a_game_exactly_when_the_opponent_is_stronger(n):
    for mask in monotone_functions(n):
        game = Game(n, mask)
        for x, y in itertools.permutations(range(1, n + 1), 2):
            try:
                oppose(game, x, y)
                opposed = True
            except NotMonotoneError:
                opposed = False
            assert opposed == influence_geq(game, y, x)


def test_same_voter_rejected(dem3):
    with pytest.raises(SameVoterError):
        substitute(dem3, 2, 2)
    with pytest.raises(SameVoterError):
        oppose(dem3, 2, 2)


def test_influence_weighted_order():
    game = quota("(2111)_3")
    assert influence_geq(game, 1, 2)
    assert not influence_geq(game, 2, 1)
    assert influence_geq(game, 3, 4) and influence_geq(game, 4, 3)


def test_influence_chain_of_s6_23():
    classes, total = influence_classes(s6(23))
    assert total
    assert format_influence(classes) == "1 > 2~3 > 4~5 > 6"


def test_icosahedral_game_has_trivial_influence():
    assert comparable_pairs(icosahedral_game()) == []
    _, total = influence_classes(icosahedral_game())
    assert not total


def test_comparable_pairs_are_ordered(dem3):
    pairs = comparable_pairs(dem3)
    assert pairs == [(1, 2, False), (1, 3, False), (2, 1, False), (2, 3, False), (3, 1, False), (3, 2, False)]
    strict = comparable_pairs(quota("(21)_2"))
    assert (2, 1, True) in strict


def test_win_type_of_small_tree(dem3):
    assert win_type(parse_tree("1(2,3)"), 3) == dem3
    assert win_type(GameTree(2), 3) == dictatorship(3, 2)


def test_win_type_rejects_large_labels():
    with pytest.raises(LabelOutOfRangeError):
        win_type(parse_tree("1(2,5)"), 3)


def _random_tree(rng, n, height):
    if height == 0 or rng.random() < 0.3:
        return GameTree(rng.randint(1, n))
    children = [_random_tree(rng, n, height - 1) for _ in range(rng.randint(2, 3))]
    return GameTree(rng.randint(1, n), children)


def test_win_type_of_random_trees_is_ipsodual():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 7)
        assert is_ipsodual(win_type(_random_tree(rng, n, 4), n))


def test_tree_text_round_trip():
    text = "1(2(4,5),3(6,7))"
    tree = parse_tree(text)
    assert str(tree) == text
    assert tree.height() == 2
    assert tree.labels() == set(range(1, 8))


def test_tree_parse_errors():
    with pytest.raises(ParseError):
        parse_tree("1(2)")
    with pytest.raises(ParseError):
        parse_tree("1(2,")


def test_three_way_move_folds_to_binary_choices():
    """1(2,3,1) lets voter 1 pick among three leaves, one of them itself"""
    game = win_type(parse_tree("1(2,3,1)"), 3)
    assert game == dictatorship(3, 1)
    assert not game.wins({2, 3})
    assert win_type(parse_tree("1(2,3,3)"), 3) == win_type(parse_tree("1(2,3)"), 3)
