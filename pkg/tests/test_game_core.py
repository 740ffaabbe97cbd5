"""
Tests for game construction, duality, classification and quota notation
"""
import pytest

from simplegames.errors import NotMonotoneError, ParseError, TooLargeError, VoterOutOfRangeError
from simplegames.models.game import Game, QuotaGame, coalition_index, coalition_voters
from simplegames.services.game_core import (
    add_dummy,
    classify,
    compile_quota,
    dictatorship,
    dual,
    dummy_voters,
    format_quota,
    from_hex,
    from_mask,
    hat0,
    hat1,
    is_homogeneous,
    is_ipsodual,
    max_losing,
    min_winning,
    new_game,
    parse_quota,
    powerful_voters,
    restrict,
    strip_dummies,
    upward_closure,
)
from tests.conftest import quota


def test_dem3_mask_and_hex(dem3):
    """Majority of three wins on {1,2}, {1,3}, {2,3} and {1,2,3}"""
    assert dem3.mask == 0b11101000
    assert dem3.to_hex() == "E8"
    assert str(dem3) == "3:E8"


def test_hex_width_has_at_least_one_digit():
    assert dictatorship(1, 1).to_hex() == "2"
    assert dictatorship(2, 1).to_hex() == "A"


def test_from_hex_round_trip(dem3):
    assert from_hex(3, "E8") == dem3
    assert from_hex(3, "e8") == dem3


def test_from_mask_validates(dem3):
    assert from_mask(3, 0xE8) == dem3
    with pytest.raises(NotMonotoneError):
        from_mask(2, 0b0010)


def test_from_hex_rejects_bad_text():
    with pytest.raises(ParseError):
        from_hex(3, "XYZ")
    with pytest.raises(ParseError):
        from_hex(2, "1FF")


def test_non_monotone_mask_raises_with_witness():
    """{1} wins but {1,2} loses"""
    with pytest.raises(NotMonotoneError) as caught:
        Game(2, 0b0010)
    assert caught.value.witness == frozenset({1})


def test_new_game_requires_upward_closed_set():
    with pytest.raises(NotMonotoneError):
        new_game(3, [{1, 2}])
    assert new_game(2, [{1}, {1, 2}]) == dictatorship(2, 1)


def test_upward_closure_of_pairs_is_majority(dem3):
    assert upward_closure(3, [{1, 2}, {1, 3}, {2, 3}]) == dem3


def test_coalition_helpers_are_one_based():
    assert coalition_index({1, 3}) == 0b101
    assert coalition_voters(0b101) == frozenset({1, 3})
    with pytest.raises(VoterOutOfRangeError):
        coalition_index({4}, 3)


def test_dictatorship_rejects_out_of_range_voter():
    with pytest.raises(VoterOutOfRangeError):
        dictatorship(3, 4)


def test_voter_cap_is_enforced():
    with pytest.raises(TooLargeError):
        Game(13, 0)


def test_dual_of_dem3_is_itself(dem3):
    assert dual(dem3) == dem3
    assert is_ipsodual(dem3)


def test_dual_swaps_unanimity_and_any():
    unanimity = quota("(11)_2")
    anyone = quota("(11)_1")
    assert dual(unanimity) == anyone
    assert dual(dual(unanimity)) == unanimity


def test_classify_simple_strong_ipsodual(dem3):
    result = classify(dem3)
    assert result.is_simple and result.is_strong and result.is_ipsodual
    assert result.powerful == frozenset({1, 2, 3})

    unanimity = classify(quota("(11)_2"))
    assert unanimity.is_simple and not unanimity.is_strong

    anyone = classify(quota("(11)_1"))
    assert anyone.is_strong and not anyone.is_simple


def test_hats():
    assert hat0(3).mask == 0
    assert hat1(3).size == 8
    assert powerful_voters(hat1(3)) == frozenset()


def test_minimal_winning_and_maximal_losing():
    game = quota("(2111)_3")
    assert sorted(sorted(c) for c in min_winning(game)) == [[1, 2], [1, 3], [1, 4], [2, 3, 4]]
    assert sorted(sorted(c) for c in max_losing(game)) == [[1], [2, 3], [2, 4], [3, 4]]


@pytest.mark.parametrize("text,weights,q", [
    ("(2111)_3", (2, 1, 1, 1), 3),
    ("(12,1,1)_13", (12, 1, 1), 13),
    ("(12,1,1)_{13}", (12, 1, 1), 13),
    ("(100000)_1", (1, 0, 0, 0, 0, 0), 1),
])
def test_parse_quota(text, weights, q):
    assert parse_quota(text) == QuotaGame(weights, q)


@pytest.mark.parametrize("text", ["(2111)", "2111_3", "(a,b)_1", ""])
def test_parse_quota_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_quota(text)


def test_format_quota_switches_to_commas_above_nine():
    assert format_quota(QuotaGame((2, 1, 1, 1), 3)) == "(2111)_3"
    assert format_quota(QuotaGame((12, 1, 1), 13)) == "(12,1,1)_13"


@pytest.mark.parametrize("quota_game", [
    QuotaGame((12,), 3),
    QuotaGame((12,), 13),
    QuotaGame((10, 0), 10),
    QuotaGame((3, 2, 2, 1, 1), 5),
    QuotaGame((9,), 1),
])
def test_format_quota_round_trips(quota_game):
    assert parse_quota(format_quota(quota_game)) == quota_game


def test_single_large_weight_keeps_its_comma():
    assert format_quota(QuotaGame((12,), 3)) == "(12,)_3"
    assert parse_quota("(12,)_3") == QuotaGame((12,), 3)


def test_compile_quota_zero_quota_is_hat1():
    assert compile_quota(QuotaGame((1, 1), 0)) == hat1(2)


def test_homogeneous_quota_games():
    assert is_homogeneous(QuotaGame((2, 1, 1, 1), 3))
    assert not is_homogeneous(QuotaGame((3, 2), 2))


def test_dummies_and_strip(dem3):
    padded = add_dummy(add_dummy(dem3))
    assert padded.n_voters == 5
    assert dummy_voters(padded) == frozenset({4, 5})
    core, voters = strip_dummies(padded)
    assert core == dem3
    assert voters == (1, 2, 3)


def test_strip_dummies_of_weighted_game_with_zero_weight():
    game = quota("(2011111)_4")
    core, voters = strip_dummies(game)
    assert voters == (1, 3, 4, 5, 6, 7)
    assert core == quota("(211111)_4")


def test_restrict_holds_out_other_voters(dem3):
    assert restrict(dem3, [1, 2]) == quota("(11)_2")
