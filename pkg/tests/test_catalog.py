"""
Tests for named games, the embedded table and game-spec resolution
"""
import pytest

from simplegames.errors import BadIndexError, ParseError, TooLargeError
from simplegames.services.algebra import chi, median, substitute
from simplegames.services.catalog import (
    S6_22_OPERANDS,
    bk_game,
    dem3_power,
    fano_game,
    icosahedral_game,
    named,
    names,
    resolve,
    s6,
    table_rows,
)
from simplegames.services.expr_parser import parse_expression
from simplegames.services.game_core import (
    compile_quota,
    dictatorship,
    is_ipsodual,
    min_winning,
    powerful_voters,
    strip_dummies,
)
from simplegames.services.permutation_service import has_transitive_automorphism_group, is_isomorphic
from tests.conftest import quota


class TestNamedGames:
    def test_dem3_powers(self, dem3):
        assert dem3_power(0) == dictatorship(1, 1)
        assert dem3_power(1) == dem3
        squared = dem3_power(2)
        assert squared.n_voters == 9
        coalitions = min_winning(squared)
        assert len(coalitions) == 27
        assert all(len(c) == 4 for c in coalitions)
        assert is_ipsodual(squared)

    def test_dem3_power_range(self):
        with pytest.raises(TooLargeError):
            dem3_power(3)
        with pytest.raises(BadIndexError):
            dem3_power(-1)

    def test_binary_tree_games(self, dem3):
        assert bk_game(0) == dictatorship(1, 1)
        # the root chooses between the two leaves
        assert bk_game(1) == quota("(111)_2")
        assert bk_game(2).n_voters == 7
        assert is_ipsodual(bk_game(2))
        with pytest.raises(TooLargeError):
            bk_game(3)

    def test_fano(self):
        game = fano_game()
        assert len(min_winning(game)) == 7
        assert is_ipsodual(game)
        assert has_transitive_automorphism_group(game)

    def test_icosahedral(self):
        game = icosahedral_game()
        coalitions = min_winning(game)
        assert len(coalitions) == 10
        assert all(len(c) == 3 for c in coalitions)
        assert is_ipsodual(game)
        assert is_isomorphic(game, s6(30))

    def test_s6_family(self):
        games = [s6(k) for k in range(21, 31)]
        for game in games:
            assert game.n_voters == 6
            assert len(powerful_voters(game)) == 6
            assert is_ipsodual(game)
        for i, first in enumerate(games):
            for second in games[i + 1:]:
                assert not is_isomorphic(first, second)

    def test_s6_index_range(self):
        with pytest.raises(BadIndexError):
            s6(20)

    def test_s6_22_is_fano_with_two_points_merged(self):
        merged, _ = strip_dummies(substitute(fano_game(), 7, 6))
        assert is_isomorphic(merged, s6(22))
        first, second = (compile_quota(operand) for operand in S6_22_OPERANDS)
        assert s6(22) == chi(1, first, second)

    def test_fano_is_median_of_merged_copies(self):
        fano = fano_game()
        copies = [substitute(fano, 1, 2), substitute(fano, 2, 3), substitute(fano, 3, 1)]
        assert median(*copies) == fano
        for copy in copies:
            assert is_isomorphic(strip_dummies(copy)[0], s6(22))

    @pytest.mark.slow
    def test_s6_22_measures(self, engine):
        assert engine.weight(s6(22)) == 3
        assert engine.depth(s6(22)) == 3

    def test_every_name_resolves(self):
        for name in names():
            assert named(name).n_voters >= 1

    def test_unknown_name(self):
        with pytest.raises(ParseError):
            named("tetra")


class TestTable:
    def test_row_counts(self):
        rows = table_rows()
        assert len(rows) == 38
        assert sum(1 for row in rows if row.n <= 6) == 30

    def test_every_expression_parses(self):
        for row in table_rows()[1:]:
            parse_expression(row.median_expr, named)
            parse_expression(row.chi_expr, named)
        assert table_rows()[0].median_expr is None

    def test_flags(self):
        by_title = {row.title: row for row in table_rows()}
        assert {"heart", "star"} <= set(by_title["Fano"].flags)
        assert {"heart", "star"} <= set(by_title["I=S_{6,30}"].flags)


class TestResolve:
    @pytest.mark.parametrize(
        "spec,expected",
        [
            ("(111)_2", "3:E8"),
            ("3:E8", "3:E8"),
            ("  3 : e8 ", "3:E8"),
            ("dem3^1", "3:E8"),
            ("Dem_3^1", "3:E8"),
            ("b_1", "3:E8"),
            ("chi_1(Dict_2,Dict_3)", "3:E8"),
            ("m(Dict_1,Dict_2,Dict_3)", "3:E8"),
        ],
    )
    def test_specs(self, spec, expected):
        assert str(resolve(spec)) == expected

    def test_named_table_games(self):
        assert resolve("S_{6,23}") == s6(23)
        assert resolve("s6.23") == s6(23)
        assert resolve("I") == icosahedral_game()
        assert resolve("fano") == fano_game()

    @pytest.mark.parametrize("spec", ["", "S'_{6,22}", "m((1110)_2,(1101)_2)", "(11)", "nonsense("])
    def test_rejected_specs(self, spec):
        with pytest.raises(ParseError):
            resolve(spec)
