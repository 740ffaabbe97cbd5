"""
Tests for the classification table verifier
"""
import pytest

from simplegames.errors import ParseError
from simplegames.schemas.table_schema import Table1Row
from simplegames.services.catalog import icosahedral_game, s6
from simplegames.services.table_verifier import TableVerifier, label_games, select_rows, verify_table

CHECK_ORDER = ["median", "chi", "label", "weight", "depth", "transitive"]


@pytest.fixture
def verifier(engine):
    return TableVerifier(engine)


def _statuses(report):
    return {check.name: check.status for check in report.checks}


class TestRowSelection:
    def test_all_rows_by_default(self):
        assert len(select_rows()) == 38
        assert len(select_rows([])) == 38

    def test_by_position_and_label(self):
        assert select_rows(["2"])[0].label == "(111)_2"
        assert [row.label for row in select_rows(["(111)_2", "1"])] == ["(111)_2", "(1)_1"]

    @pytest.mark.parametrize("item", ["0", "39", "(99)_1"])
    def test_unknown_rows(self, item):
        with pytest.raises(ParseError):
            select_rows([item])

    def test_label_games(self):
        assert label_games(None) == []
        games = label_games("I=S_{6,30}")
        assert [text for text, _ in games] == ["I", "S_{6,30}"]
        assert games[0][1] == icosahedral_game()
        assert games[1][1] == s6(30)


class TestRows:
    def test_majority_row_passes_every_check(self, verifier):
        report = verifier.verify_row(select_rows(["(111)_2"])[0])
        assert [check.name for check in report.checks] == CHECK_ORDER
        assert all(check.status == "pass" for check in report.checks)
        assert not report.failed

    def test_small_rows_do_not_fail(self, verifier):
        report = verifier.verify([row for row in select_rows() if row.n <= 5])
        assert report.count == 7
        assert report.status == "success"
        for row in report.rows:
            assert _statuses(row)["weight"] == "pass"
            if row.row != "(32211)_5":
                assert _statuses(row)["depth"] == "pass"

    def test_depth_erratum_is_a_bound(self, verifier):
        report = verifier.verify_row(select_rows(["(32211)_5"])[0])
        depth = next(check for check in report.checks if check.name == "depth")
        assert depth.status == "bound"
        assert depth.detail.startswith("erratum: table claims 3, exact value computed = 2")
        assert not report.failed

    def test_choice_operands_are_placed(self, verifier):
        row = Table1Row(
            n=4,
            label="(2111)_3",
            w=2,
            d=2,
            median_expr="m((1110)_2,(1101)_2,(1011)_2)",
            chi_expr="chi_1((1000)_1,(1110)_2)",
        )
        report = verifier.verify_row(row)
        chi = report.checks[1]
        assert chi.status == "pass"
        assert chi.detail.startswith("bit-equal")
        assert chi.detail.endswith("with placed operands")
        assert not report.failed

    def test_unplaceable_choice_fails(self, verifier):
        row = Table1Row(
            n=3, label="(111)_2", w=1, d=1, median_expr="m(Dict_1,Dict_2,Dict_3)", chi_expr="chi_1((110)_2,(110)_2)"
        )
        chi = verifier.verify_row(row).checks[1]
        assert chi.status == "fail"
        assert "no placement" in chi.detail

    def test_binary_tree_row(self, verifier):
        report = verifier.verify_row(select_rows(["B_2"])[0])
        statuses = _statuses(report)
        assert statuses["label"] == "pass"
        assert statuses["weight"] == "pass"
        assert statuses["depth"] == "pass"
        assert not report.failed

    def test_wrong_claim_fails(self, verifier):
        row = Table1Row(n=3, label="(111)_2", w=2, d=1, median_expr="m(Dict_1,Dict_2,Dict_3)")
        report = verifier.verify_row(row)
        assert report.failed
        assert _statuses(report)["weight"] == "fail"
        assert _statuses(report)["chi"] == "skip"

    def test_uncertain_claim_is_a_bound(self, verifier):
        row = Table1Row(n=3, label="(111)_2", w=2, d=1, median_expr="m(Dict_1,Dict_2,Dict_3)", flags=["w_q"])
        report = verifier.verify_row(row)
        weight = next(check for check in report.checks if check.name == "weight")
        assert weight.status == "bound"
        assert weight.detail == "upper bound 2 verified, exact value computed = 1"
        assert not report.failed

    def test_open_dictator_is_resolved(self, verifier):
        row = Table1Row(n=3, label="(111)_2", w=1, d=1, median_expr="m(Dict_1,Dict_2)")
        report = verifier.verify_row(row)
        median = report.checks[0]
        assert median.status == "pass"
        assert median.detail.startswith("bit-equal")

    def test_mismatched_label_fails(self, verifier):
        row = Table1Row(n=4, label="(2111)_3", w=1, d=1, median_expr="m(Dict_1,Dict_2,Dict_3)")
        assert _statuses(verifier.verify_row(row))["label"] == "fail"

    def test_bad_expression_is_reported_not_raised(self, verifier):
        row = Table1Row(n=3, label="(111)_2", w=1, d=1, median_expr="m(Dict_1,")
        report = verifier.verify_row(row)
        assert report.failed
        assert report.checks[-1].detail.startswith("ParseError")


@pytest.mark.slow
class TestLargeRows:
    def test_heavy_quota_row(self, verifier):
        assert not verifier.verify_row(select_rows(["(533211)_8"])[0]).failed

    def test_dem3_squared_row(self, verifier):
        report = verifier.verify_row(select_rows(["Dem_3^2"])[0])
        assert _statuses(report)["weight"] == "pass"
        assert _statuses(report)["depth"] == "pass"
        assert _statuses(report)["transitive"] == "pass"
        assert not report.failed

    def test_fano_row(self, verifier):
        report = verifier.verify_row(select_rows(["Fano"])[0])
        assert _statuses(report)["transitive"] == "pass"
        assert not report.failed

    def test_full_table(self, engine):
        report = verify_table(engine)
        assert report.count == 38
        assert report.status == "success"

    @pytest.mark.parametrize("item", ["(211111)_4", "S_{6,28}", "33", "34", "(1111111)_4"])
    def test_printed_choice_rows_pass_with_placed_operands(self, verifier, item):
        report = verifier.verify_row(select_rows([item])[0])
        assert _statuses(report)["chi"] == "pass"
        assert not report.failed

    def test_merged_fano_row(self, verifier):
        report = verifier.verify_row(select_rows(["S_{6,22}"])[0])
        statuses = _statuses(report)
        assert report.checks[0].detail.endswith("with placed operands")
        assert statuses["median"] == "pass"
        assert statuses["label"] == "pass"
        assert statuses["weight"] == "pass"
        assert not report.failed

    def test_fano_median_of_merged_copies(self, verifier):
        report = verifier.verify_row(select_rows(["Fano"])[0])
        statuses = _statuses(report)
        assert statuses["median"] == "pass"
        assert statuses["weight"] in {"pass", "bound"}
