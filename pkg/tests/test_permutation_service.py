"""
Tests for relabeling, canonical forms and automorphisms
"""
import pytest

from config.settings import settings
from simplegames.errors import BudgetExceededError
from simplegames.services.game_core import add_dummy, dictatorship
from simplegames.services.permutation_service import (
    automorphisms,
    canonical_form,
    has_transitive_automorphism_group,
    is_isomorphic,
    placement_count,
    relabel,
    relabelings,
)
from tests.conftest import quota


def test_canonical_form_is_constant_on_orbits():
    assert canonical_form(dictatorship(3, 3)) == canonical_form(dictatorship(3, 1))
    form = canonical_form(quota("(2111)_3"))
    assert canonical_form(form) == form
    assert canonical_form(quota("(1112)_3")) == form


def test_isomorphism(dem3):
    assert is_isomorphic(quota("(2111)_3"), quota("(1112)_3"))
    assert not is_isomorphic(dem3, dictatorship(3, 1))
    assert not is_isomorphic(dem3, quota("(1110)_2"))


def test_relabel(dem3):
    # voter 3 takes the role of voter 1
    assert relabel(dictatorship(3, 1), (2, 1, 0)) == dictatorship(3, 3)
    assert relabel(dem3, (0, 1, 2), 4) == add_dummy(dem3)


def test_automorphisms(dem3):
    assert len(automorphisms(dem3)) == 6
    assert automorphisms(quota("(2111)_3")) == [
        (0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3), (0, 2, 3, 1), (0, 3, 1, 2), (0, 3, 2, 1),
    ]


def test_transitive_groups(dem3):
    assert has_transitive_automorphism_group(dem3)
    assert not has_transitive_automorphism_group(quota("(2111)_3"))


def test_placements(dem3):
    assert placement_count(3, 4) == 24
    assert len(relabelings(dem3, 4)) == 4
    assert len(relabelings(quota("(2111)_3"))) == 4


def test_placement_budget(dem3, monkeypatch):
    monkeypatch.setattr(settings, "PLACEMENT_BUDGET", 10)
    with pytest.raises(BudgetExceededError):
        relabelings(dem3, 4)
