"""
Shared fixtures: one search engine per session so closures are built once
"""
import pytest

from simplegames.services.game_core import compile_quota, dictatorship, parse_quota
from simplegames.services.search_engine import SearchEngine, enumerate_ipsodual


@pytest.fixture(scope="session")
def engine():
    return SearchEngine(threads=1)


@pytest.fixture
def dem3():
    return compile_quota(parse_quota("(111)_2"))


@pytest.fixture
def dictators3():
    return [dictatorship(3, v) for v in (1, 2, 3)]


@pytest.fixture(scope="session")
def small_universe():
    """Every ipsodual game on 1..5 voters"""
    return [game for n in range(1, 6) for game in enumerate_ipsodual(n)]


def quota(text):
    return compile_quota(parse_quota(text))
